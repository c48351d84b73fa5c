"""Exact computer algebra for cyclotomic Sergeev superalgebras and their centers."""

__version__ = "1.0.0"

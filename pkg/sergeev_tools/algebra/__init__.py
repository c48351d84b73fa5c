"""
Algebra library: combinatorics, gr S^f_d, S^f_d, named element families and centers.
"""

"""
Utility functions.
"""

from typing import Any, Dict, List


def deep_merge(dest: Dict[str, Any], update: Dict[str, Any]) -> Dict[str, Any]:
    """
    Deep merge two dictionaries.
    Like `dict.update`, but instead of updating only top-level keys, perform recursive dict merge.
    """
    for key, value in update.items():
        if key in dest and isinstance(dest[key], dict) and isinstance(value, dict):
            deep_merge(dest[key], value)
        else:
            dest[key] = value
    return dest


def split_items(value: str, separator: str = ",") -> List[str]:
    """
    Split a separated list, dropping surrounding whitespace and empty items.
    """
    return [item.strip() for item in value.split(separator) if item.strip()]


def parse_int_list(value: str, separator: str = ",") -> List[int]:
    """
    Parse "1,2,3" into [1, 2, 3].
    """
    try:
        return [int(item) for item in split_items(value, separator)]
    except ValueError:
        raise ValueError(f'"{value}" is not a list of integers')

"""
YAML for config files and the yaml output format. Dicts keep insertion order, multiline
strings use the literal style and exact scalars are written as strings.
"""

import os
import sys
from fractions import Fraction

import yaml
import yaml.representer


def dict_representer(dumper, data):
    return yaml.representer.SafeRepresenter.represent_dict(dumper, data.items())


def str_representer(dumper, data):
    style = "|" if "\n" in data else None
    return yaml.representer.SafeRepresenter.represent_scalar(
        dumper, "tag:yaml.org,2002:str", data, style=style
    )


def fraction_representer(dumper, data):
    return str_representer(dumper, str(data))


yaml.add_representer(dict, dict_representer)
yaml.add_representer(str, str_representer)
yaml.add_representer(Fraction, fraction_representer)


def load_yaml(file_path: str) -> dict:
    with open(os.path.expanduser(file_path), "r", encoding="utf-8") as f:
        return yaml.safe_load(f) or {}


def dump_yaml(data) -> str:
    return yaml.dump(data, default_flow_style=False, allow_unicode=True, width=sys.maxsize)

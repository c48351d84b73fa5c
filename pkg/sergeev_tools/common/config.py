import os
from copy import deepcopy
from typing import Any, Dict, Optional

from sergeev_tools.common.utils import deep_merge
from sergeev_tools.common.yaml import load_yaml

CONFIG_FILE = "/etc/sergeev-tools/config.yaml"
CONFIG_ENV_VAR = "SERGEEV_TOOLS_CONFIG"

DEFAULT_CONFIG: Dict[str, Any] = {
    "algebra": {
        "dimension_guard": 5000,
        "scalar_mode": "rational",
    },
    "verify": {
        "seed": 0,
        "random_samples": 200,
        "kernel_samples": 1000,
        "parallel": False,
    },
    "output": {
        "default_format": "json",
    },
    "loguru": {
        "formatters": {
            "sergeev-admin": "{time:YYYY-MM-DD HH:mm:ss,SSS} [{level:8}] {extra[logger_name]}: {message}",
            "console": "{level}: {message}",
        },
        # Extra sinks, e.g. {"sergeev-admin": {"sergeev-admin": {"sink": path, "level": "DEBUG",
        # "format": "sergeev-admin"}}}. The stderr console logger is added unless --quiet is given.
        "handlers": {
            "sergeev-admin": {},
        },
    },
}


def config_path() -> str:
    return os.environ.get(CONFIG_ENV_VAR, CONFIG_FILE)


def load_config(path: Optional[str] = None) -> Dict[str, Any]:
    """
    Read config file, apply defaults and return result configuration.
    """
    config = deepcopy(DEFAULT_CONFIG)

    path = path or config_path()
    if os.path.exists(path):
        loaded_config = load_yaml(path)
        deep_merge(config, loaded_config)

    return config

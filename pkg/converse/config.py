"""
converse/config.py

Project configuration, with environment configs
"""

import os
import pathlib
from functools import lru_cache
from typing import Optional

from dotenv import dotenv_values


class BaseConfig:
    BASE_DIR: pathlib.Path = pathlib.Path(__file__).parent.parent

    CONVERSE_CONFIG: str = os.environ.get("CONVERSE_CONFIG", "development")

    # Built-in data shipped with the package
    SCRIPTS_DIR: pathlib.Path = (
        pathlib.Path(__file__).parent / "hecke_ring" / "scripts"
    )
    GENERATORS_FILE: pathlib.Path = (
        pathlib.Path(__file__).parent
        / "congruence_subgroup"
        / "data"
        / "generators_v1.txt"
    )

    # Numeric protocol
    NUMERIC_TERMS: int = int(os.environ.get("NUMERIC_TERMS", "1000"))
    NUMERIC_TOL: float = float(os.environ.get("NUMERIC_TOL", "1e-8"))
    NUMERIC_MIN_IMAG: float = float(
        os.environ.get("NUMERIC_MIN_IMAG", "0.08")
    )
    CUSP_SAMPLES: int = int(os.environ.get("CUSP_SAMPLES", "64"))
    # horocycle height for cusp averages, in units of the cusp width
    CUSP_HEIGHT: float = float(os.environ.get("CUSP_HEIGHT", "1.0"))

    # Coset enumeration: cap = factor * psi(N) + offset
    COSET_CAP_FACTOR: int = int(os.environ.get("COSET_CAP_FACTOR", "10"))
    COSET_CAP_OFFSET: int = int(os.environ.get("COSET_CAP_OFFSET", "100"))

    # Largest prime-power exponent in generated H_N R_n H_{n^2 N} scripts
    THEOREM2_MAX_EXPONENT: int = int(
        os.environ.get("THEOREM2_MAX_EXPONENT", "3")
    )

    LOG_LEVEL: str = os.environ.get("LOG_LEVEL", "INFO")
    LOG_FORMAT: str = os.environ.get("LOG_FORMAT", "json")

    def override(self, values: dict) -> "BaseConfig":
        """Return a copy with the given keys replaced (types follow the defaults)"""
        clone = self.__class__()
        for key, raw in values.items():
            key = key.upper()
            if not hasattr(clone, key):
                raise KeyError(key)
            current = getattr(clone, key)
            if isinstance(current, bool):
                value = str(raw).lower() in ("1", "true", "yes")
            elif isinstance(current, (int, float, str)):
                value = type(current)(raw)
            else:
                value = raw
            setattr(clone, key, value)
        return clone


class DevelopmentConfig(BaseConfig):
    pass


class TestingConfig(BaseConfig):
    LOG_LEVEL: str = "WARNING"
    LOG_FORMAT: str = "text"


@lru_cache()
def get_settings():
    config_cls_dict = {
        "development": DevelopmentConfig,
        "testing": TestingConfig,
    }

    config_name = os.environ.get("CONVERSE_CONFIG", "development")
    config_cls = config_cls_dict[config_name]
    return config_cls()


# Short keys accepted in run config files
CONFIG_FILE_ALIASES = {
    "K": "NUMERIC_TERMS",
    "TERMS": "NUMERIC_TERMS",
    "TOL": "NUMERIC_TOL",
    "MIN_IMAG": "NUMERIC_MIN_IMAG",
    "COSET_CAP": "COSET_CAP_OFFSET",
}


def load_settings(path: Optional[str] = None) -> BaseConfig:
    """Settings for one run, optionally overridden by a key=value file"""
    base = get_settings()
    if not path:
        return base
    values = {}
    for key, value in dotenv_values(path).items():
        if value is None:
            continue
        key = CONFIG_FILE_ALIASES.get(key.upper(), key.upper())
        values[key] = value
    if "COSET_CAP_OFFSET" in values and "COSET_CAP_FACTOR" not in values:
        # an explicit cap replaces the psi-proportional default
        values["COSET_CAP_FACTOR"] = "0"
    return base.override(values)


settings = get_settings()

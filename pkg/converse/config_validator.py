"""
converse/config_validator.py

Validate configuration before a run
"""

import logging
import math
from typing import List, Optional, Tuple

from converse.config import BaseConfig, settings

logger = logging.getLogger(__name__)


class ConfigValidator:
    def __init__(self, config: Optional[BaseConfig] = None):
        self.config = config or settings
        self.errors: List[str] = []
        self.warnings: List[str] = []

    def validate_numeric(self):
        """Validate the numeric protocol"""
        cfg = self.config
        if cfg.NUMERIC_TERMS < 10:
            self.errors.append("NUMERIC_TERMS must be at least 10")
        if not (cfg.NUMERIC_TOL > 0 and math.isfinite(cfg.NUMERIC_TOL)):
            self.errors.append("NUMERIC_TOL must be a positive number")
        elif cfg.NUMERIC_TOL < 1e-13:
            self.warnings.append(
                "NUMERIC_TOL below 1e-13 is under double-precision noise"
            )
        if cfg.NUMERIC_MIN_IMAG <= 0:
            self.errors.append("NUMERIC_MIN_IMAG must be positive")
        if cfg.CUSP_SAMPLES < 8:
            self.errors.append("CUSP_SAMPLES must be at least 8")
        if cfg.CUSP_HEIGHT <= 0:
            self.errors.append("CUSP_HEIGHT must be positive")

    def validate_enumeration(self):
        """Validate coset enumeration limits"""
        cfg = self.config
        if cfg.COSET_CAP_FACTOR < 0 or cfg.COSET_CAP_OFFSET < 0:
            self.errors.append("coset cap settings must be non-negative")
        if cfg.COSET_CAP_FACTOR == 0 and cfg.COSET_CAP_OFFSET < 24:
            self.warnings.append(
                "a fixed coset cap below 24 cannot certify the shipped levels"
            )
        if cfg.THEOREM2_MAX_EXPONENT < 1:
            self.errors.append("THEOREM2_MAX_EXPONENT must be at least 1")

    def validate_environment(self):
        """Validate paths and logging"""
        cfg = self.config
        if not cfg.SCRIPTS_DIR.is_dir():
            self.errors.append(f"SCRIPTS_DIR {cfg.SCRIPTS_DIR} does not exist")
        if not cfg.GENERATORS_FILE.is_file():
            self.errors.append(
                f"GENERATORS_FILE {cfg.GENERATORS_FILE} does not exist"
            )
        if cfg.LOG_FORMAT not in ("json", "text"):
            self.warnings.append(f"unknown LOG_FORMAT {cfg.LOG_FORMAT!r}")

    def validate_all(self) -> Tuple[List[str], List[str]]:
        """Run all validations"""
        self.errors, self.warnings = [], []
        self.validate_numeric()
        self.validate_enumeration()
        self.validate_environment()

        for warning in self.warnings:
            logger.warning("configuration warning: %s", warning)
        return self.errors, self.warnings


config_validator = ConfigValidator()

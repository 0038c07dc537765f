import json
import logging
from pathlib import Path
from typing import Any, Dict, Optional

import yaml
from logzero import logfile, logger

from core.errors import InputError, ParseError


class FanoPoissonHelpers:
    """Utility functions for the fano-poisson toolkit."""

    @staticmethod
    def setup_logging(log_name: str, settings=None, root_dir: Optional[Path] = None) -> Path:
        """Configure logging with logzero."""
        try:
            if root_dir is None:
                root_dir = Path(__file__).resolve().parent.parent
            directory, level = Path("logs"), "INFO"
            max_bytes, backup_count = 5_000_000, 5
            if settings is not None:
                directory, level = Path(settings.logging.directory), settings.logging.level
                max_bytes, backup_count = settings.logging.max_bytes, settings.logging.backup_count
            if not directory.is_absolute():
                directory = root_dir / directory
            log_path = directory / f"{log_name}.log"
            log_path.parent.mkdir(parents=True, exist_ok=True)
            logfile(log_path, maxBytes=max_bytes, backupCount=backup_count)
            logger.setLevel(getattr(logging, level))
            logger.info(f"Logging initialized for {log_name}")
            return log_path
        except Exception as e:
            logger.error(f"Failed to setup logging for {log_name}: {e}")
            raise

    @staticmethod
    def load_yaml(filename: str, config_dir: str = "config") -> Dict:
        """Load YAML file from config directory."""
        config_path = Path(config_dir) / filename
        try:
            with open(config_path, "r") as f:
                return yaml.safe_load(f)
        except yaml.YAMLError as e:
            logger.error(f"Failed to parse {config_path}: {e}")
            raise ParseError(f"Malformed YAML in {config_path}") from e
        except OSError as e:
            logger.error(f"Failed to load {filename}: {e}")
            raise InputError(f"Cannot read {config_path}: {e.strerror}") from e

    @staticmethod
    def load_json(path: str) -> Any:
        """Load a JSON input file."""
        try:
            with open(path, "r") as f:
                return json.load(f)
        except json.JSONDecodeError as e:
            logger.error(f"Failed to parse {path}: {e}")
            raise ParseError(f"Malformed JSON in {path}: line {e.lineno}") from e
        except OSError as e:
            logger.error(f"Failed to load {path}: {e}")
            raise InputError(f"Cannot read {path}: {e.strerror}") from e

import os
import yaml
import logging
from dotenv import load_dotenv
from typing import Any, Dict

# Use standard logging to avoid circular import with utils.logger
logger = logging.getLogger(__name__)

# Load environment variables
load_dotenv()

PROJECT_ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))


class ConfigLoader:
    _settings: Dict[str, Any] = {}

    @classmethod
    def load_settings(cls, settings_path: str = "config/settings.yaml") -> Dict[str, Any]:
        """Load settings from YAML file and override with env vars."""
        if not os.path.exists(settings_path):
            # Fallback if running from a different directory
            settings_path = os.path.join(os.path.dirname(__file__), "settings.yaml")

        if os.path.exists(settings_path):
            with open(settings_path, "r") as f:
                cls._settings = yaml.safe_load(f) or {}

        cls._inject_env_vars()
        return cls._settings

    @classmethod
    def _inject_env_vars(cls):
        """Apply THOM_* environment overrides on top of the YAML settings."""
        logger.debug("=== CONFIG LOADING ===")

        if os.getenv("THOM_LOG_LEVEL"):
            cls._settings.setdefault("logging", {})["level"] = os.getenv("THOM_LOG_LEVEL")
        if os.getenv("THOM_SEED"):
            cls._settings.setdefault("engine", {})["seed"] = int(os.getenv("THOM_SEED"))
            logger.debug(f"Sampling seed overridden: {os.getenv('THOM_SEED')}")
        if os.getenv("THOM_WORKERS"):
            cls._settings.setdefault("engine", {})["workers"] = int(os.getenv("THOM_WORKERS"))
        if os.getenv("THOM_TABLE_DIR"):
            cls._settings.setdefault("euler", {})["table_dir"] = os.getenv("THOM_TABLE_DIR")

    @classmethod
    def get(cls, path: str, default: Any = None) -> Any:
        """Get a setting value using dot notation (e.g., 'engine.seed')."""
        keys = path.split(".")
        value = cls._settings
        for key in keys:
            if isinstance(value, dict):
                value = value.get(key)
            else:
                return default
        return value if value is not None else default

    @classmethod
    def resolve_path(cls, path: str) -> str:
        """Resolve a configured path against the working directory, then the project root."""
        if os.path.isabs(path) or os.path.exists(path):
            return path
        return os.path.join(PROJECT_ROOT, path)


# Initialize settings on import
ConfigLoader.load_settings()

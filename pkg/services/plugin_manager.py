import os
import importlib.util
import inspect
from typing import Any, Dict, List, Optional

from services.jobs import JobSpec
from services.output import ResultDocument
from utils.logger import logger


class Plugin:
    """Base class for all command plugins."""
    name: str = "BasePlugin"
    description: str = "Base plugin description"
    commands: List[str] = []  # CLI commands this plugin handles

    def __init__(self, config: Dict[str, Any] = None):
        self.config = config or {}

    def handle(self, command: str, job: JobSpec, context: Dict[str, Any]) -> ResultDocument:
        """Run one command and return its result document."""
        raise NotImplementedError("Plugins must implement handle()")


class PluginManager:
    """Discovers command plugins and maps CLI commands to them."""

    def __init__(self):
        self.plugins: Dict[str, Plugin] = {}
        self.command_map: Dict[str, Plugin] = {}

    def load_plugins(self, plugin_dir: str = "plugins"):
        """Dynamically load plugins from the specified directory."""
        logger.debug(f"Loading plugins from {plugin_dir}...")

        base_path = os.path.abspath(plugin_dir)
        if not os.path.exists(base_path):
            logger.warning(f"Plugin directory {base_path} does not exist.")
            return

        # Sorted walk so registration order does not depend on the filesystem.
        for root, dirs, files in os.walk(base_path):
            dirs.sort()
            for file in sorted(files):
                if file.endswith(".py") and not file.startswith("__"):
                    self._load_plugin_from_file(os.path.join(root, file), base_path)

    def _load_plugin_from_file(self, file_path: str, base_path: str):
        try:
            # plugins/standard/tp.py -> plugins.standard.tp
            rel_path = os.path.relpath(file_path, os.path.dirname(base_path))
            module_name = rel_path.replace(os.sep, ".")[:-len(".py")]

            spec = importlib.util.spec_from_file_location(module_name, file_path)
            module = importlib.util.module_from_spec(spec)
            spec.loader.exec_module(module)

            for _, obj in inspect.getmembers(module, inspect.isclass):
                if issubclass(obj, Plugin) and obj is not Plugin and obj.__module__ == module_name:
                    self._register_plugin(obj)
        except Exception as e:
            logger.error(f"Failed to load plugin from {file_path}: {e}")

    def _register_plugin(self, plugin_class):
        try:
            plugin_instance = plugin_class()
            self.plugins[plugin_instance.name] = plugin_instance
            for command in plugin_instance.commands:
                if command in self.command_map:
                    logger.warning(f"Command {command!r} is claimed by both "
                                   f"{self.command_map[command].name} and {plugin_instance.name}")
                self.command_map[command] = plugin_instance
            logger.debug(f"Registered plugin: {plugin_instance.name} (Commands: {plugin_instance.commands})")
        except Exception as e:
            logger.error(f"Error registering plugin {plugin_class}: {e}")

    def get_plugin_for_command(self, command: str) -> Optional[Plugin]:
        return self.command_map.get(command)

    def commands(self) -> List[str]:
        return sorted(self.command_map)

    def get_all_plugins(self) -> List[Dict[str, Any]]:
        """Return metadata for all loaded plugins."""
        return [
            {"name": p.name, "description": p.description, "commands": p.commands}
            for p in self.plugins.values()
        ]

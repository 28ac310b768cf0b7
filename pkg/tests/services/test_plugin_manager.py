import os
import unittest
from unittest.mock import MagicMock, patch, call

from services.output import ResultDocument
from services.plugin_manager import Plugin, PluginManager


class EchoPlugin(Plugin):
    name = "Echo"
    description = "Echoes its command."
    commands = ["tp", "series"]

    def handle(self, command, job, context):
        return ResultDocument(command)


class ClashingPlugin(Plugin):
    name = "Clash"
    description = "Claims a command already taken."
    commands = ["tp"]


class TestPluginManager(unittest.TestCase):

    def setUp(self):
        """Set up test fixtures."""
        self.plugin_manager = PluginManager()
        self.plugin_manager._load_plugin_from_file = MagicMock()

    def test_register_maps_every_command(self):
        self.plugin_manager._register_plugin(EchoPlugin)
        self.assertIs(self.plugin_manager.get_plugin_for_command("tp"), self.plugin_manager.plugins["Echo"])
        self.assertIs(self.plugin_manager.get_plugin_for_command("series"), self.plugin_manager.plugins["Echo"])
        self.assertEqual(self.plugin_manager.commands(), ["series", "tp"])

    def test_unknown_command_has_no_plugin(self):
        self.assertIsNone(self.plugin_manager.get_plugin_for_command("verify"))

    @patch("services.plugin_manager.logger")
    def test_clashing_command_warns_and_last_wins(self, mock_logger):
        self.plugin_manager._register_plugin(EchoPlugin)
        self.plugin_manager._register_plugin(ClashingPlugin)
        mock_logger.warning.assert_called_once()
        self.assertEqual(self.plugin_manager.get_plugin_for_command("tp").name, "Clash")

    def test_get_all_plugins_metadata(self):
        self.plugin_manager._register_plugin(EchoPlugin)
        self.assertEqual(self.plugin_manager.get_all_plugins(),
                         [{"name": "Echo", "description": "Echoes its command.", "commands": ["tp", "series"]}])

    def test_base_plugin_handle_is_abstract(self):
        with self.assertRaises(NotImplementedError):
            Plugin().handle("tp", None, {})

    @patch("services.plugin_manager.os.walk")
    @patch("services.plugin_manager.os.path.exists")
    @patch("services.plugin_manager.os.path.abspath")
    def test_load_plugins_traversal(self, mock_abspath, mock_exists, mock_walk):
        mock_abspath.return_value = "/mock/base/path"
        mock_exists.return_value = True

        # /mock/base/path
        # ├── plugin1.py
        # ├── __init__.py (ignored)
        # └── subdir
        #     └── plugin2.py
        mock_walk.return_value = [
            ("/mock/base/path", ["subdir"], ["plugin1.py", "__init__.py", "README.md"]),
            ("/mock/base/path/subdir", [], ["plugin2.py", "data.json"]),
        ]

        self.plugin_manager.load_plugins("plugins")

        mock_abspath.assert_called_with("plugins")
        mock_exists.assert_called_with("/mock/base/path")
        mock_walk.assert_called_with("/mock/base/path")

        path1 = os.path.join("/mock/base/path", "plugin1.py")
        path2 = os.path.join("/mock/base/path/subdir", "plugin2.py")
        self.plugin_manager._load_plugin_from_file.assert_has_calls(
            [call(path1, "/mock/base/path"), call(path2, "/mock/base/path")])
        self.assertEqual(self.plugin_manager._load_plugin_from_file.call_count, 2)

    @patch("services.plugin_manager.os.path.exists")
    @patch("services.plugin_manager.os.path.abspath")
    def test_load_plugins_directory_not_exists(self, mock_abspath, mock_exists):
        mock_abspath.return_value = "/non/existent/path"
        mock_exists.return_value = False

        self.plugin_manager.load_plugins("plugins")

        self.plugin_manager._load_plugin_from_file.assert_not_called()


class TestShippedPlugins(unittest.TestCase):

    def test_every_cli_command_has_a_plugin(self):
        manager = PluginManager()
        manager.load_plugins(os.path.join(os.path.dirname(__file__), "..", "..", "plugins"))
        self.assertEqual(manager.commands(), ["euler", "help", "residue", "series", "tp", "verify"])


if __name__ == '__main__':
    unittest.main()

from typing import Dict, Any

from services.jobs import JobSpec
from services.output import ResultDocument
from services.plugin_manager import Plugin


class HelpPlugin(Plugin):
    name = "Help"
    description = "Lists available commands."
    commands = ["help"]

    def handle(self, command: str, job: JobSpec, context: Dict[str, Any]) -> ResultDocument:
        doc = ResultDocument(command)
        for meta in context.get("available_plugins", []):
            if meta["name"] == self.name:
                continue
            doc.rows.append({"command": ", ".join(meta["commands"]), "description": meta["description"]})
        if not doc.rows:
            doc.notes.append("no command plugins are loaded")
        return doc

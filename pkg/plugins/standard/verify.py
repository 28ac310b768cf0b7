from typing import Any, Dict

from services.jobs import JobSpec
from services.output import ResultDocument
from services.plugin_manager import Plugin
from services.verify.runner import run_suite


class VerifyPlugin(Plugin):
    name = "Verify"
    description = "Run the verification suite (fast or all) and report each check."
    commands = ["verify"]

    def handle(self, command: str, job: JobSpec, context: Dict[str, Any]) -> ResultDocument:
        doc = ResultDocument(command)
        for result in run_suite(job.suite, job.workers):
            doc.add_check(result.check, result.status, result.detail)
        passed = sum(1 for entry in doc.report if entry["status"] == "pass")
        doc.notes.append(f"suite {job.suite}: {passed}/{len(doc.report)} checks passed")
        return doc

import argparse
import sys
from typing import List, Optional

from config.loader import ConfigLoader
from services.errors import ThomError, UsageError, VerificationFailure
from services.jobs import BASES, JobSpec
from services.output import FORMATS, emit
from services.plugin_manager import PluginManager
from services.verify.runner import SUITES
from utils.logger import log_context, logger, set_console_level


def build_parser(commands: List[str]) -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="thomseries",
        description="Thom polynomials and Thom series of contact singularities, computed exactly.",
    )
    parser.add_argument("command", choices=commands, help="what to compute")
    parser.add_argument("--algebra", help="local algebra, e.g. A2, III_{2,3}, Sigma^{2,1}, Phi_{3,1}")
    parser.add_argument("--n", type=int, help="source dimension")
    parser.add_argument("--p", type=int, help="target dimension")
    parser.add_argument("--l", type=int, help="relative dimension p - n")
    parser.add_argument("--basis", choices=BASES, default="schur")
    parser.add_argument("--format", choices=FORMATS, default=None)
    parser.add_argument("--table", help="custom Euler table file")
    parser.add_argument("--suite", choices=SUITES, default=None)
    parser.add_argument("--index-bound", dest="index_bound", type=int, help="largest d-index in a series")
    parser.add_argument("--workers", type=int, help="threads for the verification suite")
    parser.add_argument("-v", "--verbose", action="store_true", help="log debug messages to stderr")
    return parser


def run(argv: Optional[List[str]] = None) -> int:
    manager = PluginManager()
    manager.load_plugins(ConfigLoader.resolve_path("plugins"))

    parser = build_parser(manager.commands())
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else UsageError.exit_code

    try:
        if getattr(args, "verbose", False):
            set_console_level("DEBUG")
        job = JobSpec.from_args(args).validate()
        plugin = manager.get_plugin_for_command(job.command)
        if plugin is None:
            raise UsageError(f"no plugin handles {job.command!r}")
        with log_context(job.label()):
            doc = plugin.handle(job.command, job, {"available_plugins": manager.get_all_plugins()})
        print(emit(doc, job.format))
        if doc.failed():
            failing = [entry["check"] for entry in doc.report if entry["status"] in ("fail", "error")]
            raise VerificationFailure(f"failed checks: {', '.join(failing)}", report=doc.report)
        return 0
    except (UsageError, ThomError, VerificationFailure) as e:
        logger.error(str(e))
        return e.exit_code


if __name__ == "__main__":
    try:
        sys.exit(run())
    except KeyboardInterrupt:
        logger.info("Interrupted.")
        sys.exit(130)

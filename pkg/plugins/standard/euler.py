from typing import Any, Dict

from services.euler.algebras import parse_algebra
from services.ideals.ideals import format_ideal
from services.jobs import JobSpec
from services.output import ResultDocument
from services.plugin_manager import Plugin


class EulerTablePlugin(Plugin):
    name = "EulerTable"
    description = "Dump Euler class tables, or ingest and validate a custom table with --table."
    commands = ["euler"]

    def handle(self, command: str, job: JobSpec, context: Dict[str, Any]) -> ResultDocument:
        table = job.euler_table()
        doc = ResultDocument(command, algebra=job.algebra)
        wanted = parse_algebra(job.algebra, custom=table.custom) if job.algebra else None
        for Q, rep, entry in table.rows():
            if wanted is not None and Q != wanted:
                continue
            doc.rows.append({
                "algebra": str(Q),
                "ideal": format_ideal(rep),
                "value": str(entry.value),
                "provenance": entry.provenance,
            })
        for check, status, detail in table.report:
            doc.add_check(check, status, detail)
        doc.notes.append(f"source: {table.source}, {len(doc.rows)} rows")
        return doc

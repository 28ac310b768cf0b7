from typing import Any, Dict

from services.jobs import JobSpec
from services.output import ResultDocument
from services.plugin_manager import Plugin
from services.thom.engine import shared_engine
from services.thom.quotient import to_quotient


class ThomPolynomialPlugin(Plugin):
    name = "ThomPolynomial"
    description = "Thom polynomial of a contact class, in Chern roots, Chern classes or the Schur basis."
    commands = ["tp"]

    def handle(self, command: str, job: JobSpec, context: Dict[str, Any]) -> ResultDocument:
        Q, table = job.resolve()
        engine = shared_engine(table)
        doc = ResultDocument(command, algebra=str(Q), n=job.n, p=job.p, l=job.l, basis=job.basis)
        doc.notes.append(f"Euler data: {table.source}")

        if job.n is None:
            tp = engine.quotient_tp(Q, job.l)
        else:
            root = engine.root_tp(Q, job.n, job.p)
            if job.basis == "roots":
                doc.codim = root.codim
                doc.value = str(root.poly)
                return doc
            tp = to_quotient(root, width=Q.mu, label=Q.compact)

        doc.codim = tp.codim
        doc.set_expansion(tp.expansion)
        if job.basis == "chern":
            doc.value = str(tp.chern)
        return doc

from typing import Any, Dict

from services.jobs import JobSpec
from services.output import ResultDocument
from services.plugin_manager import Plugin
from services.residue.generating import generating_function
from services.residue.residue import iterated_residue
from services.schur.expansion import schur_expand
from services.thom.engine import shared_engine


class ResiduePlugin(Plugin):
    name = "Residue"
    description = "Thom polynomial as the iterated residue of the generating function k_Q."
    commands = ["residue"]

    def handle(self, command: str, job: JobSpec, context: Dict[str, Any]) -> ResultDocument:
        Q, table = job.resolve()
        k = generating_function(Q)
        h = iterated_residue(k, job.l)
        expansion = schur_expand(h)

        doc = ResultDocument(command, algebra=str(Q), l=job.l, basis=job.basis)
        doc.codim = Q.mu * job.l + Q.gamma
        doc.set_expansion(expansion)
        if job.basis == "chern":
            doc.value = str(h)
        doc.notes.append(f"k_Q = {k.as_ratfn()}")

        by_localization = shared_engine(table).localized_quotient_tp(Q, job.l).expansion
        status = "pass" if by_localization == expansion else "fail"
        doc.add_check("residue_vs_localization", status, f"localization gives {by_localization}")
        return doc

from typing import Any, Dict

from services.jobs import JobSpec
from services.output import ResultDocument
from services.plugin_manager import Plugin
from services.thom.engine import shared_engine
from services.thom.series import format_d_monomial


class ThomSeriesPlugin(Plugin):
    name = "ThomSeries"
    description = "Thom series of a contact class up to an index bound."
    commands = ["series"]

    def handle(self, command: str, job: JobSpec, context: Dict[str, Any]) -> ResultDocument:
        Q, table = job.resolve()
        series = shared_engine(table).series(Q, job.index_bound)
        doc = ResultDocument(command, algebra=str(Q))
        doc.value = str(series)
        doc.rows = [{"monomial": format_d_monomial(K), "coeff": str(a)} for K, a in series.sorted_terms()]
        doc.notes.append(f"index bound {series.index_bound}, degree gamma - mu = {series.degree}")
        return doc

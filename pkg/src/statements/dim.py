# pyright: strict
from certificate import Certificate, Verdict
from solver import dimension

from .base import Statement, StatementContext

class DimensionStatement(Statement):
    id = "dim"
    params = ("alphabet",)

    def run(self, ctx: StatementContext) -> Certificate:
        a = ctx.alphabet("alphabet")
        result = dimension(a, ctx.config)
        print(f"\t\tdim = {result.enclosure.format(10)}")
        cert = Certificate(self.id, Verdict.INCONCLUSIVE if result.warning else Verdict.VERIFIED, inputs={"alphabet": a.to_text()})
        cert.addResult("dim", result.enclosure)
        if result.truncation is not None:
            cert.notes["truncation"] = str(result.truncation)
        cert.notes["tail"] = str(result.tail).lower()
        if result.warning:
            cert.notes["warning"] = f"enclosure width {result.width:.3e} above the requested tolerance"
        return cert

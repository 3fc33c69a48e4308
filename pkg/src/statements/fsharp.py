# pyright: strict
from certificate import Certificate
from spectrum import certify_fsharp_contraction

from .base import Statement, StatementContext

class FSharpStatement(Statement):
    id = "fsharp"
    params = ("q",)

    def run(self, ctx: StatementContext) -> Certificate:
        q = ctx.integer("q")
        gap = certify_fsharp_contraction(q, ctx.config)
        cert = Certificate(self.id, gap.verdict, inputs={"q": str(q)})
        gap.record(cert)
        return cert

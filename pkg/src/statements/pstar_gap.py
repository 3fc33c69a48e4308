# pyright: strict
from certificate import Certificate
from spectrum import certify_pstar_gap

from .base import Statement, StatementContext

class PStarGapStatement(Statement):
    '''mu^k < nu^k, so (mu^k, nu^k) misses DS(P*_q).'''
    id = "thm2"
    params = ("q", "k")

    def run(self, ctx: StatementContext) -> Certificate:
        q = ctx.integer("q")
        k = ctx.integer("k")
        gap = certify_pstar_gap(q, k, ctx.config)
        cert = Certificate(self.id, gap.verdict, inputs={"q": str(q), "k": str(k)})
        gap.record(cert)
        cert.notes["margin"] = f"{gap.margin:.3e}"
        return cert

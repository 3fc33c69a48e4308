# pyright: strict
from bounds import GapKind, mq_gap_bounds
from certificate import Certificate
from errors import ParameterError

from .base import Statement, StatementContext, bound_certificate

class MqGapStatement(Statement):
    '''The majorant inequality behind one M_q gap, at the shipped reference band.'''
    id = "mq-gap"
    params = ("q", "which")
    usesSolver = False

    def run(self, ctx: StatementContext) -> Certificate:
        q = ctx.integer("q")
        try:
            which = GapKind(ctx.text("which"))
        except ValueError:
            raise ParameterError(f"which must be one of {', '.join(k.value for k in GapKind)}") from None
        return bound_certificate(self.id, {"q": str(q), "which": which.value}, [mq_gap_bounds(q, which)])

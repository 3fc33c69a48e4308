# pyright: strict
from bounds import mq_crude_upper, mq_upper, mq_upper_monotonicity
from certificate import Certificate

from .base import Statement, StatementContext, bound_certificate

class MqUpperStatement(Statement):
    '''dim M_q <= 2/sqrt q for q >= 11, the tabulated s_q for 2 <= q <= 10.'''
    id = "mq-upper"
    params = ("q",)
    usesSolver = False

    def run(self, ctx: StatementContext) -> Certificate:
        q = ctx.integer("q")
        reports = [mq_upper_monotonicity(11), mq_upper(q)] if q >= 11 else [mq_crude_upper(q)]
        return bound_certificate(self.id, {"q": str(q)}, reports)

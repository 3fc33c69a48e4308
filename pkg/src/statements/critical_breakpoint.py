# pyright: strict
from certificate import Certificate
from spectrum import certify_critical_breakpoint

from .base import Statement, StatementContext

class CriticalBreakPointStatement(Statement):
    id = "critical-bp"
    params = ("q",)
    usesSolver = False

    def run(self, ctx: StatementContext) -> Certificate:
        return certify_critical_breakpoint(ctx.integer("q"))

# pyright: strict
from certificate import Certificate
from solver import dimension_monotonicity_check

from .base import Statement, StatementContext

class MonotonicityStatement(Statement):
    id = "monotonicity"
    params = ("a", "b")

    def run(self, ctx: StatementContext) -> Certificate:
        return dimension_monotonicity_check(ctx.alphabet("a"), ctx.alphabet("b"), ctx.config)

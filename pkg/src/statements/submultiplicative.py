# pyright: strict
from alphabets import check_submultiplicative
from certificate import Certificate

from .base import Statement, StatementContext

class SubmultiplicativeStatement(Statement):
    id = "submultiplicative"
    params = ("alphabet", "maxIndex")
    usesSolver = False

    def run(self, ctx: StatementContext) -> Certificate:
        return check_submultiplicative(ctx.alphabet("alphabet"), ctx.integer("maxIndex"))

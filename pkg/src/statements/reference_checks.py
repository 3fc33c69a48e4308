# pyright: strict
from bounds import reference_checks
from certificate import Certificate

from .base import Statement, StatementContext, bound_certificate

class ReferenceChecksStatement(Statement):
    '''Every published scalar inequality, in float intervals and again in mpmath.'''
    id = "reference-checks"
    usesSolver = False

    def run(self, ctx: StatementContext) -> Certificate:
        del ctx
        return bound_certificate(self.id, {}, reference_checks())

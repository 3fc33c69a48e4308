# pyright: strict
from .base import Statement, StatementContext, bound_certificate
from .critical_breakpoint import CriticalBreakPointStatement
from .dim import DimensionStatement
from .fsharp import FSharpStatement
from .monotonicity import MonotonicityStatement
from .mq_gap import MqGapStatement
from .mq_structure import MqStructureStatement
from .mq_upper import MqUpperStatement
from .pstar_gap import PStarGapStatement
from .reference_checks import ReferenceChecksStatement
from .submultiplicative import SubmultiplicativeStatement

def create_default_statements() -> dict[str, Statement]:
    statements: list[Statement] = [
        DimensionStatement(),
        PStarGapStatement(),
        MqStructureStatement(),
        CriticalBreakPointStatement(),
        FSharpStatement(),
        MqGapStatement(),
        MqUpperStatement(),
        SubmultiplicativeStatement(),
        MonotonicityStatement(),
        ReferenceChecksStatement(),
    ]
    return {s.id: s for s in statements}

__all__ = [
    "Statement",
    "StatementContext",
    "bound_certificate",
    "create_default_statements",
    "CriticalBreakPointStatement",
    "DimensionStatement",
    "FSharpStatement",
    "MonotonicityStatement",
    "MqGapStatement",
    "MqStructureStatement",
    "MqUpperStatement",
    "PStarGapStatement",
    "ReferenceChecksStatement",
    "SubmultiplicativeStatement",
]

# pyright: strict
from __future__ import annotations

import time
from dataclasses import dataclass, field

from alphabets import Alphabet
from bounds import BoundReport
from certificate import Certificate, Verdict
from errors import ParameterError
from solver import SolverConfig

@dataclass
class StatementContext:
    inputs: dict[str, str]
    config: SolverConfig = field(default_factory=SolverConfig)

    def text(self, name: str) -> str:
        try:
            return self.inputs[name]
        except KeyError:
            raise ParameterError(f"missing input {name!r}") from None

    def integer(self, name: str) -> int:
        text = self.text(name)
        try:
            return int(text)
        except ValueError:
            raise ParameterError(f"input {name!r} must be an integer, got {text!r}") from None

    def alphabet(self, name: str) -> Alphabet:
        return Alphabet.from_text(self.text(name))

class Statement:
    '''One certificate kind. `params` are the input names `run` reads.'''
    id: str = ""
    params: tuple[str, ...] = ()
    usesSolver: bool = True

    def run(self, ctx: StatementContext) -> Certificate:
        raise NotImplementedError()

    def certify(self, inputs: dict[str, str], config: SolverConfig = SolverConfig()) -> Certificate:
        missing = [p for p in self.params if p not in inputs]
        if missing:
            raise ParameterError(f"{self.id} needs {', '.join('--' + p for p in missing)}")
        print(f"\tCertifying {self.id} ({', '.join(f'{k}={v}' for k, v in sorted(inputs.items()))})")
        start = time.perf_counter()
        cert = self.run(StatementContext(dict(inputs), config))
        cert.statementId = self.id
        if self.usesSolver:
            cert.config = config.entries()
        cert.timings["total"] = f"{time.perf_counter() - start:.3f}"
        return cert

def bound_certificate(statementId: str, inputs: dict[str, str], reports: list[BoundReport], recheck: bool = True) -> Certificate:
    '''Certificate of closed-form checks only. With `recheck`, every report is
    re-evaluated in mpmath and a disagreement fails the certificate.'''
    cert = Certificate(statementId, Verdict.VERIFIED, inputs=dict(inputs))
    disagreements = [r.name for r in reports if recheck and not r.recheckAgrees()]
    for r in reports:
        print(f"\t\t{r}")
        cert.bounds.append(r.record())
    if disagreements:
        cert.notes["recheck"] = "disagrees: " + ", ".join(disagreements)
    elif recheck:
        cert.notes["recheck"] = "mpmath agrees"
    if disagreements or any(r.verdict not in (r.claim, "inconclusive") for r in reports):
        cert.verdict = Verdict.FAILED
    elif not all(r.holds for r in reports):
        cert.verdict = Verdict.INCONCLUSIVE
    return cert

# pyright: strict
from certificate import Certificate
from spectrum import certify_mq_structure

from .base import Statement, StatementContext

class MqStructureStatement(Statement):
    id = "mq-structure"
    params = ("q",)

    def run(self, ctx: StatementContext) -> Certificate:
        q = ctx.integer("q")
        structure = certify_mq_structure(q, ctx.config)
        cert = Certificate(self.id, structure.verdict, inputs={"q": str(q)})
        cert.notes["kind"] = structure.kind.value
        cert.notes["gaps"] = str(len(structure.gaps))
        cert.notes["intervals"] = str(len(structure.intervals))
        for i, (left, right) in enumerate(structure.intervals, start=1):
            cert.addResult(f"interval{i}.left", left)
            cert.addResult(f"interval{i}.right", right)
        cert.bounds.extend(r.record() for r in structure.supporting)
        for i, gap in enumerate(structure.gaps, start=1):
            gap.record(cert, f"gap{i}.")
        for i, comparison in enumerate(structure.comparisons, start=1):
            comparison.record(cert, f"compare{i}.")
        # the sets a witness picks depend on the mesh, so only s and the outcome are stored
        for i, w in enumerate(structure.witnesses, start=1):
            cert.notes[f"witness{i}.s"] = f"{w.s:.6f}"
            cert.notes[f"witness{i}.verdict"] = w.verdict.value
        cert.notes.update(structure.notes)
        return cert

# pyright: strict
from __future__ import annotations

import csv
from typing import TYPE_CHECKING, Iterable

from certificate import Certificate
from reference_table import HEADER, RowOutcome

if TYPE_CHECKING:
    from _typeshed import SupportsWrite

def write(output: SupportsWrite[str], outcomes: Iterable[RowOutcome]):
    writer = csv.writer(output)
    writer.writerow(HEADER)
    for o in outcomes:
        writer.writerow(o.cells())

def write_bounds(output: SupportsWrite[str], cert: Certificate):
    '''One row per checked inequality of a certificate.'''
    writer = csv.writer(output)
    writer.writerow(["name", "inputs", "lo", "hi", "claim", "verdict"])
    for b in cert.bounds:
        writer.writerow([b.name, b.inputs, str(b.value.lo), str(b.value.hi), b.threshold, b.verdict])

# pyright: strict, reportCallIssue=false, reportGeneralTypeIssues=false
from __future__ import annotations

from typing import Iterable

from airium import Airium # pyright: ignore[reportMissingTypeStubs]

from certificate import Certificate, Verdict
from reference_table import HEADER, RowOutcome

class CertificateSection:
    def __init__(self, cert: Certificate):
        self.cert = cert

    def renderEntries(self, a: Airium, title: str, entries: dict[str, str]) -> None:
        if not entries:
            return
        a.h3(_t=title)
        with a.table(klass='entries'):
            with a.tbody():
                for k in sorted(entries):
                    with a.tr():
                        a.td(_t=k, klass='key')
                        a.td(_t=entries[k], klass='value')

    def renderBounds(self, a: Airium) -> None:
        if not self.cert.bounds:
            return
        a.h3(_t='Bounds')
        with a.table(klass='bounds'):
            with a.thead():
                with a.tr():
                    for h in ['Formula', 'Inputs', 'Value', 'Claim', 'Verdict']:
                        a.th(_t=h)
            with a.tbody():
                odd = True
                for b in self.cert.bounds:
                    with a.tr(klass=odd and 'odd' or 'even'):
                        a.td(_t=b.name, klass='name')
                        a.td(_t=b.inputs)
                        a.td(_t=str(b.value), klass='number')
                        a.td(_t=b.threshold, klass='number')
                        a.td(_t=b.verdict, klass='verdict-' + b.verdict)
                    odd = not odd

    def render(self, a: Airium) -> None:
        with a.div(klass='certificate verdict-' + self.cert.verdict.value):
            a.h2(_t=f'{self.cert.statementId}: {self.cert.verdict.value}')
            self.renderEntries(a, 'Inputs', self.cert.inputs)
            self.renderEntries(a, 'Results', {k: str(v) for k, v in self.cert.results.items()})
            self.renderBounds(a)
            self.renderEntries(a, 'Notes', self.cert.notes)
            self.renderEntries(a, 'Configuration', self.cert.config)
            self.renderEntries(a, 'Timings (s)', self.cert.timings)

class TableSection:
    def __init__(self, outcomes: Iterable[RowOutcome]):
        self.outcomes = list(outcomes)

    def render(self, a: Airium) -> None:
        passed = sum(1 for o in self.outcomes if o.passed)
        a.h2(_t=f'Reference table: {passed}/{len(self.outcomes)} rows pass')
        with a.table(klass='reference_table'):
            with a.thead():
                with a.tr():
                    for h in HEADER:
                        a.th(_t=h.capitalize())
            with a.tbody():
                for o in self.outcomes:
                    with a.tr(klass=o.passed and 'pass' or 'fail'):
                        for c in o.cells():
                            a.td(_t=c)

class Report:
    def __init__(self, title: str, certificates: Iterable[Certificate] = [], outcomes: Iterable[RowOutcome] = []):
        self.title = title
        self.certificates = list(certificates)
        self.outcomes = list(outcomes)

    @property
    def verdict(self) -> Verdict:
        verdicts = [c.verdict for c in self.certificates]
        verdicts += [Verdict.VERIFIED if o.passed else Verdict.FAILED for o in self.outcomes]
        return Verdict.combine(verdicts)

    def saveTo(self, fp: str) -> None:
        a = Airium()
        a('<!DOCTYPE html>')
        with a.html(lang='en'):
            with a.head():
                a.meta(charset='utf-8')
                a.title(_t=self.title)
                self.style(a)
            with a.body():
                self.render(a)
        with open(file=fp, mode='w') as f:
            f.write(str(a))

    def render(self, a: Airium) -> None:
        a.h1(_t=self.title)
        a.p(_t=f'Overall verdict: {self.verdict.value}', klass='verdict-' + self.verdict.value)
        if self.outcomes:
            TableSection(self.outcomes).render(a)
        for c in self.certificates:
            CertificateSection(c).render(a)

    def style(self, a: Airium) -> None:
        a.style(_t='''
            body {
                font-family: sans-serif;
                font-size: 12pt;
                margin: 2em;
            }

            h2 {
                padding-top: 1.5em;
            }

            table {
                border-spacing: 0;
            }

            td, th {
                padding: 0.2em 0.75em;
            }

            th {
                border-bottom: solid 1pt black;
                text-align: center;
            }

            .number, .reference_table td {
                font-family: monospace;
            }

            .entries .key {
                font-weight: bold;
                text-align: right;
            }

            .odd {
                background-color: #f4f4f4;
            }

            .verdict-verified, .verdict-below, .verdict-above, .pass {
                color: #1a6b1a;
            }

            .verdict-inconclusive {
                color: #8a6d00;
            }

            .verdict-failed, .fail {
                color: #a01010;
            }

            .certificate {
                border-left: solid 3pt #ccc;
                padding-left: 1em;
                margin-top: 1em;
            }
        ''')

__all__ = ["CertificateSection", "Report", "TableSection"]

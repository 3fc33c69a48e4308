'''Certified Hausdorff dimension of continued-fraction Cantor sets and the
structure of their dimension spectra.

Alphabets are written as:

    - explicit:[1,2,4]                       a finite set

    - family:M_q(q=5,count=40)               the first 40 members of a family;
      families are P_q(q=..), P_q_star(q=..), M_q(q=..),
      progression(a=..,b=..) and primes

    - tail:[1,3]+P_q_star(q=3,above=9,count=6)
      an explicit head together with every family member above `above`

Exit codes: 0 verified, 2 inconclusive, 1 failed or error.
'''

import json
import sys
from concurrent.futures import ProcessPoolExecutor
from contextlib import contextmanager
from typing import Any, Callable, Iterator

import click

import export_csv
import reference_table
from alphabets import Alphabet
from bounds import reference_checks
from certificate import Certificate, Verdict, compare
from errors import AlphabetSyntaxError, CfdimError
from report import Report
from solver import SolverConfig, dimension
from spectrum import find_strict_break_point, greedy_spectrum_construct, scan_spectrum
from statements import bound_certificate, create_default_statements

@contextmanager
def failures() -> Iterator[None]:
    try:
        yield
    except AlphabetSyntaxError as e:
        raise click.UsageError(str(e)) from e
    except CfdimError as e:
        raise click.ClickException(str(e)) from e

def solver_options(f: Callable[..., Any]) -> Callable[..., Any]:
    options = [
        click.option('--mesh', type=int, default=200, show_default=True, help='Mesh size N of the test function'),
        click.option('--tol', type=float, default=1e-6, show_default=True, help='Bisection tolerance on s'),
        click.option('--depth', type=int, default=12, show_default=True, help='Maximum cell subdivision depth'),
        click.option('--certified/--fast', default=True, help='Certified enclosures, or fast estimates only'),
        click.option('--tail/--no-tail', default=True, help='Bound the tail of an infinite family'),
        click.option('--truncate', type=int, help='Number of enumerated family members'),
    ]
    for option in reversed(options):
        f = option(f)
    return f

def make_config(mesh: int, tol: float, depth: int, certified: bool, tail: bool, truncate: int | None) -> SolverConfig:
    with failures():
        return SolverConfig(meshSize=mesh, bisectionTol=tol, maxDepth=depth, certified=certified, useTail=tail, truncation=truncate)

def parse_alphabet(text: str) -> Alphabet:
    with failures():
        return Alphabet.from_text(text)

def emit(cert: Certificate, out: str | None, asJson: bool) -> None:
    if out is not None:
        print(f'Saving certificate to {out}')
        cert.saveTo(out, asJson)
    elif asJson:
        print(json.dumps(cert.to_json(), sort_keys=True, indent=4, separators=(',', ': ')))
    else:
        print(cert.dumps(), end='')

def finish(verdict: Verdict) -> None:
    print(f'verdict: {verdict.value}')
    sys.exit(verdict.exitCode)

@click.group()
def cli():
    pass

@cli.command()
@solver_options
@click.option('--certify', 'asCertificate', is_flag=True, help='Also produce a certificate')
@click.option('--json', 'asJson', is_flag=True, help='Write the certificate as JSON')
@click.option('--out', help='Certificate file')
@click.argument('alphabet')
def dim(alphabet: str, mesh: int, tol: float, depth: int, certified: bool, tail: bool, truncate: int | None, asCertificate: bool, asJson: bool, out: str | None) -> None:
    '''Enclose the Hausdorff dimension of J_ALPHABET.'''
    config = make_config(mesh, tol, depth, certified, tail, truncate)
    a = parse_alphabet(alphabet)
    if asCertificate or out is not None:
        with failures():
            cert = create_default_statements()['dim'].certify({'alphabet': a.to_text()}, config)
        print(cert.results['dim'])
        if 'warning' in cert.notes:
            print(f'warning: {cert.notes["warning"]}')
        emit(cert, out, asJson)
        finish(cert.verdict)
    with failures():
        result = dimension(a, config)
    print(result.enclosure.format(10))
    if result.warning:
        print(f'warning: enclosure width {result.width:.3e} above the requested tolerance')

@cli.command()
@solver_options
@click.option('--threads', type=int, default=1, envvar='CFDIM_THREADS', show_default=True, help='Rows computed in parallel')
@click.option('--csv', 'csvOutput', help='Also write the comparison as CSV')
@click.option('--html', 'htmlOutput', help='Also write the comparison as HTML')
@click.argument('selector', nargs=-1)
def table(selector: tuple[str, ...], mesh: int, tol: float, depth: int, certified: bool, tail: bool, truncate: int | None, threads: int, csvOutput: str | None, htmlOutput: str | None) -> None:
    '''Recompute reference table rows (names such as "{1,2}", or "all") against the shipped bands.'''
    config = make_config(mesh, tol, depth, certified, tail, truncate)
    print('Loading data')
    with failures():
        rows = reference_table.select(reference_table.load(), selector)
    print(f'Computing {len(rows)} rows ({threads} at a time)')
    if threads > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            outcomes = list(pool.map(reference_table.run_row, rows, [config] * len(rows)))
    else:
        outcomes = [reference_table.run_row(r, config) for r in rows]
    for o in outcomes:
        print('\t' + '  '.join(o.cells()))
    if csvOutput is not None:
        print('Saving CSV')
        with open(csvOutput, 'w', newline='') as f:
            export_csv.write(f, outcomes)
    if htmlOutput is not None:
        print('Saving report')
        Report('Reference table regression', outcomes=outcomes).saveTo(htmlOutput)
    passed = sum(1 for o in outcomes if o.passed)
    print(f'{passed}/{len(outcomes)} rows pass')
    sys.exit(0 if passed == len(outcomes) else 1)

@cli.command()
@solver_options
@click.option('--q', type=int)
@click.option('--k', type=int)
@click.option('--which', type=click.Choice(['two_pow_gap', 'three_pow_gap']))
@click.option('--alphabet')
@click.option('--a', 'alphabetA', help='First alphabet of a monotonicity check')
@click.option('--b', 'alphabetB', help='Dominating alphabet of a monotonicity check')
@click.option('--max-index', 'maxIndex', type=int)
@click.option('--json', 'asJson', is_flag=True, help='Write the certificate as JSON')
@click.option('--out', help='Certificate file')
@click.argument('statement')
def certify(statement: str, mesh: int, tol: float, depth: int, certified: bool, tail: bool, truncate: int | None, q: int | None, k: int | None, which: str | None, alphabet: str | None, alphabetA: str | None, alphabetB: str | None, maxIndex: int | None, asJson: bool, out: str | None) -> None:
    '''Run the pipeline behind STATEMENT and write its certificate.'''
    statements = create_default_statements()
    if statement not in statements:
        raise click.UsageError(f'unknown statement {statement!r}; known: {", ".join(sorted(statements))}')
    config = make_config(mesh, tol, depth, certified, tail, truncate)
    given: dict[str, Any] = {'q': q, 'k': k, 'which': which, 'alphabet': alphabet, 'a': alphabetA, 'b': alphabetB, 'maxIndex': maxIndex}
    inputs = {name: str(v) for name, v in given.items() if v is not None}
    for name in ('alphabet', 'a', 'b'):
        if name in inputs:
            inputs[name] = parse_alphabet(inputs[name]).to_text()
    with failures():
        cert = statements[statement].certify(inputs, config)
    emit(cert, out, asJson)
    finish(cert.verdict)

@cli.command()
@click.option('--refine', is_flag=True, help='Recompute at doubled mesh and depth; enclosures must nest')
@click.argument('certificate')
def verify(certificate: str, refine: bool) -> None:
    '''Recompute CERTIFICATE from its stored inputs and compare.'''
    print('Loading data')
    with failures():
        stored = Certificate.load(certificate)
    statements = create_default_statements()
    if stored.statementId not in statements:
        raise click.ClickException(f'unknown statement {stored.statementId!r}')
    with failures():
        config = SolverConfig.from_entries(stored.config)
        if refine:
            config = config.refined()
        fresh = statements[stored.statementId].certify(stored.inputs, config)
    diff = compare(stored, fresh, exact=not refine)
    for line in diff:
        print(f'\t{line}')
    finish(Verdict.FAILED if diff else fresh.verdict)

@cli.command()
@solver_options
@click.option('--grid', required=True, help='Comma separated s values')
@click.option('--max-size', 'maxSize', type=int, default=3, show_default=True, help='Largest subset searched')
@click.option('--within', type=float, default=5e-3, show_default=True, help='How close a subset dimension must come to s')
@click.argument('parent')
def scan(parent: str, grid: str, maxSize: int, within: float, mesh: int, tol: float, depth: int, certified: bool, tail: bool, truncate: int | None) -> None:
    '''Search small subsets of PARENT for dimensions near each grid value (heuristic).'''
    config = make_config(mesh, tol, depth, certified, tail, truncate)
    a = parse_alphabet(parent)
    try:
        sGrid = [float(x) for x in grid.split(',') if x.strip() != '']
    except ValueError:
        raise click.BadParameter(f'{grid!r} is not a list of numbers', param_hint='--grid') from None
    print(f'Scanning {a.to_text()}')
    with failures():
        points = scan_spectrum(a, sGrid, maxSize, config, within)
    attained = sum(1 for p in points if p.attained)
    print(f'{attained}/{len(points)} grid values attained (heuristic, not a certificate)')

@cli.command()
@click.option('--recheck/--no-recheck', default=True, help='Re-evaluate every bound in mpmath')
@click.option('--csv', 'csvOutput', help='Also write the bounds as CSV')
@click.option('--json', 'asJson', is_flag=True, help='Write the certificate as JSON')
@click.option('--out', help='Certificate file')
def bounds(recheck: bool, csvOutput: str | None, asJson: bool, out: str | None) -> None:
    '''Evaluate every closed-form inequality of the gap and interval arguments.'''
    if recheck:
        cert = create_default_statements()['reference-checks'].certify({})
    else:
        cert = bound_certificate('reference-checks', {}, reference_checks(), recheck=False)
    if csvOutput is not None:
        print('Saving CSV')
        with open(csvOutput, 'w', newline='') as f:
            export_csv.write_bounds(f, cert)
    if out is not None or asJson:
        emit(cert, out, asJson)
    finish(cert.verdict)

@cli.command(name='breakpoint')
@solver_options
@click.argument('parent')
@click.argument('f')
@click.argument('s', type=float)
def break_point(parent: str, f: str, s: float, mesh: int, tol: float, depth: int, certified: bool, tail: bool, truncate: int | None) -> None:
    '''Find the strict break point of (F, S) inside PARENT.'''
    config = make_config(mesh, tol, depth, certified, tail, truncate)
    p = parse_alphabet(parent)
    fa = parse_alphabet(f)
    with failures():
        record = find_strict_break_point(p, fa, s, config)
    print(record)
    print(f'\tdim F = {record.dimF.format(6)}, with break element {record.dimFPlus.format(6)}')
    if record.dimNext is not None:
        print(f'\twith {record.nextElement} instead {record.dimNext.format(6)}')
    finish(record.verdict)

@cli.command()
@solver_options
@click.option('--rounds', type=int, default=3, show_default=True)
@click.argument('parent')
@click.argument('s', type=float)
def greedy(parent: str, s: float, rounds: int, mesh: int, tol: float, depth: int, certified: bool, tail: bool, truncate: int | None) -> None:
    '''Build nested subsets of PARENT whose dimensions approach S from below.'''
    config = make_config(mesh, tol, depth, certified, tail, truncate)
    p = parse_alphabet(parent)
    print(f'Constructing toward s = {s} in {p.to_text()}')
    with failures():
        construction = greedy_spectrum_construct(p, s, rounds, config)
    if construction.hypothesisViolation is not None:
        print(f'hypothesis violated: {construction.hypothesisViolation}')
    if construction.unresolved is not None:
        print(f'unresolved: {construction.unresolved}')
    finish(construction.verdict)

@cli.command()
@click.option('--output', required=True, help='HTML file to write')
@click.argument('certificates', nargs=-1, required=True)
def report(certificates: tuple[str, ...], output: str) -> None:
    '''Generate an HTML report from certificate files.'''
    print('Loading data')
    with failures():
        loaded = [Certificate.load(c) for c in certificates]
    print('Saving report')
    Report('Certificates', loaded).saveTo(output)

if __name__ == '__main__':
    cli()

"""Command-line surface: file I/O, worked examples, ensemble experiments.

Subcommands:
  osc        print the operator Schmidt spectrum of a state
  coeffs     print the witness coefficient bundle for one state
  table1     emit the coefficient table for the four reference states
  ensemble   run seeded random-state ensembles to CSV
  bounds     print the four spectral-radius sandwiches for a matrix file
  witness    evaluate a witness built from a target on a test state

States come either from built-in names (rho0, rho_family:K, maxmixed:D,
maxent:D) or from JSON files with fields dimA, dimB, matrix, where matrix is
a row-major array of rows, each entry an [re, im] pair. Matrix files for
`bounds` carry rows, cols, entries (row-major reals). All randomness flows
from explicit seeds; identical command lines give byte-identical output.
"""
from __future__ import annotations

import concurrent.futures
import dataclasses
import json
import sys

import click
import numpy as np

from .bounds import (
    brauer_bounds,
    frobenius_bounds,
    ledermann_bounds,
    ostrowski_bounds,
    spectral_radius,
)
from .osd import osc
from .states import BipartiteState, ValidationError, max_entangled, purity, random_mixed, rho0, rho_family
from .witness import build_witness, coefficients, evaluate_witness

CSV_HEADER = "sample_id,k,dim,n_pure,seed,lambda_exact,lambda_numeric,theta,zeta,eta,P,purity"


@dataclasses.dataclass(frozen=True)
class EnsembleRecord:
    """One ensemble sample, in CSV column order."""

    sample_id: int
    k: int
    dim: int
    n_pure: int
    seed: int
    lambda_exact: float | None
    lambda_numeric: float
    theta: float
    zeta: float
    eta: float
    big_p: float
    purity: float

    def csv_row(self) -> str:
        cells = [
            str(self.sample_id),
            str(self.k),
            str(self.dim),
            str(self.n_pure),
            str(self.seed),
            _fmt_opt(self.lambda_exact),
            _fmt(self.lambda_numeric),
            _fmt(self.theta),
            _fmt(self.zeta),
            _fmt(self.eta),
            _fmt(self.big_p),
            _fmt(self.purity),
        ]
        return ",".join(cells)


def _fmt(x: float) -> str:
    return f"{x:.10g}"


def _fmt_opt(x: float | None) -> str:
    return "" if x is None else _fmt(x)


# ---------------------------------------------------------------------------
# file codecs


def load_state(path: str, hermitian_only: bool = False) -> BipartiteState:
    """Read a state JSON file and validate it."""
    doc = _load_json(path)
    try:
        da, db = int(doc["dimA"]), int(doc["dimB"])
        rows = doc["matrix"]
        mat = np.array(
            [[complex(re, im) for re, im in row] for row in rows], dtype=complex
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise ValidationError(f"{path}: malformed state document ({exc})") from exc
    return BipartiteState(da, db, mat, hermitian_only=hermitian_only)


def save_state(state: BipartiteState, path: str) -> None:
    """Write a state to the JSON format load_state reads."""
    doc = {
        "dimA": state.dim_a,
        "dimB": state.dim_b,
        "matrix": [
            [[z.real, z.imag] for z in row] for row in state.matrix
        ],
    }
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(doc, fh)


def load_matrix(path: str) -> np.ndarray:
    """Read a plain real matrix file (rows, cols, row-major entries)."""
    doc = _load_json(path)
    try:
        rows, cols = int(doc["rows"]), int(doc["cols"])
        entries = np.asarray(doc["entries"], dtype=float)
    except (KeyError, TypeError, ValueError) as exc:
        raise ValidationError(f"{path}: malformed matrix document ({exc})") from exc
    if entries.size != rows * cols:
        raise ValidationError(f"{path}: {entries.size} entries for a {rows}x{cols} matrix")
    return entries.reshape(rows, cols)


def _load_json(path: str):
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise ValidationError(f"{path}: parse error at line {exc.lineno}: {exc.msg}") from exc


def _builtin_state(name: str) -> BipartiteState:
    kind, _, arg = name.partition(":")
    if kind == "rho0":
        return rho0()
    if kind in ("rho_family", "maxmixed", "maxent"):
        try:
            n = int(arg)
        except ValueError:
            raise ValidationError(f"builtin '{name}' needs an integer argument, e.g. {kind}:3")
        if kind == "rho_family":
            return rho_family(n)
        if kind == "maxent":
            return max_entangled(n).projector()
        if n < 2:
            raise ValidationError(f"maxmixed needs d >= 2, got {n}")
        return BipartiteState(n, n, np.eye(n * n, dtype=complex) / (n * n))
    raise ValidationError(
        f"unknown builtin '{name}' (expected rho0, rho_family:K, maxmixed:D, maxent:D)"
    )


def _resolve_state(builtin: str | None, input_path: str | None) -> BipartiteState:
    if (builtin is None) == (input_path is None):
        raise click.UsageError("provide exactly one of --builtin or --input")
    if builtin is not None:
        return _builtin_state(builtin)
    return load_state(input_path)


def _state_from_token(token: str, hermitian_only: bool = False) -> BipartiteState:
    """A witness endpoint: builtin name if it looks like one, else a file path."""
    kind = token.partition(":")[0]
    if kind in ("rho0", "rho_family", "maxmixed", "maxent"):
        return _builtin_state(token)
    return load_state(token, hermitian_only=hermitian_only)


def _fail(exc: Exception) -> None:
    click.echo(f"error: {exc}", err=True)
    sys.exit(2)


# ---------------------------------------------------------------------------
# commands


@click.group()
def main() -> None:
    """Schmidt number witness toolkit."""


@main.command("osc")
@click.option("--builtin", default=None, help="Built-in state name.")
@click.option("--input", "input_path", default=None, type=str, help="State JSON file.")
@click.option("--out", default=None, type=str, help="Also write the spectrum as CSV.")
def cmd_osc(builtin, input_path, out):
    """Print the operator Schmidt coefficients and purity of a state."""
    try:
        state = _resolve_state(builtin, input_path)
        spec = osc(state)
    except (ValidationError, OSError) as exc:
        _fail(exc)
    click.echo(f"dims: {state.dim_a} x {state.dim_b}")
    for i, v in enumerate(spec.mu, 1):
        click.echo(f"mu[{i}] = {_fmt(v)}")
    click.echo(f"purity = {_fmt(spec.source_purity)}")
    if out is not None:
        lines = ["index,mu"] + [f"{i},{_fmt(v)}" for i, v in enumerate(spec.mu, 1)]
        _write_text(out, "\n".join(lines) + "\n")


@main.command("coeffs")
@click.option("--builtin", default=None, help="Built-in state name.")
@click.option("--input", "input_path", default=None, type=str, help="State JSON file.")
@click.option("--k", "k", required=True, type=click.IntRange(min=2))
@click.option("--numeric/--no-numeric", default=False, help="Force the numeric maximizer.")
@click.option("--seed", default=0, type=int, show_default=True)
@click.option("--restarts", default=32, type=click.IntRange(min=1), show_default=True)
@click.option("--out", default=None, type=str, help="Also write the bundle as a CSV row.")
def cmd_coeffs(builtin, input_path, k, numeric, seed, restarts, out):
    """Print the witness coefficient bundle of a state for the k-bounded set."""
    try:
        state = _resolve_state(builtin, input_path)
        bundle = coefficients(state, k, with_numeric=numeric, rng=seed, restarts=restarts)
    except (ValidationError, OSError) as exc:
        _fail(exc)
    click.echo(f"target_sn = {bundle.target_sn}")
    if bundle.lambda_exact is not None:
        click.echo(f"lambda_exact = {_fmt(bundle.lambda_exact)}")
    if bundle.lambda_numeric is not None:
        click.echo(f"lambda_numeric = {_fmt(bundle.lambda_numeric)}")
    click.echo(f"theta = {_fmt(bundle.theta)}")
    click.echo(f"zeta = {_fmt(bundle.zeta)}")
    click.echo(f"eta = {_fmt(bundle.eta)}")
    click.echo(f"P = {_fmt(bundle.big_p)}")
    if out is not None:
        header = "k,lambda_exact,lambda_numeric,theta,zeta,eta,P"
        row = ",".join(
            [
                str(k),
                _fmt_opt(bundle.lambda_exact),
                _fmt_opt(bundle.lambda_numeric),
                _fmt(bundle.theta),
                _fmt(bundle.zeta),
                _fmt(bundle.eta),
                _fmt(bundle.big_p),
            ]
        )
        _write_text(out, header + "\n" + row + "\n")


@main.command("table1")
@click.option("--out", default=None, type=str, help="Write CSV here instead of stdout.")
@click.option("--seed", default=7, type=int, show_default=True, help="Seed for the numeric k=5 entry.")
@click.option("--restarts", default=32, type=click.IntRange(min=1), show_default=True)
def cmd_table1(out, seed, restarts):
    """Coefficient table for the reference states rho_2 .. rho_5.

    The lambda column is exact up to k = 4 and numeric for k = 5, where no
    arrangement enumeration exists; the method column says which.
    """
    lines = ["state,lambda,lambda_method,theta,zeta,eta,P"]
    try:
        for k in (2, 3, 4, 5):
            state = rho_family(k)
            if k <= 4:
                bundle = coefficients(state, k)
                lam, how = bundle.lambda_exact, "exact"
            else:
                bundle = coefficients(state, k, rng=seed, restarts=restarts)
                lam, how = bundle.lambda_numeric, "numeric"
            lines.append(
                ",".join(
                    [
                        f"rho{k}",
                        _fmt(lam),
                        how,
                        _fmt(bundle.theta),
                        _fmt(bundle.zeta),
                        _fmt(bundle.eta),
                        _fmt(bundle.big_p),
                    ]
                )
            )
    except ValidationError as exc:
        _fail(exc)
    text = "\n".join(lines) + "\n"
    if out is None:
        click.echo(text, nl=False)
    else:
        _write_text(out, text)


def _ensemble_record(k, dim, n_pure, seed, restarts, sample_id) -> EnsembleRecord:
    sub = np.random.default_rng([seed, sample_id])
    state = random_mixed(dim, n_pure, sub)
    bundle = coefficients(state, k, with_numeric=True, rng=sub, restarts=restarts)
    return EnsembleRecord(
        sample_id=sample_id,
        k=k,
        dim=dim,
        n_pure=n_pure,
        seed=seed,
        lambda_exact=bundle.lambda_exact,
        lambda_numeric=bundle.lambda_numeric,
        theta=bundle.theta,
        zeta=bundle.zeta,
        eta=bundle.eta,
        big_p=bundle.big_p,
        purity=purity(state),
    )


@main.command("ensemble")
@click.option("--k", "k", required=True, type=click.IntRange(min=2))
@click.option("--dim", default=None, type=click.IntRange(min=2), help="Local dimension (default k).")
@click.option("--pure-count", default=2000, type=click.IntRange(min=1), show_default=True)
@click.option("--samples", default=50, type=click.IntRange(min=1), show_default=True)
@click.option("--seed", default=0, type=int, show_default=True)
@click.option("--restarts", default=32, type=click.IntRange(min=1), show_default=True)
@click.option("--threads", default=1, type=click.IntRange(min=1), show_default=True)
@click.option("--out", required=True, type=str)
def cmd_ensemble(k, dim, pure_count, samples, seed, restarts, threads, out):
    """Random-state ensemble run: one CSV row of coefficients per sample.

    Each sample draws its own substream from (seed, sample_id), so the output
    is byte-identical for a fixed command line regardless of --threads. Every
    row is checked against the coefficient chain ordering before writing; a
    violation aborts the run.
    """
    dim = k if dim is None else dim
    try:
        ids = range(samples)
        if threads == 1:
            records = [_ensemble_record(k, dim, pure_count, seed, restarts, i) for i in ids]
        else:
            with concurrent.futures.ThreadPoolExecutor(max_workers=threads) as pool:
                futs = {
                    i: pool.submit(_ensemble_record, k, dim, pure_count, seed, restarts, i)
                    for i in ids
                }
                records = [futs[i].result() for i in ids]
    except ValidationError as exc:
        _fail(exc)
    lines = [CSV_HEADER] + [r.csv_row() for r in sorted(records, key=lambda r: r.sample_id)]
    try:
        _write_text(out, "\n".join(lines) + "\n")
    except OSError as exc:
        _fail(exc)
    click.echo(f"wrote {len(records)} rows to {out}")


@main.command("bounds")
@click.option("--input", "input_path", required=True, type=str, help="Matrix JSON file.")
def cmd_bounds(input_path):
    """Print the four spectral-radius sandwiches and the exact radius."""
    try:
        mat = load_matrix(input_path)
        radius = spectral_radius(mat)
        pairs = [frobenius_bounds(mat), ledermann_bounds(mat), ostrowski_bounds(mat), brauer_bounds(mat)]
    except (ValidationError, OSError) as exc:
        _fail(exc)
    click.echo(f"spectral_radius = {_fmt(radius)}")
    for pair in pairs:
        click.echo(f"{pair.method}: lower = {_fmt(pair.lower)}, upper = {_fmt(pair.upper)}")


@main.command("witness")
@click.option("--target", required=True, type=str, help="Builtin name or state JSON file.")
@click.option("--test", "test_token", required=True, type=str, help="Builtin name or state JSON file.")
@click.option("--k", "k", required=True, type=click.IntRange(min=1))
@click.option("--method", default="theta", show_default=True,
              help="lambda | theta | zeta | eta | bigP | mu1 | numeric | fixed:VALUE")
@click.option("--seed", default=0, type=int, show_default=True)
@click.option("--restarts", default=32, type=click.IntRange(min=1), show_default=True)
def cmd_witness(target, test_token, k, method, seed, restarts):
    """Evaluate the witness built from --target on --test.

    The chosen coefficient upper-bounds Tr(target sigma) over all sigma with
    Schmidt number <= k, so a value below -1e-9 certifies that the test state
    has Schmidt number at least k + 1.
    """
    try:
        x = _state_from_token(target, hermitian_only=True)
        test_state = _state_from_token(test_token)
        fixed_value = None
        name = method
        if method.startswith("fixed:"):
            name = "fixed"
            fixed_value = float(method.split(":", 1)[1])
        wit = build_witness(x, k, name, fixed_value=fixed_value, rng=seed, restarts=restarts)
        value = evaluate_witness(wit, test_state)
    except (ValidationError, OSError, ValueError) as exc:
        _fail(exc)
    click.echo(f"coefficient = {_fmt(wit.coefficient)} (method {wit.method})")
    click.echo(f"value = {_fmt(value)}")
    if value < -1e-9:
        click.echo(f"verdict: SN >= {k + 1} certified")
    else:
        click.echo("verdict: not certified")


def _write_text(path: str, text: str) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)


if __name__ == "__main__":
    main()

"""Command-line surface: term, seq, padic, dynamics, cobweb, verify.

Output discipline: payloads go to stdout as JSON (one object per
invocation, big integers as decimal strings, never floats) or RFC-4180
CSV; timing and warnings go to stderr so identical inputs produce
byte-identical stdout, warm or cold cache.

Exit codes: 0 success (an undetermined classification is a success),
1 usage or parse error, 2 verification failure, 3 resource budget
exceeded.
"""

from __future__ import annotations

import csv
import io
import json
import os
import sys
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

import click

from . import verify as verify_mod
from .cache import TermCache
from .digits import digits_of, leading_digits, nat_from_str, num_digits
from .dynamics import (
    DEFAULT_POLICY,
    CycleWitness,
    DivergenceWitness,
    FixedWitness,
    PrecisionPolicy,
    class_scan,
    cobweb_points,
    fixed_point,
    trajectory,
    two_cycle,
)
from .errors import (
    DigitBudgetExceeded,
    DomainError,
    DungeonError,
    ParseError,
    ResourceBudgetExceeded,
    UnsupportedSequence,
    VerificationFailure,
)
from .expansion import parse_decimal
from .laurent import laurent_eval
from .reinterp import reinterpret
from .sequences import DEFAULT_DIGIT_BUDGET, SequenceId, sequence_mod_stream, stabilization_point

SCHEMA_VERSION = 1

PRECISION_ENV = "DUNGEONLAB_PRECISION_MAX"


@dataclass
class OutputRecord:
    """Envelope for one invocation's result."""

    command: str
    args: dict
    payload: dict
    elapsed_s: float = 0.0
    warnings: list = field(default_factory=list)


def _emit(record: OutputRecord, fmt: str, columns: Sequence[str] | None = None) -> None:
    """Write the payload to stdout and the metadata to stderr.

    Timing never reaches stdout: cached and fresh runs must be
    byte-identical there.
    """
    if fmt == "json":
        body = {
            "schema": SCHEMA_VERSION,
            "command": record.command,
            "args": record.args,
            **record.payload,
        }
        if record.warnings:
            body["warnings"] = record.warnings
        click.echo(json.dumps(body, indent=2, sort_keys=False))
    else:
        out = io.StringIO()
        writer = csv.writer(out, lineterminator="\n")
        rows = record.payload.get("rows", [])
        if columns:
            writer.writerow(columns)
        for row in rows:
            writer.writerow(row)
        click.echo(out.getvalue(), nl=False)
    for warning in record.warnings:
        click.echo(f"warning: {warning}", err=True)
    click.echo(f"elapsed: {record.elapsed_s:.3f}s", err=True)


def _parse_operand(text: str):
    """An operand is an integer >= 2 or a decimal expansion > 1."""
    token = text.strip()
    if token.isdigit():
        value = nat_from_str(token)
        if value < 2:
            raise ParseError(f"integer operand must be >= 2: {text!r}")
        return value
    return parse_decimal(token)


def _parse_modulus(text: str) -> int:
    """Accept plain integers, 1e<d> for powers of ten, and <base>^<exp>."""
    token = text.strip().lower()
    try:
        if "^" in token:
            base, exp = token.split("^", 1)
            return int(base) ** int(exp)
        if "e" in token:
            mantissa, exp = token.split("e", 1)
            if mantissa in ("", "1") and exp.isdigit():
                return 10 ** int(exp)
            raise ValueError(token)
        return int(token)
    except ValueError as exc:
        raise ParseError(f"not a modulus: {text!r} (use e.g. 1000, 1e10 or 2^20)") from exc


def _parse_rational(text: str) -> Fraction:
    """Parse p/q, plain decimals (any positive size), or repeating forms."""
    token = text.strip()
    try:
        if "/" in token:
            num, den = token.split("/", 1)
            return Fraction(int(num), int(den))
        if "(" in token:
            return parse_decimal(token).to_fraction()
        if "." in token:
            whole, frac = token.split(".", 1)
            if not (whole + frac).isdigit():
                raise ValueError(token)
            return Fraction(int(whole + frac), 10 ** len(frac))
        return Fraction(int(token))
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"not a rational number: {text!r}") from exc


def _mpf_str(x, digits: int = 20) -> str:
    import mpmath

    return mpmath.nstr(x, digits, strip_zeros=False)


# ---------------------------------------------------------------------------
# command group
# ---------------------------------------------------------------------------


@click.group()
def cli() -> None:
    """Exact arithmetic for iterated base reinterpretation."""


@cli.command("term")
@click.argument("a")
@click.argument("b")
def cmd_term(a: str, b: str) -> None:
    """Evaluate one reinterpretation step A_B.

    Integer operands use the integer operator; fractional ones evaluate
    the digit series exactly and print a reduced fraction.
    """
    try:
        left = _parse_operand(a)
    except ParseError as exc:
        raise ParseError(f"operand {a!r}: {exc}") from exc
    try:
        right = _parse_operand(b)
    except ParseError as exc:
        raise ParseError(f"operand {b!r}: {exc}") from exc
    if isinstance(left, int) and isinstance(right, int):
        click.echo(digits_of(reinterpret(left, right)))
        return
    left_exp = left if not isinstance(left, int) else None
    x = right.to_fraction() if not isinstance(right, int) else Fraction(right)
    if left_exp is None:
        from .expansion import expansion_of_nat

        left_exp = expansion_of_nat(left)
    click.echo(str(laurent_eval(left_exp, x)))


@cli.command("seq")
@click.option("--name", "name", type=click.Choice([s.value for s in SequenceId]), required=True)
@click.option("--to", "n_max", type=int, required=True)
@click.option("--format", "fmt", type=click.Choice(["json", "csv"]), default="csv")
@click.option("--digits-only", is_flag=True, help="emit (n, digit count, leading 8 digits)")
@click.option("--digit-budget", type=int, default=DEFAULT_DIGIT_BUDGET, show_default=True)
@click.option("--no-cache", is_flag=True, help="bypass the on-disk term cache")
def cmd_seq(name: str, n_max: int, fmt: str, digits_only: bool, digit_budget: int, no_cache: bool) -> None:
    """Stream one sequence as rows (n, term) with cache support."""
    if n_max < 10:
        raise ParseError(f"--to must be >= 10, got {n_max}")
    seq = SequenceId(name)
    started = time.monotonic()
    cache = None if no_cache else TermCache()
    terms, truncated_at = _terms_through_cache(seq, n_max, digit_budget, cache)
    if digits_only:
        rows = [
            [str(n), str(num_digits(t)), leading_digits(t, 8)] for n, t in sorted(terms.items())
        ]
        columns = ["n", "digits", "leading8"]
    else:
        rows = [[str(n), digits_of(t)] for n, t in sorted(terms.items())]
        columns = ["n", "term"]
    record = OutputRecord(
        command="seq",
        args={"name": name, "to": n_max, "digits_only": digits_only, "oeis": seq.oeis_id},
        payload={"rows": rows},
        elapsed_s=time.monotonic() - started,
    )
    if truncated_at is not None:
        record.warnings.append(
            f"digit budget {digit_budget} exceeded; last complete n = {truncated_at}"
        )
    _emit(record, fmt, columns)


def _terms_through_cache(
    seq: SequenceId, n_max: int, digit_budget: int, cache: TermCache | None
) -> tuple[dict[int, int], int | None]:
    """Terms 10..n_max, reading and filling the cache when present.

    Returns the terms plus the truncation point if the budget ran out.
    """
    from .sequences import sequence_stream

    terms: dict[int, int] = {}
    truncated_at = None
    if cache is None:
        try:
            terms = dict(sequence_stream(seq, n_max, digit_budget))
        except DigitBudgetExceeded as exc:
            truncated_at = exc.last_n
            terms = dict(sequence_stream(seq, exc.last_n, digit_budget)) if exc.last_n >= 10 else {}
        return terms, truncated_at

    cached_upto = cache.max_contiguous_n(seq, n_max)
    if cached_upto is not None:
        for n in range(10, cached_upto + 1):
            got = cache.get(seq, n)
            if got is None:  # torn entry; fall back to recomputation
                cached_upto = n - 1 if n > 10 else None
                break
            terms[n] = got
    start = 11 if cached_upto is None else cached_upto + 1
    if cached_upto is None:
        terms.clear()
        terms[10] = 10
        start = 11
    try:
        for n in range(start, n_max + 1):
            terms[n] = _next_term(seq, n, terms)
            if num_digits(terms[n]) > digit_budget:
                del terms[n]
                truncated_at = n - 1
                break
    except DigitBudgetExceeded as exc:  # pragma: no cover - defensive
        truncated_at = exc.last_n
    for n, t in terms.items():
        if cache.get(seq, n) is None:
            cache.put(seq, n, t)
    return terms, truncated_at


def _next_term(seq: SequenceId, n: int, terms: dict[int, int]) -> int:
    from .sequences import Grouping, dungeon_chain

    if seq is SequenceId.BETA:
        return reinterpret(terms[n - 1], n)
    if seq is SequenceId.GAMMA:
        return reinterpret(n, terms[n - 1])
    if seq is SequenceId.ALPHA:
        return dungeon_chain(list(range(10, n + 1)), Grouping.BOTTOM_UP)
    return dungeon_chain(list(range(n, 9, -1)), Grouping.TOP_DOWN)


@cli.command("padic")
@click.option("--name", "name", type=click.Choice([s.value for s in SequenceId]), required=True)
@click.option("--mod", "modulus_text", required=True, help="e.g. 1e10, 2^20, 1000000")
@click.option("--to", "n_max", type=int, required=True)
@click.option("--window", type=int, default=100, show_default=True)
@click.option("--format", "fmt", type=click.Choice(["json", "csv"]), default="csv")
def cmd_padic(name: str, modulus_text: str, n_max: int, window: int, fmt: str) -> None:
    """Residue stream of a bottom-up sequence plus its stabilization point."""
    seq = SequenceId(name)
    modulus = _parse_modulus(modulus_text)
    if not seq.bottom_up:
        raise UnsupportedSequence(
            f"unsupported sequence: {name} needs full digits at every step; use alpha or gamma"
        )
    started = time.monotonic()
    residues = list(sequence_mod_stream(seq, modulus, n_max))
    stab = stabilization_point(seq, modulus, n_max, window)
    rows = [[str(n), str(r)] for n, r in residues]
    payload = {
        "rows": rows,
        "modulus": str(modulus),
        "stabilization": (
            {"stabilized": False}
            if stab is None
            else {"stabilized": True, "n0": stab[0], "residue": str(stab[1])}
        ),
    }
    record = OutputRecord(
        command="padic",
        args={"name": name, "mod": modulus_text, "to": n_max, "window": window},
        payload=payload,
        elapsed_s=time.monotonic() - started,
    )
    if fmt == "csv" and stab is not None:
        record.warnings.append(f"stabilized at n0={stab[0]} residue={stab[1]}")
    elif fmt == "csv":
        record.warnings.append("not stabilized within the window")
    _emit(record, fmt, ["n", "residue"])


def _policy_from_env() -> PrecisionPolicy:
    cap = os.environ.get(PRECISION_ENV)
    if not cap:
        return DEFAULT_POLICY
    try:
        return PrecisionPolicy(max_digits=max(64, int(cap)))
    except ValueError:
        raise ParseError(f"{PRECISION_ENV} must be an integer, got {cap!r}")


@cli.group("dynamics")
def cmd_dynamics() -> None:
    """Fixed points, trajectories and parameter scans of x -> L<a>(x)."""


@cmd_dynamics.command("classify")
@click.option("--a", "a_text", required=True)
@click.option("--x0", "x0_text", default=None, help="rational start (default: the value itself)")
@click.option("--max-iter", type=int, default=200, show_default=True)
@click.option("--tol-digits", type=int, default=12, show_default=True)
@click.option("--format", "fmt", type=click.Choice(["json", "csv"]), default="json")
def cmd_classify(a_text: str, x0_text: str | None, max_iter: int, tol_digits: int, fmt: str) -> None:
    """Classify one trajectory and report its witnesses."""
    exp = parse_decimal(a_text)
    x0 = _parse_rational(x0_text) if x0_text is not None else None
    started = time.monotonic()
    fp = fixed_point(exp, tol_digits)
    report = trajectory(exp, x0=x0, max_iter=max_iter, tolerance_digits=tol_digits,
                        policy=_policy_from_env())
    payload = {
        "a": str(exp),
        "class": report.cls.value,
        "local_class": fp.local_class.value,
        "numerically_neutral": fp.numerically_neutral,
        "omega": _mpf_str(fp.omega),
        "omega_exact": str(fp.omega_exact) if fp.omega_exact is not None else None,
        "derivative": _mpf_str(fp.derivative),
        "derivative_exact": str(fp.derivative_exact) if fp.derivative_exact is not None else None,
        "witness": _witness_payload(report.witness),
        "iterations": report.iterations_used,
        "precision_digits": report.precision_used,
        "iterates": [_mpf_str(t) for t in report.iterates],
    }
    if report.note:
        payload["note"] = report.note
    record = OutputRecord(
        command="dynamics classify",
        args={"a": a_text, "x0": x0_text, "max_iter": max_iter, "tol_digits": tol_digits},
        payload=payload,
        elapsed_s=time.monotonic() - started,
    )
    columns = None
    if fmt == "csv":
        record.payload = {
            "rows": [[str(exp), report.cls.value, payload["omega"], payload["derivative"]]]
        }
        columns = ["a", "class", "omega", "derivative"]
    _emit(record, fmt, columns)


def _witness_payload(witness) -> dict | None:
    if witness is None:
        return None
    if isinstance(witness, FixedWitness):
        return {
            "kind": "fixed",
            "omega": _mpf_str(witness.omega),
            "omega_exact": str(witness.omega_exact) if witness.omega_exact is not None else None,
        }
    if isinstance(witness, CycleWitness):
        return {
            "kind": "two-cycle",
            "u": _mpf_str(witness.u),
            "v": _mpf_str(witness.v),
            "u_exact": str(witness.u_exact) if witness.u_exact is not None else None,
            "v_exact": str(witness.v_exact) if witness.v_exact is not None else None,
            "residual": _mpf_str(witness.residual) if witness.residual is not None else None,
        }
    if isinstance(witness, DivergenceWitness):
        return {
            "kind": "divergence",
            "min_even": _mpf_str(witness.min_even),
            "max_odd": _mpf_str(witness.max_odd),
        }
    return None


@cmd_dynamics.command("two-cycle")
@click.option("--a", "a_text", required=True)
@click.option("--tol-digits", type=int, default=12, show_default=True)
def cmd_two_cycle(a_text: str, tol_digits: int) -> None:
    """Locate the two-term cycle pair below/above the fixed point."""
    exp = parse_decimal(a_text)
    started = time.monotonic()
    pair = two_cycle(exp, tol_digits, policy=_policy_from_env())
    payload = {"a": str(exp), "pair": _witness_payload(pair)}
    record = OutputRecord(
        command="dynamics two-cycle",
        args={"a": a_text, "tol_digits": tol_digits},
        payload=payload,
        elapsed_s=time.monotonic() - started,
    )
    _emit(record, "json")


@cmd_dynamics.command("scan")
@click.option("--from", "from_text", required=True)
@click.option("--to", "to_text", required=True)
@click.option("--step", "step_text", required=True)
@click.option("--tol-digits", type=int, default=12, show_default=True)
@click.option("--format", "fmt", type=click.Choice(["json", "csv"]), default="csv")
def cmd_scan(from_text: str, to_text: str, step_text: str, tol_digits: int, fmt: str) -> None:
    """Classify a grid of parameters between --from and --to."""
    started = time.monotonic()
    rows_data = class_scan(
        parse_decimal(from_text),
        parse_decimal(to_text),
        _parse_rational(step_text),
        tolerance_digits=tol_digits,
        policy=_policy_from_env(),
    )
    rows = [
        [str(r.a), r.cls.value, r.local_class.value, repr(r.omega), repr(r.derivative)]
        for r in rows_data
    ]
    record = OutputRecord(
        command="dynamics scan",
        args={"from": from_text, "to": to_text, "step": step_text, "tol_digits": tol_digits},
        payload={"rows": rows},
        elapsed_s=time.monotonic() - started,
    )
    _emit(record, fmt, ["a", "class", "local_class", "omega", "derivative"])


@cli.command("cobweb")
@click.option("--a", "a_text", required=True)
@click.option("--x0", "x0_text", required=True)
@click.option("--steps", type=int, required=True)
@click.option("--out", "out_path", type=click.Path(dir_okay=False, writable=True), required=True)
@click.option("--curve-samples", type=int, default=200, show_default=True)
def cmd_cobweb(a_text: str, x0_text: str, steps: int, out_path: str, curve_samples: int) -> None:
    """Write cobweb staircase segments and curve samples as CSV."""
    if steps < 1:
        raise ParseError(f"--steps must be >= 1, got {steps}")
    exp = parse_decimal(a_text)
    started = time.monotonic()
    data = cobweb_points(exp, _parse_rational(x0_text), steps, curve_samples)
    try:
        with open(out_path, "w", newline="") as handle:
            writer = csv.writer(handle, lineterminator="\n")
            writer.writerow(["x1", "y1", "x2", "y2"])
            for seg in data.segments:
                writer.writerow([repr(v) for v in seg])
            writer.writerow([])
            writer.writerow(["x", "y"])
            for xc, yc in data.curve:
                writer.writerow([repr(xc), repr(yc)])
    except OSError as exc:
        raise ParseError(f"cannot write {out_path!r}: {exc}") from exc
    record = OutputRecord(
        command="cobweb",
        args={"a": a_text, "x0": x0_text, "steps": steps, "out": out_path},
        payload={"segments": len(data.segments), "curve_samples": len(data.curve), "out": out_path},
        elapsed_s=time.monotonic() - started,
    )
    _emit(record, "json")


@cli.command("verify")
@click.option("--suite", type=click.Choice(verify_mod.SUITES), required=True)
@click.option("--seed", type=int, default=verify_mod.DEFAULT_SEED, show_default=True)
@click.option("--instances", type=int, default=10_000, show_default=True)
def cmd_verify(suite: str, seed: int, instances: int) -> None:
    """Run a named verification suite; any failed check exits nonzero."""
    started = time.monotonic()
    checks = verify_mod.run_suite(suite, seed=seed, instances=instances)
    for check in checks:
        status = "PASS" if check.ok else "FAIL"
        line = f"{status} {check.name}"
        if check.detail:
            line += f" ({check.detail})"
        click.echo(line)
    failed = [c for c in checks if not c.ok]
    click.echo(
        f"suite {suite}: {len(checks) - len(failed)}/{len(checks)} checks passed "
        f"in {time.monotonic() - started:.2f}s",
        err=True,
    )
    if failed:
        raise VerificationFailure(f"{len(failed)} checks failed in suite {suite}")


def main(argv: Sequence[str] | None = None) -> int:
    """Console entry point with the documented exit-code contract."""
    try:
        cli.main(args=argv, standalone_mode=False)
        return 0
    except click.exceptions.Exit as exc:
        return exc.exit_code
    except click.UsageError as exc:
        click.echo(f"error: {exc.format_message()}", err=True)
        return 1
    except click.ClickException as exc:
        exc.show()
        return 1
    except (ParseError, DomainError, UnsupportedSequence) as exc:
        click.echo(f"error: {exc}", err=True)
        return 1
    except VerificationFailure as exc:
        click.echo(f"error: {exc}", err=True)
        return 2
    except (DigitBudgetExceeded, ResourceBudgetExceeded) as exc:
        click.echo(f"error: {exc}", err=True)
        return 3
    except DungeonError as exc:
        click.echo(f"error: {exc}", err=True)
        return 1


if __name__ == "__main__":
    sys.exit(main())

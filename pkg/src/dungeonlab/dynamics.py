"""Fixed points, two-cycles and trajectory classification of x -> L<a>(x).

For 1 < a < 10 the digit-series map is strictly decreasing on (1, oo)
and crosses y = x exactly once, at omega.  Its second iterate is
increasing, so even- and odd-indexed orbit points are monotone: every
trajectory lands on the crossing point, converges to it, repeats or
approaches a two-term cycle, or diverges with one subsequence sliding
toward 1 and the other unbounded.  Cycles of length three or more
cannot occur under a decreasing map and are never searched for.

Classification is certified, not guessed from finitely many iterates.
The map is rational, so genuine two-cycle points are the real roots of
an integer polynomial: the second-iterate numerator with every
fixed-point factor divided out.  A monotone orbit converges to the
nearest second-iterate fixed point in its direction of travel, and all
side comparisons (which side of omega or of a cycle root a rational
point lies on) are exact sign evaluations.  Numerically delicate
parameters, such as a neutral crossing point whose orbit converges like
n^(-1/2), cost refinement steps but never correctness: tolerances only
shape the reported witnesses, not the class.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm
from typing import Callable, Sequence, Union

import sympy
from mpmath import mp, mpf

from .errors import DomainError, PrecisionExhausted, ResourceBudgetExceeded
from .expansion import DecimalExpansion, expansion_of_fraction, parse_decimal
from .laurent import LaurentMap, poly_eval_fraction

_X = sympy.Symbol("x")


class LocalClass(Enum):
    ATTRACTOR = "attractor"
    NEUTRAL = "neutral"
    REPELLING = "repelling"
    UNDETERMINED = "undetermined"


class TrajectoryClass(Enum):
    FIXED_FROM_START = "fixed-from-start"
    CONVERGES_TO_FIXED = "converges-to-fixed"
    EXACT_TWO_CYCLE = "exact-two-cycle"
    CONVERGES_TO_TWO_CYCLE = "converges-to-two-cycle"
    DIVERGES = "diverges"
    UNDETERMINED = "undetermined"


@dataclass(frozen=True)
class PrecisionPolicy:
    """Escalation and budget knobs for the numeric side of classification."""

    start_digits: int = 64
    max_digits: int = 4096
    divergence_x_max: int = 10**12
    refine_step_cap: int = 100_000


DEFAULT_POLICY = PrecisionPolicy()


@dataclass(frozen=True)
class FixedPointResult:
    omega: mpf
    omega_exact: Fraction | None
    bracket: tuple[Fraction, Fraction]
    derivative: mpf
    derivative_exact: Fraction | None
    local_class: LocalClass
    numerically_neutral: bool
    tolerance_digits: int


@dataclass(frozen=True)
class FixedWitness:
    omega: mpf
    omega_exact: Fraction | None = None


@dataclass(frozen=True)
class CycleWitness:
    u: mpf
    v: mpf
    u_exact: Fraction | None = None
    v_exact: Fraction | None = None
    residual: mpf | None = None


@dataclass(frozen=True)
class DivergenceWitness:
    min_even: mpf
    max_odd: mpf


@dataclass
class TrajectoryReport:
    iterates: list
    cls: TrajectoryClass
    witness: Union[FixedWitness, CycleWitness, DivergenceWitness, None]
    precision_used: int
    iterations_used: int
    note: str = ""


@dataclass(frozen=True)
class ClassScanRow:
    a: DecimalExpansion
    cls: TrajectoryClass
    local_class: LocalClass
    omega: float
    derivative: float


def _as_expansion(a: DecimalExpansion | str) -> DecimalExpansion:
    return a if isinstance(a, DecimalExpansion) else parse_decimal(a)


def _frac_to_mpf(fr: Fraction) -> mpf:
    return mpf(fr.numerator) / fr.denominator


def _require_unit_band(value: Fraction) -> None:
    if not 1 < value < 10:
        raise DomainError(f"dynamics is defined for 1 < a < 10, got {value}")


# ---------------------------------------------------------------------------
# fixed point
# ---------------------------------------------------------------------------


def fixed_point(a: DecimalExpansion | str, tolerance_digits: int = 12) -> FixedPointResult:
    """Locate the crossing point of y = L<a>(x) with y = x on (1, oo).

    The bracket is maintained with exact rational endpoint tests, so the
    returned interval is certified: the map sits weakly above the
    diagonal at the left end and weakly below at the right end.  A
    rational crossing point can only be an integer 2..9 (the cleared
    fixed-point polynomial is monic up to sign), so those are checked
    exactly first and reported exactly when they hit.
    """
    return _fixed_point_cached(_as_expansion(a), tolerance_digits)


@lru_cache(maxsize=256)
def _fixed_point_cached(exp: DecimalExpansion, tolerance_digits: int) -> FixedPointResult:
    if tolerance_digits < 1:
        raise DomainError("tolerance_digits must be >= 1")
    lmap = LaurentMap(exp)
    value = lmap.value
    _require_unit_band(value)

    if lmap.is_constant:
        omega_exact = value
        with mp.workdps(tolerance_digits + 15):
            omega = _frac_to_mpf(omega_exact)
        return FixedPointResult(
            omega=omega,
            omega_exact=omega_exact,
            bracket=(omega_exact, omega_exact),
            derivative=mpf(0),
            derivative_exact=Fraction(0),
            local_class=LocalClass.ATTRACTOR,
            numerically_neutral=False,
            tolerance_digits=tolerance_digits,
        )

    omega_exact: Fraction | None = None
    for cand in range(2, 10):
        if lmap.eval_exact(cand) == cand:
            omega_exact = Fraction(cand)
            break

    if omega_exact is not None:
        lo = hi = omega_exact
    else:
        lo = _left_bracket_end(lmap)
        hi = Fraction(10)
        lo, hi = _bisect_crossing(lmap, lo, hi, Fraction(1, 10**tolerance_digits))
        if lo == hi:
            omega_exact = lo

    with mp.workdps(tolerance_digits + 15):
        omega = _frac_to_mpf((lo + hi) / 2)
        derivative_exact = lmap.deriv_exact(omega_exact) if omega_exact is not None else None
        derivative = (
            _frac_to_mpf(derivative_exact) if derivative_exact is not None else lmap.deriv_mp(omega)
        )
        local, numeric_neutral = _classify_derivative(
            derivative, derivative_exact, tolerance_digits
        )
    return FixedPointResult(
        omega=omega,
        omega_exact=omega_exact,
        bracket=(lo, hi),
        derivative=derivative,
        derivative_exact=derivative_exact,
        local_class=local,
        numerically_neutral=numeric_neutral,
        tolerance_digits=tolerance_digits,
    )


def _left_bracket_end(lmap: LaurentMap) -> Fraction:
    """A rational lo > 1 with L(lo) >= lo, found exactly.

    The map exceeds its leading digit everywhere, so the digit itself
    works when it is at least 2; otherwise halve toward 1 until the map
    climbs above the diagonal (it always does: near 1 it is bounded away
    from 1 for terminating expansions and blows up for periodic ones).
    """
    c0 = lmap.source.int_digits[0]
    if c0 >= 2:
        return Fraction(c0)
    gap = Fraction(9)
    for _ in range(300):
        gap /= 2
        cand = 1 + gap
        if lmap.eval_exact(cand) >= cand:
            return cand
    raise PrecisionExhausted("no left bracket end found above 1")


def _bisect_crossing(
    lmap: LaurentMap, lo: Fraction, hi: Fraction, width: Fraction
) -> tuple[Fraction, Fraction]:
    while hi - lo > width:
        mid = (lo + hi) / 2
        diff = lmap.eval_exact(mid) - mid
        if diff == 0:
            return mid, mid
        if diff > 0:
            lo = mid
        else:
            hi = mid
    return lo, hi


def _classify_derivative(
    derivative: mpf, derivative_exact: Fraction | None, tolerance_digits: int
) -> tuple[LocalClass, bool]:
    if derivative_exact is not None:
        if derivative_exact == -1:
            return LocalClass.NEUTRAL, False
        if derivative_exact > 0:
            return LocalClass.UNDETERMINED, False  # impossible for these maps
        if derivative_exact > -1:
            return LocalClass.ATTRACTOR, False
        return LocalClass.REPELLING, False
    tol = mpf(10) ** (-tolerance_digits)
    if abs(derivative + 1) <= tol:
        return LocalClass.NEUTRAL, True
    if derivative > -1:
        return LocalClass.ATTRACTOR, False
    return LocalClass.REPELLING, False


def classify_fixed_point(a: DecimalExpansion | str, tolerance_digits: int = 12) -> LocalClass:
    """Local class of omega from the sign of L'(omega) against -1."""
    return fixed_point(a, tolerance_digits).local_class


# ---------------------------------------------------------------------------
# exact cycle certificate
# ---------------------------------------------------------------------------


@dataclass
class _RootInterval:
    """Isolating interval for one real root of the cycle polynomial.

    lo == hi marks an exact rational root.  For proper intervals the
    endpoints are never roots and sign_lo is the polynomial's sign at lo.
    """

    lo: Fraction
    hi: Fraction
    sign_lo: int

    @property
    def exact(self) -> bool:
        return self.lo == self.hi


@dataclass(frozen=True)
class _CycleCertificate:
    # None means the second iterate is the identity map: every point off
    # the diagonal sits on a two-cycle (the Moebius involution family).
    cycle_coeffs: tuple[int, ...] | None
    roots: tuple[tuple[Fraction, Fraction, int], ...]

    def root_intervals(self) -> list[_RootInterval]:
        return [_RootInterval(lo, hi, s) for lo, hi, s in self.roots]


def _sign(fr: Fraction) -> int:
    return (fr > 0) - (fr < 0)


def _int_coeffs_const_first(poly: sympy.Poly) -> tuple[int, ...]:
    """Primitive integer coefficients of a QQ polynomial, constant first."""
    cs = poly.all_coeffs()  # highest first, sympy Rationals
    den = 1
    for c in cs:
        den = lcm(den, int(c.q))
    ints = [int(c.p) * (den // int(c.q)) for c in cs]
    g = 0
    for v in ints:
        g = gcd(g, v)
    if g > 1:
        ints = [v // g for v in ints]
    return tuple(reversed(ints))


def _homogeneous_compose(f: Sequence[int], P: sympy.Poly, Q: sympy.Poly, d: int) -> sympy.Poly:
    """Q^d * f(P/Q) as a polynomial, for deg f <= d (constant-first f)."""
    coeffs = list(f) + [0] * (d + 1 - len(f))
    acc = sympy.Poly(coeffs[d], _X, domain="QQ")
    qpow = sympy.Poly(1, _X, domain="QQ")
    for i in range(d - 1, -1, -1):
        qpow = qpow * Q
        acc = acc * P + coeffs[i] * qpow
    return acc


@lru_cache(maxsize=128)
def _certificate(exp: DecimalExpansion) -> _CycleCertificate:
    lmap = LaurentMap(exp)
    p, q = lmap.rational_form()
    P = sympy.Poly(list(reversed(p)), _X, domain="QQ")
    Q = sympy.Poly(list(reversed(q)), _X, domain="QQ")
    d = max(P.degree(), Q.degree())
    A = _homogeneous_compose(p, P, Q, d)
    B = _homogeneous_compose(q, P, Q, d)
    x_poly = sympy.Poly(_X, _X, domain="QQ")
    D = A - x_poly * B  # vanishes exactly at the second iterate's fixed points
    G = P - x_poly * Q  # vanishes exactly at the map's own fixed points
    if D.is_zero:
        return _CycleCertificate(cycle_coeffs=None, roots=())
    R, rem = D.div(G)
    if not rem.is_zero:
        raise AssertionError("fixed-point polynomial must divide the second-iterate one")
    while True:
        common = R.gcd(G)
        if common.degree() < 1:
            break
        R, rem = R.div(common)
        if not rem.is_zero:
            raise AssertionError("inexact deflation of fixed-point factors")
    square = R.gcd(R.diff(_X))
    if square.degree() >= 1:
        R = R.div(square)[0]
    coeffs = _int_coeffs_const_first(R)
    roots = _isolate_cycle_roots(coeffs)
    return _CycleCertificate(cycle_coeffs=coeffs, roots=roots)


def _isolate_cycle_roots(coeffs: tuple[int, ...]) -> tuple[tuple[Fraction, Fraction, int], ...]:
    """Disjoint isolating intervals for the real roots in (1, oo)."""
    if len(coeffs) <= 1:
        return ()
    poly = sympy.Poly(list(reversed(coeffs)), _X, domain="ZZ")
    lead = abs(coeffs[-1])
    bound = max(abs(c) for c in coeffs) // lead + 2  # Cauchy bound, integer slack
    raw = poly.intervals(inf=1, sup=bound)
    out: list[tuple[Fraction, Fraction, int]] = []
    for (a, b), _mult in raw:
        lo = Fraction(int(a.p), int(a.q))
        hi = Fraction(int(b.p), int(b.q))
        if lo == hi:
            if lo > 1:
                out.append((lo, hi, 0))
            continue
        # Split away the open endpoint at 1 if the interval touches it.
        sign_lo = _sign(poly_eval_fraction(list(coeffs), lo))
        ri = _RootInterval(lo, hi, sign_lo)
        while ri.lo < 1 < ri.hi:
            _refine_root_once(ri, coeffs)
        if ri.hi <= 1:
            continue
        out.append((ri.lo, ri.hi, ri.sign_lo))
    out.sort(key=lambda t: t[0])
    return tuple(out)


def _refine_root_once(ri: _RootInterval, coeffs: Sequence[int]) -> None:
    if ri.exact:
        return
    mid = (ri.lo + ri.hi) / 2
    s = _sign(poly_eval_fraction(list(coeffs), mid))
    if s == 0:
        ri.lo = ri.hi = mid
        ri.sign_lo = 0
    elif s == ri.sign_lo:
        ri.lo = mid
    else:
        ri.hi = mid


def _split_at_point(ri: _RootInterval, point: Fraction, coeffs: Sequence[int]) -> None:
    """Shrink an isolating interval so `point` is no longer interior.

    Only called for points that are provably not roots, so the sign at
    the point decides which half keeps the root.
    """
    if ri.exact or not ri.lo < point < ri.hi:
        return
    s = _sign(poly_eval_fraction(list(coeffs), point))
    if s == ri.sign_lo:
        ri.lo = point
    else:
        ri.hi = point


# ---------------------------------------------------------------------------
# trajectory classification
# ---------------------------------------------------------------------------


def trajectory(
    a: DecimalExpansion | str,
    x0: Fraction | int | str | None = None,
    max_iter: int = 200,
    tolerance_digits: int = 12,
    policy: PrecisionPolicy = DEFAULT_POLICY,
) -> TrajectoryReport:
    """Classify the orbit of x0 under x -> L<a>(x) with certified class.

    The default start is the map's own value (equivalently: starting at
    10, whose image is the value), so the recorded orbit is exactly the
    repeated self-reinterpretation sequence a, a_a, a_(a_a), ...

    Landing exactly on the crossing point or on a two-cycle is decided
    in exact rational arithmetic.  Otherwise the orbit's limit is the
    nearest second-iterate fixed point in its direction of travel,
    located through the cycle certificate; the class follows from
    whether that target is omega, a cycle root, or absent (divergence,
    possible only for non-terminating expansions).
    """
    exp = _as_expansion(a)
    lmap = LaurentMap(exp)
    value = lmap.value
    _require_unit_band(value)
    if x0 is None or (isinstance(x0, str) and x0 == "default"):
        start = value
    else:
        start = Fraction(x0)
        if start <= 1:
            raise DomainError(f"x0 must be > 1, got {x0}")

    report_dps = max(policy.start_digits, tolerance_digits + 15)

    x1 = start
    x2 = lmap.eval_exact(x1)
    if x2 == x1:
        with mp.workdps(report_dps):
            om = _frac_to_mpf(x1)
            iterates = [om, om, om]
        return TrajectoryReport(
            iterates=iterates,
            cls=TrajectoryClass.FIXED_FROM_START,
            witness=FixedWitness(omega=om, omega_exact=x1),
            precision_used=report_dps,
            iterations_used=2,
        )
    x3 = lmap.eval_exact(x2)
    if x3 == x1:
        u, v = sorted((x1, x2))
        with mp.workdps(report_dps):
            iterates = [_frac_to_mpf(t) for t in (x1, x2, x1, x2)]
            witness = CycleWitness(
                u=_frac_to_mpf(u), v=_frac_to_mpf(v), u_exact=u, v_exact=v, residual=mpf(0)
            )
        return TrajectoryReport(
            iterates=iterates,
            cls=TrajectoryClass.EXACT_TWO_CYCLE,
            witness=witness,
            precision_used=report_dps,
            iterations_used=3,
        )

    fp = fixed_point(exp, tolerance_digits)
    cert = _certificate(exp)
    if cert.cycle_coeffs is None:
        raise AssertionError("identity second iterate must be caught by the exact check")

    # Exact side/direction facts: p < omega iff L(p) > p.
    below_omega = x2 > x1
    moving_up = x3 > x1
    target = _travel_target(lmap, cert, x1, moving_up, below_omega, policy)

    if target == "omega":
        stop = _stop_near(fp.bracket, tolerance_digits)
        xs, dps = _run_orbit(lmap, start, stop, max_iter, policy, report_dps)
        return TrajectoryReport(
            iterates=xs,
            cls=TrajectoryClass.CONVERGES_TO_FIXED,
            witness=FixedWitness(omega=fp.omega, omega_exact=fp.omega_exact),
            precision_used=max(dps, fp.tolerance_digits + 15),
            iterations_used=len(xs) - 1,
        )

    if isinstance(target, _RootInterval):
        witness = _cycle_witness_from_root(
            lmap, target, cert.cycle_coeffs, tolerance_digits, policy
        )
        stop = _stop_cycle(tolerance_digits)
        xs, dps = _run_orbit(lmap, start, stop, max_iter, policy, report_dps)
        return TrajectoryReport(
            iterates=xs,
            cls=TrajectoryClass.CONVERGES_TO_TWO_CYCLE,
            witness=witness,
            precision_used=dps,
            iterations_used=len(xs) - 1,
        )

    if target == "none":
        if exp.is_terminating:
            raise AssertionError("bounded maps cannot diverge")
        stop = _stop_divergence(policy)
        xs, dps = _run_orbit(lmap, start, stop, max_iter, policy, report_dps)
        evens = xs[0::2]
        odds = xs[1::2] or xs[0:1]
        return TrajectoryReport(
            iterates=xs,
            cls=TrajectoryClass.DIVERGES,
            witness=DivergenceWitness(min_even=min(evens), max_odd=max(odds)),
            precision_used=dps,
            iterations_used=len(xs) - 1,
        )

    return TrajectoryReport(
        iterates=[],
        cls=TrajectoryClass.UNDETERMINED,
        witness=None,
        precision_used=report_dps,
        iterations_used=0,
        note=str(target),
    )


def _travel_target(
    lmap: LaurentMap,
    cert: _CycleCertificate,
    x1: Fraction,
    moving_up: bool,
    below_omega: bool,
    policy: PrecisionPolicy,
):
    """Limit of the monotone even-step subsequence from x1.

    Returns "omega", the _RootInterval of the nearest cycle root in the
    direction of travel, "none" when nothing bounds the subsequence in
    that direction, or an error string if refinement budgets blow.  All
    comparisons are exact: intervals are split at x1, and a root's side
    of omega is read off the sign of L(t) - t at its endpoints.
    """
    coeffs = cert.cycle_coeffs
    assert coeffs is not None
    roots = cert.root_intervals()
    for ri in roots:
        _split_at_point(ri, x1, coeffs)
    if moving_up:
        above = [ri for ri in roots if (ri.lo > x1 if ri.exact else ri.lo >= x1)]
        if not below_omega:
            # omega is behind us; the nearest root above x1 or nothing.
            return min(above, key=lambda r: r.lo) if above else "none"
        reachable = []
        for ri in above:
            side = _omega_side(lmap, ri, coeffs, policy)
            if side is None:
                return "cycle-root refinement budget exhausted"
            if side == "below":
                reachable.append(ri)
        return min(reachable, key=lambda r: r.lo) if reachable else "omega"
    below = [ri for ri in roots if (ri.hi < x1 if ri.exact else ri.hi <= x1)]
    if below_omega:
        return max(below, key=lambda r: r.hi) if below else "none"
    reachable = []
    for ri in below:
        side = _omega_side(lmap, ri, coeffs, policy)
        if side is None:
            return "cycle-root refinement budget exhausted"
        if side == "above":
            reachable.append(ri)
    return max(reachable, key=lambda r: r.hi) if reachable else "omega"


def _omega_side(
    lmap: LaurentMap, ri: _RootInterval, coeffs: Sequence[int], policy: PrecisionPolicy
) -> str | None:
    """Which side of omega a cycle root lies on ("below"/"above").

    t < omega holds exactly when L(t) > t.  Cycle roots never equal
    omega (fixed-point factors are deflated), so refining the interval
    until both endpoint signs agree terminates.
    """
    for _ in range(policy.refine_step_cap):
        lo_below = lmap.eval_exact(ri.lo) > ri.lo if ri.lo > 1 else True
        hi_below = lmap.eval_exact(ri.hi) > ri.hi
        if lo_below and hi_below:
            return "below"
        if not lo_below and not hi_below:
            return "above"
        _refine_root_once(ri, coeffs)
        if ri.exact:
            return "below" if lmap.eval_exact(ri.lo) > ri.lo else "above"
    return None


def _cycle_witness_from_root(
    lmap: LaurentMap,
    ri: _RootInterval,
    coeffs: Sequence[int],
    tolerance_digits: int,
    policy: PrecisionPolicy,
) -> CycleWitness:
    """Refine one cycle root and pair it with its image under the map."""
    width = Fraction(1, 10 ** (tolerance_digits + 5))
    steps = 0
    while not ri.exact and ri.hi - ri.lo > width:
        _refine_root_once(ri, coeffs)
        steps += 1
        if steps > policy.refine_step_cap:
            break
    u_exact = ri.lo if ri.exact else None
    v_exact = lmap.eval_exact(u_exact) if u_exact is not None else None
    mid = (ri.lo + ri.hi) / 2
    with mp.workdps(tolerance_digits + 20):
        u = _frac_to_mpf(mid)
        v = lmap.eval_mp(u)
        residual = abs(lmap.eval_mp(v) - u)
        if v < u:
            u, v = v, u
            u_exact, v_exact = v_exact, u_exact
    return CycleWitness(u=u, v=v, u_exact=u_exact, v_exact=v_exact, residual=residual)


def _stop_near(bracket: tuple[Fraction, Fraction], tolerance_digits: int) -> Callable:
    mid = (bracket[0] + bracket[1]) / 2

    def stop(xs: list) -> bool:
        tol = mpf(10) ** (-tolerance_digits)
        return abs(xs[-1] - _frac_to_mpf(mid)) < tol

    return stop


def _stop_cycle(tolerance_digits: int) -> Callable:
    def stop(xs: list) -> bool:
        if len(xs) < 5:
            return False
        tol = mpf(10) ** (-tolerance_digits)
        return abs(xs[-1] - xs[-3]) < tol and abs(xs[-2] - xs[-4]) < tol

    return stop


def _stop_divergence(policy: PrecisionPolicy) -> Callable:
    def stop(xs: list) -> bool:
        low_gap = mpf(10) ** (-(mp.dps // 2))
        lows = [x for x in xs if x < 1 + low_gap]
        highs = [x for x in xs if x > policy.divergence_x_max]
        return bool(lows) and bool(highs)

    return stop


def _run_orbit(
    lmap: LaurentMap,
    start: Fraction,
    stop: Callable,
    max_iter: int,
    policy: PrecisionPolicy,
    min_dps: int,
) -> tuple[list, int]:
    """Iterate numerically, doubling precision if resolution near 1 dies."""
    dps = max(policy.start_digits, min_dps)
    while True:
        starved = False
        with mp.workdps(dps):
            xs = [_frac_to_mpf(start)]
            floor_gap = mpf(10) ** (10 - dps)
            for _ in range(max_iter):
                xn = xs[-1]
                if xn - 1 <= floor_gap:
                    starved = True
                    break
                xs.append(lmap.eval_mp(xn))
                if stop(xs):
                    break
        if not starved or dps >= policy.max_digits:
            return xs, dps
        dps = min(dps * 2, policy.max_digits)


# ---------------------------------------------------------------------------
# two-cycles, cobweb data, parameter scans
# ---------------------------------------------------------------------------


def two_cycle(
    a: DecimalExpansion | str,
    tolerance_digits: int = 12,
    policy: PrecisionPolicy = DEFAULT_POLICY,
) -> CycleWitness | None:
    """A two-term cycle pair u < omega < v with L(u) = v, L(v) = u, or None.

    Cycle points are located as roots of the cycle polynomial below the
    crossing point; with several pairs the outermost (smallest u) is
    returned.  For the involution family, where every point pairs up, the
    pair through the map's own value is reported exactly.
    """
    exp = _as_expansion(a)
    lmap = LaurentMap(exp)
    _require_unit_band(lmap.value)
    cert = _certificate(exp)
    if cert.cycle_coeffs is None:
        u_exact, v_exact = sorted((lmap.value, lmap.eval_exact(lmap.value)))
        with mp.workdps(tolerance_digits + 20):
            return CycleWitness(
                u=_frac_to_mpf(u_exact),
                v=_frac_to_mpf(v_exact),
                u_exact=u_exact,
                v_exact=v_exact,
                residual=mpf(0),
            )
    below: list[_RootInterval] = []
    for ri in cert.root_intervals():
        side = _omega_side(lmap, ri, cert.cycle_coeffs, policy)
        if side == "below":
            below.append(ri)
    if not below:
        return None
    outermost = min(below, key=lambda r: r.lo)
    return _cycle_witness_from_root(lmap, outermost, cert.cycle_coeffs, tolerance_digits, policy)


@dataclass(frozen=True)
class CobwebData:
    """Staircase segments plus curve samples for one orbit."""

    segments: list[tuple[float, float, float, float]]
    curve: list[tuple[float, float]]


def cobweb_points(
    a: DecimalExpansion | str,
    x0,
    steps: int,
    curve_samples: int = 200,
) -> CobwebData:
    """Cobweb plot data: orbit staircase against y = L<a>(x).

    Each step contributes the vertical segment (x, x) -> (x, L(x)) and
    the horizontal segment (x, L(x)) -> (L(x), L(x)).  Curve samples
    cover the range the orbit visited.
    """
    if steps < 1:
        raise DomainError(f"steps must be >= 1, got {steps}")
    exp = _as_expansion(a)
    lmap = LaurentMap(exp)
    with mp.workdps(30):
        x = mpf(str(x0)) if not isinstance(x0, Fraction) else _frac_to_mpf(x0)
        if x <= 1:
            raise DomainError(f"x0 must be > 1, got {x0}")
        orbit = [x]
        for _ in range(steps):
            orbit.append(lmap.eval_mp(orbit[-1]))
        segments = []
        for xn, xn1 in zip(orbit, orbit[1:]):
            segments.append((float(xn), float(xn), float(xn), float(xn1)))
            segments.append((float(xn), float(xn1), float(xn1), float(xn1)))
        lo = min(float(t) for t in orbit)
        hi = max(float(t) for t in orbit)
        pad = 0.05 * (hi - lo) if hi > lo else 0.5
        lo = max(1.0 + 1e-9, lo - pad)
        hi = hi + pad
        curve = []
        for i in range(curve_samples + 1):
            xc = lo + (hi - lo) * i / curve_samples
            curve.append((xc, float(lmap.eval_mp(mpf(xc)))))
    return CobwebData(segments=segments, curve=curve)


def class_scan(
    a_from: DecimalExpansion | str,
    a_to: DecimalExpansion | str,
    step: Fraction | str,
    tolerance_digits: int = 12,
    max_iter: int = 200,
    policy: PrecisionPolicy = DEFAULT_POLICY,
) -> list[ClassScanRow]:
    """Classify every grid point a_from, a_from + step, ..., up to a_to.

    Rows are produced in grid order and independently; a point whose
    classification blows a budget is recorded as undetermined rather
    than aborting the scan.
    """
    lo = _as_expansion(a_from).to_fraction()
    hi = _as_expansion(a_to).to_fraction()
    step_f = Fraction(step)
    if step_f <= 0:
        raise DomainError(f"step must be positive, got {step}")
    if not 1 < lo < hi < 10:
        raise DomainError(f"scan range must satisfy 1 < from < to < 10, got [{lo}, {hi}]")
    rows: list[ClassScanRow] = []
    value = lo
    while value <= hi:
        exp = expansion_of_fraction(value)
        try:
            fp = fixed_point(exp, tolerance_digits)
            report = trajectory(
                exp, max_iter=max_iter, tolerance_digits=tolerance_digits, policy=policy
            )
            rows.append(
                ClassScanRow(
                    a=exp,
                    cls=report.cls,
                    local_class=fp.local_class,
                    omega=float(fp.omega),
                    derivative=float(fp.derivative),
                )
            )
        except (PrecisionExhausted, ResourceBudgetExceeded):  # pragma: no cover - defensive
            rows.append(
                ClassScanRow(
                    a=exp,
                    cls=TrajectoryClass.UNDETERMINED,
                    local_class=LocalClass.UNDETERMINED,
                    omega=float("nan"),
                    derivative=float("nan"),
                )
            )
        value += step_f
    return rows

"""Fixed points, trajectory classes, two-cycles, cobwebs, scans."""

from fractions import Fraction

import mpmath
import pytest
from hypothesis import given
from hypothesis import strategies as st
from mpmath import mp, mpf

from dungeonlab import (
    CycleWitness,
    DomainError,
    LocalClass,
    TrajectoryClass,
    class_scan,
    classify_fixed_point,
    cobweb_points,
    fixed_point,
    laurent_eval,
    parse_decimal,
    trajectory,
    two_cycle,
)

PHI = (1 + mpmath.sqrt(5)) / 2


def cubic_root_oracle(m: int) -> mpf:
    """Real root of x^3 - x^2 - m by plain bisection, independent of the
    package's machinery."""
    with mp.workdps(40):
        lo, hi = mpf(1), mpf(4)
        for _ in range(200):
            mid = (lo + hi) / 2
            if mid**3 - mid**2 - m > 0:
                hi = mid
            else:
                lo = mid
        return (lo + hi) / 2


class TestFixedPoint:
    def test_golden_ratio(self):
        fp = fixed_point("1.1")
        assert fp.omega_exact is None
        assert abs(fp.omega - PHI) < mpf(10) ** -12

    def test_neutral_exact(self):
        fp = fixed_point("1.04")
        assert fp.omega_exact == 2
        assert fp.derivative_exact == -1
        assert fp.local_class is LocalClass.NEUTRAL
        assert not fp.numerically_neutral

    def test_cubic_family(self):
        for m in (1, 2, 3):
            fp = fixed_point(f"1.0{m}", tolerance_digits=15)
            assert abs(fp.omega - cubic_root_oracle(m)) < mpf(10) ** -14

    def test_integer_parameter(self):
        fp = fixed_point("3")
        assert fp.omega_exact == 3
        assert fp.derivative_exact == 0
        assert fp.local_class is LocalClass.ATTRACTOR

    def test_bracket_certified(self):
        fp = fixed_point("1.(01)")
        lo, hi = fp.bracket
        assert laurent_eval("1.(01)", lo) >= lo
        assert laurent_eval("1.(01)", hi) <= hi
        assert hi - lo < Fraction(1, 10**12)

    def test_involution_neutral_flagging(self):
        exact = fixed_point("1.(1)")  # omega = 2 is rational: certified
        assert exact.local_class is LocalClass.NEUTRAL
        assert not exact.numerically_neutral
        numeric = fixed_point("1.(2)")  # omega = 1 + sqrt(2) is not
        assert numeric.local_class is LocalClass.NEUTRAL
        assert numeric.numerically_neutral

    def test_classify_published_set(self):
        assert classify_fixed_point("1.1") is LocalClass.ATTRACTOR
        assert classify_fixed_point("1.04") is LocalClass.NEUTRAL
        assert classify_fixed_point("1.05") is LocalClass.REPELLING
        assert classify_fixed_point("1.1110000099") is LocalClass.ATTRACTOR

    def test_domain_guard(self):
        with pytest.raises(DomainError):
            fixed_point("12.5")


class TestTrajectory:
    def test_golden_ratio_convergence(self):
        report = trajectory("1.1")
        assert report.cls is TrajectoryClass.CONVERGES_TO_FIXED
        assert report.iterations_used <= 200
        assert abs(report.iterates[-1] - PHI) < mpf(10) ** -12

    def test_neutral_converges_with_exact_witness(self):
        report = trajectory("1.04")
        assert report.cls is TrajectoryClass.CONVERGES_TO_FIXED
        assert report.witness.omega_exact == 2

    def test_exact_two_cycle_family(self):
        for m in range(1, 9):
            report = trajectory(f"1.({m})")
            assert report.cls is TrajectoryClass.EXACT_TWO_CYCLE
            expected_low = Fraction(9 + m, 9)
            assert sorted([report.witness.u_exact, report.witness.v_exact]) == [
                expected_low,
                Fraction(10),
            ]

    def test_exact_two_cycle_from_ten(self):
        report = trajectory("1.(1)", x0=10)
        assert report.cls is TrajectoryClass.EXACT_TWO_CYCLE
        assert report.witness.u_exact == Fraction(10, 9)
        assert report.witness.v_exact == 10

    def test_limit_two_cycle(self):
        report = trajectory("1.05")
        assert report.cls is TrajectoryClass.CONVERGES_TO_TWO_CYCLE
        w = report.witness
        assert w.residual < mpf(10) ** -12
        omega = fixed_point("1.05").omega
        assert w.u < omega < w.v

    def test_divergence(self):
        for text in ("1.(01)", "1.(001)"):
            report = trajectory(text)
            assert report.cls is TrajectoryClass.DIVERGES
            assert report.witness.max_odd > 10**12
            assert report.witness.min_even < 1 + mpf(10) ** -30

    def test_attractor_with_cycle_capture(self):
        report = trajectory("1.1110000099")
        assert report.cls is TrajectoryClass.CONVERGES_TO_TWO_CYCLE
        assert classify_fixed_point("1.1110000099") is LocalClass.ATTRACTOR

    def test_fixed_from_start_integer(self):
        report = trajectory("3")
        assert report.cls is TrajectoryClass.FIXED_FROM_START
        assert report.witness.omega_exact == 3

    def test_fixed_from_start_at_omega(self):
        report = trajectory("1.04", x0=2)
        assert report.cls is TrajectoryClass.FIXED_FROM_START

    def test_integer_from_other_start_converges(self):
        report = trajectory("3", x0=10)
        assert report.cls is TrajectoryClass.CONVERGES_TO_FIXED

    def test_default_start_is_the_value(self):
        report = trajectory("1.1")
        assert report.iterates[0] == mpf(11) / 10

    def test_monotone_interleaving(self):
        for text in ("1.1", "1.05", "1.02"):
            report = trajectory(text)
            evens = report.iterates[0::2]
            odds = report.iterates[1::2]
            eps = mpf(10) ** (-(report.precision_used - 10))
            for seq in (evens, odds):
                diffs = [b - a for a, b in zip(seq, seq[1:])]
                assert all(d >= -eps for d in diffs) or all(d <= eps for d in diffs), text

    def test_neighborhood_consistency(self):
        for text in ("1.1", "1.05", "1.(01)"):
            exp = parse_decimal(text)
            x1 = exp.to_fraction()
            x3 = laurent_eval(exp, laurent_eval(exp, x1))
            between = (x1 + x3) / 2
            assert trajectory(exp, x0=between).cls is trajectory(exp).cls

    def test_determinism(self):
        a = trajectory("1.07")
        b = trajectory("1.07")
        assert a.cls is b.cls and a.iterates == b.iterates

    def test_rejects_bad_start(self):
        with pytest.raises(DomainError):
            trajectory("1.1", x0=Fraction(1, 2))

    @given(
        st.integers(min_value=1, max_value=9),
        st.integers(min_value=0, max_value=99),
    )
    def test_terminating_never_diverges(self, lead, frac):
        text = f"1.{lead}{frac:02d}"
        report = trajectory(text, max_iter=60)
        assert report.cls is not TrajectoryClass.DIVERGES


class TestTwoCycleSearch:
    def test_none_for_contracting_map(self):
        assert two_cycle("1.1") is None

    def test_repelling_pair(self):
        pair = two_cycle("1.05")
        omega = fixed_point("1.05").omega
        assert pair.u < omega < pair.v
        u_image = laurent_eval("1.05", _to_fraction(pair.u))
        with mp.workdps(30):
            assert abs(mpf(u_image.numerator) / u_image.denominator - pair.v) < mpf(10) ** -10

    def test_involution_exact_pair(self):
        pair = two_cycle("1.(1)")
        assert (pair.u_exact, pair.v_exact) == (Fraction(10, 9), Fraction(10))

    def test_residual_contract(self):
        pair = two_cycle("1.07", tolerance_digits=15)
        assert pair.residual < mpf(10) ** -15


def _to_fraction(x: mpf) -> Fraction:
    with mp.workdps(25):
        return Fraction(mpmath.nstr(mpf(x), 20))


class TestCobweb:
    def test_first_vertical_segment(self):
        data = cobweb_points("1.1", Fraction(11, 10), 1)
        x1, y1, x2, y2 = data.segments[0]
        assert (x1, y1, x2) == (1.1, 1.1, 1.1)
        assert y2 == pytest.approx(21 / 11, abs=1e-12)

    def test_segments_contiguous(self):
        data = cobweb_points("1.3", 2, 10)
        for prev, cur in zip(data.segments, data.segments[1:]):
            assert (prev[2], prev[3]) == (cur[0], cur[1])

    def test_settles_on_fixed_point(self):
        data = cobweb_points("1.1", Fraction(11, 10), 40)
        x1, y1, x2, y2 = data.segments[-1]
        assert x2 == pytest.approx(float(PHI), abs=1e-6)
        assert y2 == pytest.approx(float(PHI), abs=1e-6)

    def test_curve_covers_visited_range(self):
        data = cobweb_points("1.05", 2, 30)
        xs = [p[0] for p in data.curve]
        assert min(xs) > 1
        seg_xs = [s[0] for s in data.segments] + [s[2] for s in data.segments]
        assert min(xs) <= min(seg_xs) and max(xs) >= max(seg_xs)

    def test_rejects_zero_steps(self):
        with pytest.raises(DomainError):
            cobweb_points("1.1", 2, 0)


class TestClassScan:
    def test_published_pair(self):
        rows = class_scan("1.04", "1.05", Fraction(1, 100))
        classes = {str(r.a): r.cls for r in rows}
        assert classes["1.04"] is TrajectoryClass.CONVERGES_TO_FIXED
        assert classes["1.05"] is TrajectoryClass.CONVERGES_TO_TWO_CYCLE

    def test_integers_sit_on_fixed_points(self):
        rows = class_scan("2", "9", Fraction(1))
        assert len(rows) == 8
        assert all(r.cls is TrajectoryClass.FIXED_FROM_START for r in rows)

    def test_tenths_family(self):
        rows = class_scan("1.1", "1.9", Fraction(1, 10))
        for r, m in zip(rows, range(1, 10)):
            assert r.cls is TrajectoryClass.CONVERGES_TO_FIXED
            with mp.workdps(30):
                want = (1 + mpmath.sqrt(4 * m + 1)) / 2
                assert r.omega == pytest.approx(float(want), abs=1e-9)

    def test_grid_is_deterministic_and_ordered(self):
        rows = class_scan("1.01", "1.03", Fraction(1, 100))
        assert [str(r.a) for r in rows] == ["1.01", "1.02", "1.03"]

    def test_rejects_bad_ranges(self):
        with pytest.raises(DomainError):
            class_scan("1.5", "1.2", Fraction(1, 10))
        with pytest.raises(DomainError):
            class_scan("1.2", "1.5", Fraction(0))

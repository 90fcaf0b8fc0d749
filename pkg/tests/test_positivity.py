"""Test positivity predicates, windows and scans."""

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from sahi_kernels.src.errors import InapplicableError
from sahi_kernels.src.kernel import KernelSpec, Space
from sahi_kernels.src.positivity import (
    ScanReport,
    Verdict,
    check_hypotheses,
    definite_predicate,
    minimal_witness_radius,
    region_grid,
    report_from_census,
    scan_sign_constancy,
    sign_census,
    st_to_sigma_tau,
    window_predicate,
    witness_order,
)
from sahi_kernels.src.positivity.scan import ordered_map
from sahi_kernels.src.validate.schemas import validate_region_grid, validate_scan_census

HALF = Fraction(1, 2)


class TestConversion:
    """Test the (s, t) → (σ, τ) shift."""

    def test_examples(self):
        """Base points of the three families."""
        assert st_to_sigma_tau(Space.UN, 1, 0, 0) == (-HALF, -HALF)
        assert st_to_sigma_tau(Space.UO, 3, 0, 0) == (-1, -1)
        assert st_to_sigma_tau(Space.USp, 2, Fraction(1, 4), 0) == (Fraction(-5, 4), Fraction(-3, 2))


class TestPredicates:
    """Test the floor criteria and the window descriptions."""

    def test_definite_examples(self):
        """Floor equalities."""
        assert definite_predicate(Space.UN, 1, -HALF, -HALF)
        assert not definite_predicate(Space.UN, 1, HALF, HALF)
        sigma = tau = Fraction(-3, 2) + Fraction(1, 10)
        assert definite_predicate(Space.USp, 2, sigma, tau) == ((-tau) // 1 == (sigma + 3) // 1)

    def test_hypotheses(self):
        """Excluded lattices and ranks raise instead of answering."""
        with pytest.raises(InapplicableError):
            check_hypotheses(Space.UN, 1, 1, 0.5)
        with pytest.raises(InapplicableError):
            check_hypotheses(Space.UO, 2, HALF, Fraction(1, 3))
        with pytest.raises(InapplicableError):
            definite_predicate(Space.USp, 1, Fraction(1, 3), Fraction(1, 3))
        check_hypotheses(Space.UO, 2, Fraction(1, 3), Fraction(1, 3))

    def test_window_examples(self):
        """Explicit islands."""
        assert window_predicate(Space.UN, 1, 0.1, 0.1)
        assert window_predicate(Space.UN, 2, -0.5, 0.5)
        assert not window_predicate(Space.USp, 2, 0.6, 0.4)
        assert window_predicate(Space.UN, 1, Fraction(5, 4), Fraction(-5, 4))

    @settings(max_examples=200, deadline=None)
    @given(
        space=st.sampled_from(list(Space)),
        n=st.integers(2, 5),
        i=st.integers(-40, 40),
        j=st.integers(-40, 40),
    )
    def test_window_matches_floor_criterion(self, space, n, i, j):
        """Both descriptions agree off the excluded lattices."""
        s = Fraction(2 * i + 1, 16)
        t = Fraction(2 * j + 1, 16)
        sigma, tau = st_to_sigma_tau(space, n, s, t)
        assert window_predicate(space, n, s, t) == definite_predicate(space, n, sigma, tau)

    @given(i=st.integers(-40, 40), j=st.integers(-40, 40))
    def test_window_matches_for_one_variable(self, i, j):
        """UN is also defined for n = 1."""
        s, t = Fraction(2 * i + 1, 16), Fraction(2 * j + 1, 16)
        assert window_predicate(Space.UN, 1, s, t) == definite_predicate(Space.UN, 1, *st_to_sigma_tau(Space.UN, 1, s, t))


class TestScan:
    """Test sign-constancy scans."""

    def test_positive_at_l2_point(self):
        """n = 1, σ = τ = −1/2: all 13 signs positive."""
        report = scan_sign_constancy(KernelSpec(Space.UN, 1, -HALF, -HALF), 6)
        assert report.verdict == Verdict.POSITIVE
        assert report.count == 13
        assert report.census == {"positive": 13, "negative": 0, "zero": 0}
        assert report.witness is None
        assert minimal_witness_radius(report) is None

    def test_indefinite_witness(self):
        """n = 1, σ = τ = 1/2: λ = (0) and λ = (1) disagree."""
        report = scan_sign_constancy(KernelSpec(Space.UN, 1, HALF, HALF), 6)
        assert report.verdict == Verdict.INDEFINITE
        assert report.witness == ((0,), (1,))
        assert minimal_witness_radius(report) == 1

    def test_degenerate(self):
        """Integer σ, τ make most eigenvalues vanish."""
        report = scan_sign_constancy(KernelSpec(Space.UN, 1, 0, 0), 3)
        assert report.verdict == Verdict.DEGENERATE
        assert report.witness == ((0,), (1,))

    def test_matches_predicate_uo(self):
        """UO, n = 2, σ = τ = −3/4 is the L² point and definite."""
        spec = KernelSpec(Space.UO, 2, Fraction(-3, 4), Fraction(-3, 4))
        assert definite_predicate(Space.UO, 2, spec.sigma, spec.tau)
        assert scan_sign_constancy(spec, 4).verdict.is_definite

    def test_threads_do_not_change_result(self):
        """Parallel scans are deterministic."""
        spec = KernelSpec(Space.USp, 2, Fraction(-7, 5), Fraction(-6, 5))
        assert scan_sign_constancy(spec, 3, threads=4) == scan_sign_constancy(spec, 3, threads=1)
        assert ordered_map(lambda x: x * x, list(range(20)), threads=4) == [x * x for x in range(20)]

    def test_witness_order(self):
        """By radius, then descending lexicographic."""
        assert witness_order([(-1,), (1,), (0,), (2,)]) == [(0,), (1,), (-1,), (2,)]

    def test_report_dict(self):
        """JSON form restores the report."""
        report = scan_sign_constancy(KernelSpec(Space.UN, 1, HALF, HALF), 2)
        payload = report.to_dict()
        assert payload["verdict"] == "indefinite"
        assert payload["witness"] == [[0], [1]]
        assert ScanReport.from_dict(payload) == report

    def test_census_schema(self):
        """The census table validates."""
        frame = sign_census(KernelSpec(Space.UN, 2, Fraction(-1, 3), Fraction(1, 4)), 2)
        assert list(frame.columns) == ["signature", "radius", "sign", "log_abs"]
        assert len(frame) == 15
        assert validate_scan_census(frame)["valid"]

    def test_report_from_census(self):
        """A validated census gives the same report as the one-shot scan."""
        spec = KernelSpec(Space.UN, 1, HALF, HALF)
        frame = sign_census(spec, 4)
        assert validate_scan_census(frame)["valid"]
        assert report_from_census(spec, frame, 4) == scan_sign_constancy(spec, 4)


class TestRegion:
    """Test (s, t) grids."""

    def test_predicate_and_scan_agree(self):
        """Small UN grid around the origin."""
        grid = region_grid(Space.UN, 1, (-1, 1), (-1, 1), HALF, box_radius=4)
        assert list(grid.columns) == ["s", "t", "predicate", "scan"]
        assert len(grid) == 16
        assert validate_region_grid(grid)["valid"]
        verdicts = set(grid["predicate"])
        assert verdicts == {"definite", "indefinite"}
        origin = grid[(grid["s"] == 0.25) & (grid["t"] == 0.25)]
        assert origin["predicate"].item() == "definite"

    def test_inapplicable_cells(self):
        """Cells on the excluded lattice carry no verdict."""
        grid = region_grid(Space.UN, 1, (0, 1), (0, 1), HALF, offset=0, box_radius=2)
        lattice = grid[(grid["s"] == 0.5) & (grid["t"] == 0.5)]
        assert lattice["predicate"].item() == "inapplicable"
        assert lattice["scan"].item() == "inapplicable"

    def test_usp_diagonal(self):
        """USp, n = 2: diagonal points near the origin are definite."""
        grid = region_grid(Space.USp, 2, (Fraction(-1, 4), Fraction(1, 4)), (Fraction(-1, 4), Fraction(1, 4)), Fraction(1, 4), box_radius=3)
        diagonal = grid[grid["s"] == grid["t"]]
        assert len(diagonal) == 2
        assert (diagonal["scan"] == "definite").all()
        assert validate_region_grid(grid)["valid"]


GRID_CONFIGURATIONS = [
    (Space.UN, 1),
    (Space.UN, 2),
    (Space.UN, 3),
    (Space.UO, 2),
    (Space.UO, 3),
    (Space.USp, 2),
    (Space.USp, 3),
]


@pytest.mark.slow
class TestFullRegionGrid:
    """Test the closed-form criterion against the scan on [−2, 2]² at step 1/4."""

    @pytest.mark.parametrize("space,n", GRID_CONFIGURATIONS)
    def test_zero_disagreements(self, space, n):
        """Offset 1/8 and M = 6: every admissible point agrees."""
        grid = region_grid(space, n, (-2, 2), (-2, 2), Fraction(1, 4), offset=Fraction(1, 8), box_radius=6)
        assert len(grid) == 256
        assert (grid["predicate"] == "inapplicable").sum() == 0
        assert (grid["predicate"] != grid["scan"]).sum() == 0
        assert validate_region_grid(grid)["valid"]

    @pytest.mark.parametrize("space,n", GRID_CONFIGURATIONS)
    def test_windows_match_criterion(self, space, n):
        """The (s, t) windows reproduce the floor criterion at every grid point."""
        for i in range(16):
            for j in range(16):
                s = Fraction(-2) + Fraction(1, 8) + Fraction(i, 4)
                t = Fraction(-2) + Fraction(1, 8) + Fraction(j, 4)
                sigma, tau = st_to_sigma_tau(space, n, s, t)
                assert window_predicate(space, n, s, t) == definite_predicate(space, n, sigma, tau)

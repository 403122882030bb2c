"""Hilbert matrices, first differences, puncturing."""

import numpy as np
import pytest

from biproj.errors import NonPositiveEntry, NotACM
from biproj.grid import PointGrid, corners_and_vertices, staircase
from biproj.hilbert import (
    DeltaMatrix,
    HilbertMatrix,
    accumulate,
    boundary_functions,
    check_T0,
    delta,
    delta_corners_vertices,
    hilbert_acm,
    puncture_hilbert,
)

from conftest import BIG_PLAN, TWO_ROW_DELTA, BIG_Z_DELTA


def test_hilbert_acm_two_row(two_row):
    M = hilbert_acm(two_row)
    assert M.degree == 6
    assert M.m(0, 0) == 1
    # row 0 counts columns hit, column 0 counts rows hit
    assert [M.m(0, j) for j in range(5)] == [1, 2, 3, 4, 4]
    assert [M.m(i, 0) for i in range(3)] == [1, 2, 2]
    assert M.m(10, 10) == 6  # stabilizes at the degree


def test_hilbert_acm_requires_acm():
    with pytest.raises(NotACM):
        hilbert_acm(PointGrid.from_points(2, 2, [(0, 0), (1, 1)]))


def test_hilbert_matrix_rejects_non_monotone():
    with pytest.raises(AssertionError):
        HilbertMatrix(np.array([[1, 2, 2], [1, 1, 1], [1, 1, 1]]), degree=1)


def test_delta_accumulate_roundtrip(big_staircase):
    M = hilbert_acm(big_staircase)
    D = delta(M)
    back = accumulate(D)
    wi = min(M.window[0], back.window[0])
    wj = min(M.window[1], back.window[1])
    assert (back.entries[: wi + 1, : wj + 1] == M.entries[: wi + 1, : wj + 1]).all()


def test_delta_of_staircase_is_indicator(two_row):
    D = delta(hilbert_acm(two_row))
    assert (D.entries[:2, :4] == TWO_ROW_DELTA).all()
    assert D.degree == 6
    assert D.c(5, 5) == 0 and D.c(-1, 0) == 0


def test_delta_views_are_consistent(big_staircase):
    D = delta(hilbert_acm(big_staircase))
    a, b = D.delta_row, D.delta_col
    # both views accumulate back to the same matrix
    assert (np.cumsum(b, axis=0) == np.cumsum(a, axis=1)).all()


def test_check_T0_accepts_scheme_deltas(big_staircase, two_row):
    for g in (big_staircase, two_row, staircase((1,))):
        assert check_T0(delta(hilbert_acm(g))).ok


def test_check_T0_small_verdicts():
    assert check_T0(DeltaMatrix(np.array([[1, 1], [1, 0]]))).ok
    # an entry above 1 breaks the first condition
    rep = check_T0(DeltaMatrix(np.array([[1, 1], [1, 2]])))
    assert not rep.ok and any(v.startswith("(1)") for v in rep.violations)
    # a negative entry northwest of a positive one breaks the second
    rep = check_T0(DeltaMatrix(np.array([[1, -1], [1, 1]])))
    assert not rep.ok and any(v.startswith("(2)") for v in rep.violations)


def test_check_T0_third_condition():
    # column sums b must be nonnegative and, below row 0, weakly decreasing
    rep = check_T0(DeltaMatrix(np.array([[1, 0], [-1, 0]])))
    assert not rep.ok
    assert any(v.startswith("(3)") for v in rep.violations)


def test_boundary_functions(big_staircase):
    M = hilbert_acm(big_staircase)
    i_of, j_of = boundary_functions(M)
    assert i_of(0) == 5  # six distinct rows: stabilizes entering degree 5
    assert j_of(0) == 6  # seven distinct columns
    assert i_of(7) == i_of(8)  # beyond stabilization nothing moves


def test_puncture_hilbert_drops_up_set(two_row):
    M = hilbert_acm(two_row)
    P = puncture_hilbert(M, 1, 3)
    assert P.degree == 5
    assert P.m(1, 3) == M.m(1, 3) - 1
    assert P.m(0, 3) == M.m(0, 3)
    assert P.m(2, 4) == M.m(2, 4) - 1


def test_puncture_hilbert_frontier_always_fails():
    # stabilization makes the last two rows equal, so a puncture confined to
    # the outermost one cannot come from removing a point
    M = hilbert_acm(staircase((1,)))
    with pytest.raises(NonPositiveEntry):
        puncture_hilbert(M, M.window[0], M.window[1])


def test_puncture_hilbert_rejects_impossible_degree(two_row):
    M = hilbert_acm(two_row)
    # removing in a degree below the counts breaks monotonicity or positivity
    with pytest.raises(NonPositiveEntry):
        puncture_hilbert(puncture_hilbert(M, 0, 0), 0, 0)
    with pytest.raises(ValueError):
        puncture_hilbert(M, -1, 0)


def test_delta_corners_vertices_match_grid(big_staircase, two_row):
    for g in (big_staircase, two_row, staircase((3, 3, 3)), staircase((1,))):
        D = delta(hilbert_acm(g))
        got_c, got_v = delta_corners_vertices(D)
        want_c, want_v = corners_and_vertices(g)
        assert got_c == want_c
        assert got_v == want_v


def test_delta_corners_vertices_after_removal(big_staircase):
    M = hilbert_acm(big_staircase)
    classes = {(0, 4): (3, 6), (1, 3): (3, 6), (2, 1): (5, 6),
               (3, 2): (4, 4), (4, 0): (5, 2)}
    for pos in BIG_PLAN:
        M = puncture_hilbert(M, *classes[pos])
    D = delta(M)
    assert (D.entries[:7, :8] == BIG_Z_DELTA).all()
    got_c, got_v = delta_corners_vertices(D)
    assert set(got_c) == {(6, 0), (5, 2), (4, 3), (3, 5), (0, 7)}


def test_delta_corners_vertices_all_zero():
    assert delta_corners_vertices(DeltaMatrix(np.zeros((3, 3), dtype=np.int64))) == ([], [])

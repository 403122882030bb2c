"""Rank/Koszul-homology verification engine."""

from collections import Counter
from fractions import Fraction

import pytest

from biproj.errors import BadField
from biproj.fields import GFP, QQ, PrimeField
from biproj.grid import PointGrid, staircase
from biproj.oracle import (
    _upset_root,
    betti_oracle,
    drop_sets,
    generator_count_oracle,
    hilbert_oracle,
    separating_degree_oracle,
    tor_dimensions,
    verify_separator,
)
from biproj.resolution import acm_resolution, removal_plan, remove_points, separator_for


@pytest.mark.parametrize("field", [QQ, GFP])
def test_hilbert_oracle_matches_combinatorial(field, two_row, big_staircase):
    from biproj.hilbert import hilbert_acm

    for g in (two_row, big_staircase, staircase((3, 3, 3))):
        ma = hilbert_acm(g)
        mo = hilbert_oracle(g, field, window=ma.window)
        wi, wj = ma.window
        assert (mo.entries[: wi + 1, : wj + 1] == ma.entries[: wi + 1, : wj + 1]).all()


def test_hilbert_oracle_non_acm():
    # diagonal pair: 2 generic points impose independent conditions
    g = PointGrid.from_points(2, 2, [(0, 0), (1, 1)])
    M = hilbert_oracle(g)
    assert M.m(0, 0) == 1 and M.m(1, 0) == 2 and M.m(0, 1) == 2 and M.m(1, 1) == 2


def test_hilbert_oracle_respects_parameters():
    # same incidence, fractional line parameters: dimensions cannot change
    g1 = staircase((2, 1))
    g2 = staircase((2, 1), row_params=(Fraction(1, 2), 3), col_params=(0, Fraction(7, 3)))
    assert (hilbert_oracle(g1, QQ).entries == hilbert_oracle(g2, QQ).entries).all()


@pytest.mark.parametrize("engine", ["reduced", "direct"])
def test_betti_oracle_single_point(engine):
    t = betti_oracle(staircase((1,)), engine=engine)
    assert t.counters()[0] == Counter({(1, 0): 1, (0, 1): 1})
    assert t.counters()[1] == Counter({(1, 1): 1})
    assert t.counters()[2] == Counter()


@pytest.mark.parametrize("engine", ["reduced", "direct"])
@pytest.mark.parametrize("field", [QQ, GFP])
def test_betti_oracle_acm_cases(engine, field, two_row):
    for g in (two_row, staircase((3, 1, 1)), staircase((2, 2))):
        assert betti_oracle(g, field, engine=engine).counters() == \
            acm_resolution(g).counters()


def test_betti_oracle_engines_agree_on_non_acm(two_row):
    z = two_row.without((0, 0)).without((0, 1))
    r = betti_oracle(z, engine="reduced")
    d = betti_oracle(z, engine="direct")
    assert r.counters() == d.counters()
    assert r.counters()[0] == Counter({(2, 0): 1, (1, 2): 2, (0, 4): 1})


def test_betti_oracle_removal_case(big_staircase):
    plan = removal_plan(big_staircase, [(0, 4), (1, 3), (2, 1), (3, 2), (4, 0)])
    res = remove_points(big_staircase, plan)
    assert betti_oracle(res.grid_z, GFP).counters() == res.betti.counters()


def test_betti_oracle_rejects_unknown_engine(two_row):
    with pytest.raises(ValueError):
        betti_oracle(two_row, engine="floating")


def test_tor_dimensions(two_row):
    t1 = tor_dimensions(two_row, 1, engine="direct")
    assert t1 == Counter({(2, 0): 1, (1, 2): 1, (0, 4): 1})
    assert tor_dimensions(two_row, 4, engine="direct") == Counter()
    with pytest.raises(ValueError):
        tor_dimensions(two_row, 4, engine="reduced")  # only three variables


def test_separating_degree_oracle(two_row):
    assert separating_degree_oracle(two_row, (0, 1)) == (1, 3)
    y = two_row.without((0, 1))
    assert separating_degree_oracle(y, (0, 0)) == (1, 2)
    # non-ACM pair: drop set has two minimal elements, no unique degree
    g = PointGrid.from_points(2, 2, [(0, 0), (1, 1)])
    assert separating_degree_oracle(g, (0, 0)) is None


def test_drop_sets_match_counts(two_row):
    from biproj.grid import classify_points

    M = hilbert_oracle(two_row)
    drops = drop_sets(two_row)
    expected = {pc.position: pc.separating_degree for pc in classify_points(two_row)}
    for pos, cells in drops.items():
        assert _upset_root(cells, M.window) == expected[pos]


def test_upset_root():
    window = (2, 2)
    full = {(i, j) for i in range(3) for j in range(3)}
    assert _upset_root(full, window) == (0, 0)
    assert _upset_root({(1, 1), (1, 2), (2, 1), (2, 2)}, window) == (1, 1)
    assert _upset_root({(0, 1), (1, 0), (1, 1)}, window) is None  # two minima
    assert _upset_root({(1, 1), (2, 2)}, window) is None  # not an up-set
    assert _upset_root(set(), window) is None


def test_generator_count_oracle(two_row, big_staircase):
    t = acm_resolution(two_row)
    for (d, mult) in t.beta0:
        assert generator_count_oracle(two_row, d=d) == mult
    assert generator_count_oracle(two_row, d=(2, 2)) == 0
    plan = removal_plan(big_staircase, [(0, 4), (1, 3), (2, 1), (3, 2), (4, 0)])
    res = remove_points(big_staircase, plan)
    assert generator_count_oracle(res.grid_z, d=(3, 6)) == 2
    assert generator_count_oracle(res.grid_z, d=(6, 2)) == 0


def test_verify_separator(two_row):
    sep = separator_for(two_row, (0, 1))
    z = two_row.without((0, 1))
    assert verify_separator(sep, z, (0, 1))
    assert verify_separator(sep, z, (0, 1), field=PrimeField(10007))
    # swap in a line through the removed point: no longer a separator
    import dataclasses

    bad = dataclasses.replace(sep, lines=(("R", 1), ("C", 0), ("C", 1), ("C", 3)))
    assert not verify_separator(bad, z, (0, 1))
    # wrong degree bookkeeping is rejected before any evaluation
    bad2 = dataclasses.replace(sep, degree=(2, 2))
    assert not verify_separator(bad2, z, (0, 1))


def test_prime_field_parameter_collision():
    g = staircase((2, 1), row_params=(0, 5), col_params=(0, 1))
    with pytest.raises(BadField):
        hilbert_oracle(g, PrimeField(5))
    # the default big prime keeps small integer parameters distinct
    assert hilbert_oracle(g, GFP).degree == 3

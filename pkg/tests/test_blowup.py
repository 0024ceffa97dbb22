import pytest

from ratmaps.blowup import (PowerTable, is_linear_type, rees_ideal, saturated_fiber_table,
                            sym_ideal)
from ratmaps.groebner import Ideal
from ratmaps.maps import RationalMap
from ratmaps.ring import Ring, multi_degree

from conftest import CORPUS_DEGREES, load_map


def test_rees_identity():
    F = load_map("identity")
    R = rees_ideal(F)
    A = R.ring
    minors = [A("x1*y0 - x0*y1"), A("x2*y0 - x0*y2"), A("x2*y1 - x1*y2")]
    assert R.ideal().gb().basis == Ideal(A, minors).gb().basis
    assert all(b == ((1,), 1) for b in R.bidegrees)


def test_rees_cremona_is_sym():
    F = load_map("cremona")
    R, S = rees_ideal(F), sym_ideal(F)
    A = R.ring
    target = Ideal(A, ["x0*y0 - x1*y1", "x1*y1 - x2*y2"])
    assert R.ideal().issubset(target) and target.issubset(R.ideal())
    assert R.same_ideal(S)
    assert is_linear_type(F)


def test_rees_monomial_binomials():
    R = rees_ideal(load_map("monomial"))
    assert R.gens
    assert all(len(g.terms) == 2 for g in R.gens)
    assert sorted(R.bidegrees) == [((0, 1), 1), ((1, 0), 1)]


def test_sym_examples():
    S = sym_ideal(load_map("cremona"))
    A = S.ring
    target = Ideal(A, ["x0*y0 - x1*y1", "x1*y1 - x2*y2"])
    assert S.ideal().issubset(target) and target.issubset(S.ideal())
    R = Ring([["x0", "x1"]])
    S = sym_ideal(RationalMap(R, ["x0", "x1"]))
    assert len(S.gens) == 1
    assert S.gens[0] in (S.ring("x1*y0 - x0*y1"), S.ring("x0*y1 - x1*y0"))


def test_sym_mu1_family():
    # the syzygy (x0, -x1, 0) gives g1 = x0*y0 - x1*y1
    F = load_map("cubic_mu1")
    S = sym_ideal(F)
    A = S.ring
    assert A("x0*y0 - x1*y1") in S.gens or A("x1*y1 - x0*y0") in S.gens
    assert sorted(b[0] for b in S.bidegrees) == [(1,), (2,)]


def test_linear_type_examples():
    assert is_linear_type(load_map("cremona"))
    R = Ring([["x0", "x1", "x2"]])
    assert not is_linear_type(RationalMap(R, ["x0^3", "x0^2*x1", "x1^3"]))
    assert is_linear_type(RationalMap(Ring([["x0", "x1"]]), ["x0", "x1"]))


def test_sym_inside_rees_corpus(corpus_map):
    name, F = corpus_map
    R, S = rees_ideal(F), sym_ideal(F)
    assert R.contains_all(S)
    for g in R.gens:
        multi_degree(g)  # raises unless bihomogeneous


def test_rees_x_linear_parts_are_syzygies(corpus_map):
    name, F = corpus_map
    R, S = rees_ideal(F), sym_ideal(F)
    unit = {tuple(1 if k == i else 0 for k in range(F.m)) for i in range(F.m)}
    lin_rees = [g for g, b in zip(R.gens, R.bidegrees) if b[0] in unit and b[1] == 1]
    lin_sym = [g for g, b in zip(S.gens, S.bidegrees) if b[0] in unit]
    assert Ideal(R.ring, lin_rees).issubset(Ideal(S.ring, lin_sym))
    assert Ideal(S.ring, lin_sym).issubset(Ideal(R.ring, lin_rees))


def test_fiber_table_monomial_zero():
    t = saturated_fiber_table(load_map("monomial"), 6)
    assert t.rows[0] == (1, 1)
    assert all(v == 0 for v in t.differences.values())


def test_fiber_table_squares():
    t = saturated_fiber_table(load_map("squares"), 6)
    assert t.differences == {1: 3, 2: 9, 3: 18, 4: 30, 5: 45, 6: 63}
    assert t.fit.fitted_degree == 2
    # δ-th difference = δ!·lim/n^δ = deg(Y)·(deg F - 1) = 3
    assert t.fit.leading_delta == 3
    assert 1 + t.fit.leading_delta == 4


def test_fiber_table_identity_zero():
    t = saturated_fiber_table(load_map("identity"), 5)
    assert all(v == 0 for v in t.differences.values())
    with pytest.raises(ValueError):
        saturated_fiber_table(load_map("identity"), 1)


def test_fiber_table_rows_dominate(corpus_map):
    name, F = corpus_map
    t = saturated_fiber_table(F, 5)
    assert all(sat >= plain for plain, sat in t.rows.values())
    if CORPUS_DEGREES[name] == 1:
        assert all(v == 0 for v in t.differences.values())


def test_power_table_cached():
    F = load_map("cremona")
    assert PowerTable.of(F) is PowerTable.of(F)
    T = PowerTable.of(F)
    assert T.plain_dimension(2) == 6
    assert T.length(1) == 3


def test_multiplicity_identity_corpus(corpus_map):
    # e(saturated fiber) = deg F · deg Y, read from the saturated column
    name, F = corpus_map
    t = saturated_fiber_table(F, 6)
    assert t.sat_fit is not None and t.sat_fit.stabilized
    assert t.sat_fit.leading_delta == CORPUS_DEGREES[name]


def test_multiplicity_identity_random():
    # deg F · deg Y from the saturated column on random plane maps and the quartic
    import random
    from ratmaps.degree import degree_via_limit
    from ratmaps.generators import random_perturbed_map
    rng = random.Random(17)
    maps = [random_perturbed_map(rng) for _ in range(10)] + [load_map("quartic")]
    for F in maps:
        lim = degree_via_limit(F)
        t = saturated_fiber_table(F, 6)
        assert t.sat_fit.stabilized
        assert t.sat_fit.leading_delta == lim.deg_F * lim.deg_Y

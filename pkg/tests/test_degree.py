import random

import pytest

from ratmaps.degree import (HypothesisError, base_locus_dimension, base_locus_report, bound_p1p1,
                            bound_single, criterion_1n, criterion_22, degree, degree_via_formula,
                            degree_via_limit, fiber_oracle, j_multiplicity, p2_formula)
from ratmaps.generators import (forms_through, plane_ring, random_linear_type_plane,
                                random_p1p1_map, random_plane_through_points, random_point)
from ratmaps.groebner import Ideal
from ratmaps.maps import RationalMap
from ratmaps.ring import Ring

from conftest import CORPUS_DEGREES, load_map

P1P1 = Ring([["x10", "x11"], ["x20", "x21"]], 101)


def test_limit_examples():
    r = degree_via_limit(load_map("squares"))
    assert (r.deg_F, r.deg_Y, r.dim_Y) == (4, 1, 2)
    assert degree_via_limit(load_map("monomial")).deg_F == 1
    assert degree_via_limit(load_map("identity")).deg_F == 1


def test_base_locus_examples():
    b = base_locus_report(load_map("squares"))
    assert (b.dim_B, b.deg_B, b.e_B) == (-1, 0, 0)
    b = base_locus_report(load_map("cremona"))
    assert (b.dim_B, b.deg_B, b.e_B) == (0, 3, 3)
    b = base_locus_report(load_map("cubic_mu1"))
    assert (b.dim_B, b.deg_B, b.e_B) == (0, 7, 8)
    assert all(b.stabilized.values())
    assert b.deg_B <= b.e_B


def test_base_locus_dimension():
    assert base_locus_dimension(load_map("squares")) == -1
    assert base_locus_dimension(load_map("cremona")) == 0
    R = Ring([["x0", "x1", "x2"]])
    assert base_locus_dimension(RationalMap(R, ["x0*x1", "x0*x2", "x0^2"])) == 1


def test_formula_examples():
    assert degree_via_formula(load_map("squares")).deg_F == 4
    r = degree_via_formula(load_map("cremona"))
    assert (r.deg_F, r.deg_X) == (1, 1)
    R = Ring([["x0", "x1", "x2"]])
    with pytest.raises(HypothesisError):
        degree_via_formula(RationalMap(R, ["x0*x1", "x0*x2", "x0^2"]))


def test_formula_bigraded_birational():
    F = random_p1p1_map((2, 2), 3, random.Random(1), double=1)
    b = base_locus_report(F)
    assert (b.deg_B, b.e_B) == (6, 7)
    r = degree_via_formula(F)
    assert r.deg_X == 2 and r.deg_F == 8 - b.e_B == 1


def test_oracle_examples():
    assert fiber_oracle(load_map("identity")) == 1
    assert fiber_oracle(load_map("squares")) == 4
    assert fiber_oracle(load_map("monomial")) == 1
    assert fiber_oracle(load_map("cubes"), trials=3) == 9


def test_oracle_reproducible():
    F = load_map("squares")
    assert fiber_oracle(F, seed=3, details=True) == fiber_oracle(F, seed=3, details=True)


def test_corpus_degree_all_methods(corpus_map):
    name, F = corpus_map
    r = degree(F)
    assert r.verdict == "determined"
    assert r.deg_F == CORPUS_DEGREES[name]
    assert set(r.cross_checks) >= {"limit", "oracle"}


def test_j_multiplicity_examples(plane):
    assert j_multiplicity(Ideal(plane, ["x0", "x1", "x2"]), 1) == 1
    assert j_multiplicity(Ideal(plane, ["x0^2", "x1^2", "x2^2"]), 2) == 8
    assert j_multiplicity(Ideal(plane, ["x1*x2", "x0*x2", "x0*x1"]), 2) == 2
    with pytest.raises(HypothesisError):
        j_multiplicity(Ideal(plane, ["x0^2", "x0*x1", "x1^2"]), 2)


def test_bound_p1p1_examples():
    assert bound_p1p1(load_map("monomial")) == 1
    F = random_p1p1_map((2, 2), 6, random.Random(1))
    assert fiber_oracle(F) == 2 and bound_p1p1(F) >= 2
    with pytest.raises(HypothesisError):
        bound_p1p1(load_map("cremona"))


def test_criterion_1n_birational():
    # the family with a (0,1) syzygy: (x20·p, x21·p, x20·q + x21·r)
    F = RationalMap(P1P1, ["x20*(x10*x20 + x11*x21)", "x21*(x10*x20 + x11*x21)",
                           "x20*x10*x21 + x21*x11*x20 + x21*x11*x21"])
    assert criterion_1n(F)
    assert bound_p1p1(F) == 1
    assert fiber_oracle(F) == 1


def test_criterion_1n_syzygy_of_degree_two():
    # a (0,2) syzygy rules out birationality
    F = RationalMap(P1P1, ["x10*x20^2", "x10*x21^2", "x11*x20^2 + 3*x10*x20*x21 + 5*x11*x21^2"])
    assert not criterion_1n(F)
    assert fiber_oracle(F) == 2


def test_criterion_1n_monomial():
    assert criterion_1n(load_map("monomial"))


def test_criterion_22_examples():
    rng = random.Random(1)
    F = random_p1p1_map((2, 2), 3, rng, double=1)
    assert criterion_22(F) and fiber_oracle(F) == 1
    F = random_p1p1_map((2, 2), 6, random.Random(1))
    b = base_locus_report(F)
    assert (b.deg_B, b.e_B) == (6, 6)
    assert not criterion_22(F) and fiber_oracle(F) == 2
    F = random_p1p1_map((2, 2), 5, random.Random(1))
    assert base_locus_report(F).deg_B == 5
    assert not criterion_22(F) and fiber_oracle(F) == 3
    with pytest.raises(HypothesisError):
        criterion_22(load_map("monomial"))


def test_bound_single_examples():
    assert bound_single(load_map("squares")) == 4
    assert bound_single(load_map("cremona")) == 1
    assert bound_single(load_map("cubes")) == 9
    with pytest.raises(HypothesisError):
        bound_single(load_map("monomial"))


def test_p2_formula_examples():
    r = p2_formula(load_map("cremona"))
    assert r.deg_F == 1 and r.consistent
    F = random_linear_type_plane((1, 2), random.Random(4))
    r = p2_formula(F)
    assert r.deg_F == 2 and r.cross_checks["limit"] == 2
    assert fiber_oracle(F) == 2


def test_p2_formula_unsaturated():
    # three cubics through one point: I ≠ I^sat in degree 3
    R = plane_ring(101)
    rng = random.Random(7)
    F = RationalMap(R, forms_through(R, (3,), [random_point(R, rng)], (), 3, rng))
    r = p2_formula(F)
    # 1 + dim [I^sat/I]_3 + 1 = 1 + (9 - 3) + 1
    assert r.deg_F == 8 and r.consistent
    assert fiber_oracle(F) == 8


def test_p2_formula_hypotheses():
    with pytest.raises(HypothesisError):
        p2_formula(load_map("monomial"))
    with pytest.raises(HypothesisError):
        p2_formula(load_map("cubic_mu1"))      # not of linear type
    with pytest.raises(HypothesisError):
        p2_formula(load_map("squares"))        # empty base locus


def test_birational_maps_saturated_up_to_degree_d():
    # birational single-graded maps: [I^sat/I]_c = 0 for c <= d
    from ratmaps.blowup import SaturationPlan
    from ratmaps.hilbert import graded_dimension
    for name in ("identity", "cremona", "cubic_mu1"):
        F = load_map(name)
        I = F.base_ideal()
        plan = SaturationPlan(I)
        for c in range(1, F.degree[0] + 1):
            assert plan.sat_dimension(I, (c,)) == graded_dimension(I, (c,), "ideal")


def test_random_plane_bound_sound():
    rng = random.Random(9)
    for d, k in ((2, 1), (3, 2), (3, 5)):
        F = random_plane_through_points(d, k, rng)
        assert bound_single(F) >= fiber_oracle(F)

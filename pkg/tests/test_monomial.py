import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from ratmaps.birationality import is_birational_jacdual
from ratmaps.maps import RationalMap
from ratmaps.monomial import (NotDominant, NotMonomialMap, build_exponent_matrix, det_int,
                              hermite_normal_form, is_birational_monomial, is_hnf,
                              lattice_certificates, matmul, solve_integer, solve_lattice)
from ratmaps.ring import Ring

from conftest import load_map


def test_exponent_matrix_example():
    A = build_exponent_matrix(load_map("monomial"))
    cols = [list(c) for c in zip(*A)]
    assert cols == [[1, 0, 1, 0, 1], [0, 1, 1, 0, 1], [0, 1, 0, 1, 1]]


def test_exponent_matrix_s1():
    F = RationalMap(Ring([["x0", "x1"]]), ["x0", "x1"])
    assert build_exponent_matrix(F) == [[1, 0], [0, 1], [1, 1]]


def test_exponent_matrix_rejects():
    R = Ring([["x0", "x1"]])
    with pytest.raises(NotMonomialMap):
        build_exponent_matrix(RationalMap(R, ["x0 + x1", "x1"]))
    with pytest.raises(NotMonomialMap):
        build_exponent_matrix(RationalMap(Ring([["x0", "x1", "x2"]]), ["x0", "x1", "x2"]))


def test_lattice_solutions_example():
    A = build_exponent_matrix(load_map("monomial"))
    assert solve_lattice(A, 1) == [1, -1, 0]
    assert solve_lattice(A, 2) == [0, 1, -1]
    with pytest.raises(ValueError):
        solve_lattice(A, 3)


def test_lattice_parity_obstruction():
    assert solve_lattice([[2, 0], [0, 2], [1, 1]], 1) is None


def test_birational_examples():
    assert is_birational_monomial(load_map("monomial"))
    F = RationalMap(load_map("monomial").ring, ["x10^2*x20^2", "x11^2*x20^2", "x11^2*x21^2"])
    assert not is_birational_monomial(F)
    assert is_birational_monomial(RationalMap(Ring([["x0", "x1"]]), ["x0", "x1"]))
    assert not is_birational_monomial(RationalMap(Ring([["x0", "x1"]]), ["x0^2", "x1^2"]))


def test_not_dominant():
    R = Ring([["a0", "a1"], ["b0", "b1"]])
    with pytest.raises(NotDominant):
        is_birational_monomial(RationalMap(R, ["a0*b0", "a0*b0", "a1*b1"]))


def test_certificates_verify():
    F = load_map("monomial")
    A = build_exponent_matrix(F)
    for i, g in lattice_certificates(F).items():
        b = [0] * len(A)
        b[2 * i - 2], b[2 * i - 1] = 1, -1
        assert matmul(A, [[x] for x in g]) == [[x] for x in b]


def _p1_monomial_maps(s, dmax, rng, count):
    names = [[f"a{i}0", f"a{i}1"] for i in range(s)]
    R = Ring(names)
    out = []
    while len(out) < count:
        degs = [rng.randint(1, dmax) for _ in range(s)]
        forms = []
        for _ in range(s + 1):
            mono = []
            for i, d in enumerate(degs):
                a = rng.randint(0, d)
                mono.append(f"a{i}0^{a}*a{i}1^{d - a}")
            forms.append("*".join(mono))
        F = RationalMap(R, forms)
        try:
            is_birational_monomial(F)
        except NotDominant:
            continue
        out.append(F)
    return out


def test_agrees_with_jacobian_dual():
    rng = random.Random(3)
    maps = _p1_monomial_maps(1, 3, rng, 8) + _p1_monomial_maps(2, 2, rng, 10)
    seen = set()
    for F in maps:
        v = is_birational_monomial(F)
        seen.add(v)
        assert is_birational_jacdual(F).birational == v
    assert seen == {True, False}


def test_permutation_invariance():
    rng = random.Random(5)
    for F in _p1_monomial_maps(2, 3, rng, 10):
        v = is_birational_monomial(F)
        for perm in itertools.permutations(range(3)):
            G = RationalMap(F.ring, [F.forms[k] for k in perm])
            assert is_birational_monomial(G) == v


def test_solve_integer_small():
    assert solve_integer([[2, 4], [1, 3]], [2, 2]) == [-1, 1]
    assert solve_integer([[2, 4]], [1]) is None


matrices = st.integers(1, 5).flatmap(lambda r: st.integers(1, 4).flatmap(
    lambda c: st.lists(st.lists(st.integers(-30, 30), min_size=c, max_size=c), min_size=r, max_size=r)))


@settings(max_examples=100)
@given(matrices)
def test_hnf_unimodular(A):
    H, V, U = hermite_normal_form(A)
    assert is_hnf(H)
    assert matmul(A, V) == H
    assert matmul(H, U) == A
    assert abs(det_int(U)) == 1
    assert matmul(V, U) == [[int(i == j) for j in range(len(V))] for i in range(len(V))]


@settings(max_examples=100)
@given(matrices, st.data())
def test_solve_integer_sound(A, data):
    x = data.draw(st.lists(st.integers(-5, 5), min_size=len(A[0]), max_size=len(A[0])))
    b = [sum(a * v for a, v in zip(row, x)) for row in A]
    g = solve_integer(A, b)
    assert g is not None
    assert [sum(a * v for a, v in zip(row, g)) for row in A] == b

import random

import pytest

from ratmaps.birationality import (check_inverse, compose_inverse, extract_inverse,
                                   is_birational_jacdual, linear_syzygy_rank, rank_mod_image)
from ratmaps.groebner import Ideal
from ratmaps.linalg import rank_of
from ratmaps.maps import RationalMap
from ratmaps.ring import Ring

from conftest import CORPUS_DEGREES, load_map


def row_vectors(rows):
    """Flatten polynomial rows into coefficient vectors keyed by (column, monomial)."""
    out = []
    for row in rows:
        v = {}
        for j, e in enumerate(row):
            for m, c in e.terms.items():
                v[(j, m)] = c
        out.append(v)
    return out


def test_psi_identity():
    a = is_birational_jacdual(load_map("identity"))
    psi = a.jd.psi(0)
    assert len(psi) == 3 and all(len(r) == 3 for r in psi)
    assert a.ranks == [2]


def test_psi_cremona_row_space():
    a = is_birational_jacdual(load_map("cremona"))
    psi = a.jd.psi(0)
    Y = a.jd.target
    expected = [[Y("y0"), Y("-y1"), Y.zero], [Y.zero, Y("y1"), Y("-y2")]]
    both = row_vectors(psi) + row_vectors(expected)
    assert rank_of(row_vectors(psi)) == rank_of(row_vectors(expected)) == rank_of(both) == 2


def test_psi_monomial_blocks():
    a = is_birational_jacdual(load_map("monomial"))
    assert a.jd.psi(0) and a.jd.psi(1)
    assert all(len(r) == 2 for r in a.jd.psi(0) + a.jd.psi(1))


def test_rank_mod_image_examples():
    a = is_birational_jacdual(load_map("identity"))
    assert rank_mod_image(a.jd.psi(0), Ideal(a.jd.target, [])) == 2
    Y = a.jd.target
    assert rank_mod_image([[Y.zero, Y.zero], [Y.zero, Y.zero]]) == 0
    m = is_birational_jacdual(load_map("monomial"))
    assert rank_mod_image(m.jd.psi(0), Ideal(m.jd.target, [])) == 1


def test_rank_mod_image_uses_image_ideal():
    # modulo y0*y1 - y2^2 the minor y0*y1 - y2^2 vanishes
    Y = Ring([["y0", "y1", "y2"]])
    M = [[Y("y0"), Y("y2")], [Y("y2"), Y("y1")]]
    assert rank_mod_image(M) == 2
    assert rank_mod_image(M, Ideal(Y, ["y0*y1 - y2^2"])) == 1


def test_verdicts():
    assert is_birational_jacdual(load_map("monomial")).verdict == "birational"
    assert is_birational_jacdual(load_map("squares")).verdict == "not birational"
    assert is_birational_jacdual(load_map("cubes")).verdict == "not birational"


def test_not_generically_finite():
    R = Ring([["x0", "x1", "x2"]])
    F = RationalMap(R, ["x0^2", "x0*x1", "x1^2"])
    a = is_birational_jacdual(F)
    assert a.verdict == "not birational"
    assert "generically finite" in a.reason


def test_cremona_inverse_is_itself():
    F = load_map("cremona")
    a = is_birational_jacdual(F)
    Y = a.jd.target
    (inv,) = a.inverse
    assert [str(g) for g in inv] == ["y1*y2", "y0*y2", "y0*y1"]
    assert check_inverse(F, a.inverse)
    G = RationalMap(Y, inv, ["z0", "z1", "z2"])
    Fp, Gp = F.reduce_mod(101), G.reduce_mod(101)
    rng = random.Random(11)
    for _ in range(5):
        x = [rng.randrange(1, 101) for _ in range(3)]
        y = Fp.evaluate(x)
        z = Gp.evaluate(y)
        # z is proportional to x
        c = z[0] * pow(x[0], -1, 101) % 101
        assert c and all((zi - c * xi) % 101 == 0 for zi, xi in zip(z, x))


def test_identity_inverse_up_to_factor():
    F = load_map("identity")
    a = is_birational_jacdual(F)
    assert check_inverse(F, a.inverse)
    g = a.inverse[0]
    Y = g[0].ring
    # (y0^2 : y0*y1 : y0*y2) = (y0 : y1 : y2) away from y0 = 0
    for i in range(3):
        for j in range(3):
            assert g[i] * Y.var(j) == g[j] * Y.var(i)


def test_monomial_inverse_blockwise():
    F = load_map("monomial")
    a = is_birational_jacdual(F)
    assert len(a.inverse) == 2 and all(len(b) == 2 for b in a.inverse)
    comp = compose_inverse(F, a.inverse)
    R = F.ring
    for i, block in enumerate(comp):
        x0, x1 = [R.var(v) for v in R.blocks[i]]
        assert block[0] * x1 == block[1] * x0
        assert block[0].terms


def test_extract_inverse_needs_rank():
    a = is_birational_jacdual(load_map("identity"))
    with pytest.raises(ValueError):
        extract_inverse(a.jd, a.image, [3])


def test_linear_syzygy_rank_examples():
    assert linear_syzygy_rank(load_map("cremona")) == 2
    assert linear_syzygy_rank(load_map("cubes")) == 0
    assert linear_syzygy_rank(load_map("monomial")) == 2


def test_prop_rank_bounds_corpus(corpus_map):
    name, F = corpus_map
    a = is_birational_jacdual(F)
    assert all(k <= r for k, r in zip(a.ranks, F.r))
    if a.dim_Y is not None:
        assert sum(F.r) - sum(a.ranks) >= F.delta - a.dim_Y
    assert a.birational == (CORPUS_DEGREES[name] == 1)
    if a.birational:
        assert check_inverse(F, a.inverse)


def test_cap_marks_undetermined():
    # the cubic with a linear syzygy needs a quadratic-in-y equation
    F = load_map("cubic_mu1")
    a = is_birational_jacdual(F, cap_ydeg=1)
    assert a.verdict == "undetermined"
    assert is_birational_jacdual(F).verdict == "birational"


def test_relations_source():
    # conic C ⊂ P^2 mapped to P^1 by projection from a point on it: birational
    R = Ring([["a0", "a1", "a2"]], 0, [["a0*a2 - a1^2"]])
    F = RationalMap(R, ["a0", "a1"])
    a = is_birational_jacdual(F)
    assert a.verdict == "birational"
    assert check_inverse(F, a.inverse)


def test_verdicts_match_oracle_random():
    from ratmaps.degree import fiber_oracle
    from ratmaps.generators import random_mu1_plane, random_perturbed_map
    rng = random.Random(23)
    maps = [random_perturbed_map(rng) for _ in range(12)] + [random_mu1_plane(3, rng) for _ in range(4)]
    seen = set()
    for F in maps:
        a = is_birational_jacdual(F)
        assert a.birational == (fiber_oracle(F) == 1)
        assert all(k <= r for k, r in zip(a.ranks, F.r))
        if a.birational:
            assert check_inverse(F, a.inverse)
        seen.add(a.birational)
    assert seen == {True, False}

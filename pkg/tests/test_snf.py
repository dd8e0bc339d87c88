import random
from itertools import product
from math import gcd

import pytest
from hypothesis import given
from hypothesis import strategies as st

from alexcolor.catalog import KEYS
from alexcolor.diagram import parse_diagram
from alexcolor.errors import MuMismatchError, SpecializationError
from alexcolor.linalg import coloring_space
from alexcolor.oracle import brute_force_count
from alexcolor.rings import GF, QQ, ZZ, IntegersMod, LaurentPIDGF, LaurentRingGF, PolyGF, PolyRingGF, specialization
from alexcolor.snf import (ModuleSpec, alexander_invariant_factors, coloring_module, diagram_stability_check,
                           hom_cyclic, smith_normal_form)

from conftest import KINKED_TREFOIL
from snf_oracle import check_smith

G3 = PolyRingGF(3)
NEG = specialization(ZZ, [-1])


def factors_z(X):
    return smith_normal_form(X, ZZ).factors.factors


def test_small_examples():
    assert factors_z([[2, 4], [6, 8]]) == (4, 2)
    assert factors_z([[0, 0, 0]] * 3) == (0, 0, 0)
    assert factors_z([[1, 0], [0, 1]]) == (1, 1)


def test_trefoil_factors(catalog):
    assert alexander_invariant_factors(catalog["trefoil"], NEG).factors == (0, 3, 1)


@st.composite
def int_matrices(draw, max_dim=5, bound=9):
    m, n = draw(st.integers(1, max_dim)), draw(st.integers(1, max_dim))
    row = st.lists(st.integers(-bound, bound), min_size=n, max_size=n)
    return draw(st.lists(row, min_size=m, max_size=m))


@st.composite
def gf3_poly_matrices(draw, max_dim=3, max_deg=2):
    m, n = draw(st.integers(1, max_dim)), draw(st.integers(1, max_dim))
    poly = st.lists(st.integers(0, 2), max_size=max_deg + 1).map(lambda c: PolyGF(3, c))
    return draw(st.lists(st.lists(poly, min_size=n, max_size=n), min_size=m, max_size=m))


@given(int_matrices())
def test_smith_properties_over_z(X):
    assert check_smith(X, smith_normal_form(X, ZZ), ZZ) == []


@given(gf3_poly_matrices())
def test_smith_properties_over_gf3t(X):
    assert check_smith(X, smith_normal_form(X, G3), G3) == []


@given(int_matrices())
def test_factors_nonnegative(X):
    assert all(d >= 0 for d in factors_z(X))


@given(gf3_poly_matrices())
def test_factors_monic(X):
    assert all(d.is_zero() or d.lc() == 1 for d in smith_normal_form(X, G3).factors.factors)


def test_hom_cyclic_examples():
    assert hom_cyclic(3, ModuleSpec.cyclic(6)).factors == (3,)
    assert hom_cyclic(1, ModuleSpec.cyclic(6)).factors == ()
    assert hom_cyclic(0, ModuleSpec.cyclic(6)).factors == (6,)
    assert hom_cyclic(0, ModuleSpec.cyclic(0)).factors == (0,)


def test_trefoil_module(catalog):
    for n in range(2, 13):
        mod = coloring_module(catalog["trefoil"], NEG, ModuleSpec.cyclic(n))
        assert mod.order() == n * gcd(3, n)


def test_unknot0_module(catalog):
    for n in range(2, 8):
        assert coloring_module(catalog["unknot0"], NEG, ModuleSpec.cyclic(n)).factors == (n,)
    assert coloring_module(catalog["unknot0"], NEG, ModuleSpec.cyclic(0)).order() is None


@pytest.mark.parametrize("n", range(2, 13))
def test_torus_and_whitehead_agree(catalog, n):
    phi = specialization(ZZ, [-1, -1])
    a = coloring_module(catalog["torus2_8"], phi, ModuleSpec.cyclic(n))
    b = coloring_module(catalog["whitehead"], phi, ModuleSpec.cyclic(n))
    assert sorted(a.factors) == sorted(b.factors)


def test_stability_checks(catalog):
    kinked = parse_diagram(KINKED_TREFOIL, warn=False)
    tre = catalog["trefoil"]
    assert diagram_stability_check(tre, kinked, NEG)
    assert alexander_invariant_factors(kinked, NEG).nonunit() == (0, 3)
    assert not diagram_stability_check(tre, catalog["unknot1"], NEG)
    assert diagram_stability_check(tre, tre, NEG)
    with pytest.raises(MuMismatchError):
        diagram_stability_check(tre, catalog["whitehead"], NEG)


def test_laurent_target_strips_t_powers(catalog):
    R = LaurentRingGF(3)
    inv = alexander_invariant_factors(catalog["trefoil"], specialization(R, ["t"]))
    D = inv.domain
    assert isinstance(D, LaurentPIDGF)
    assert [D.format(f) for f in inv.nonunit()] == ["0", "t^2 + 2*t + 1"]


@pytest.mark.parametrize("key", KEYS)
def test_field_consistency_with_rank(catalog, key):
    # factors over Z divisible by p count the GF(p) coloring dimension
    d = catalog[key]
    rng = random.Random(key)
    for _ in range(3):
        images = [rng.choice([1, -1]) for _ in range(d.mu)]
        factors = alexander_invariant_factors(d, specialization(ZZ, images)).factors
        for p in (2, 3, 5, 7):
            j0 = coloring_space(d, specialization(GF(p), images)).j0
            assert sum(f % p == 0 for f in factors) == j0


@pytest.mark.parametrize("key", [k for k in KEYS if k != "turaev_T"])
def test_module_order_matches_oracle(catalog, key):
    d = catalog[key]
    for n in range(2, 7):
        if n ** len(d.arcs) > 3 ** 10:
            continue
        for images in [(1,) * d.mu, (-1,) * d.mu]:
            order = coloring_module(d, specialization(ZZ, images), ModuleSpec.cyclic(n)).order()
            assert brute_force_count(d, specialization(IntegersMod(n), images)).count == order


def test_module_domain_mismatch(catalog):
    with pytest.raises(SpecializationError):
        coloring_module(catalog["trefoil"], NEG, ModuleSpec(LaurentPIDGF(3), ("t + 1",)))


def test_snf_rejects_rational_target(catalog):
    with pytest.raises(SpecializationError):
        alexander_invariant_factors(catalog["trefoil"], specialization(QQ, [2]))


@pytest.mark.parametrize("key", [k for k in KEYS if k != "turaev_T"])
def test_mod_n_module_matches_oracle_for_all_units(catalog, key):
    d = catalog[key]
    for n in range(2, 7):
        units = [u for u in range(1, n) if gcd(u, n) == 1]
        for images in product(units, repeat=d.mu):
            phi = specialization(IntegersMod(n), images)
            assert coloring_module(d, phi).order() == brute_force_count(d, phi, force=True).count


def test_mod_n_target_fixes_module(catalog):
    with pytest.raises(SpecializationError):
        coloring_module(catalog["trefoil"], specialization(IntegersMod(6), [5]), ModuleSpec.cyclic(3))
    with pytest.raises(SpecializationError):
        coloring_module(catalog["trefoil"], NEG)

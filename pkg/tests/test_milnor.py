from fractions import Fraction as F

import pytest

from singlib import (
    JetConfig,
    PreconditionError,
    SparsePoly,
    is_monomial_basis,
    milnor_basis,
    normal_form,
    parse_poly,
    spectrum_wh,
    weighted_homogeneity,
)
from singlib.milnor import FINITE, NON_ISOLATED, SMOOTH_POINT


def lemma_basis_monomials():
    I0 = {(i, i) for i in range(11)}
    I1 = {(i, j) for j in range(5) for i in range(j + 1, j + 14)}
    tI1 = {(j, i) for (i, j) in I1}
    assert len(I0) == 11 and len(I1) == 65 and len(tI1) == 65
    return I0 | I1 | tI1


def test_mu_h_is_141(basis_h):
    assert basis_h.status == FINITE
    assert basis_h.milnor_number == 141
    assert len(basis_h.staircase) == 141


def test_mu_z5():
    r = milnor_basis(parse_poly("z^5", ["z"]))
    assert r.milnor_number == 4
    assert r.staircase == frozenset({(0,), (1,), (2,), (3,)})


def test_mu_g_matches_product_rule(g):
    r = milnor_basis(g)
    assert r.milnor_number == 564  # 141 * 4 by the disjoint-variable product rule


def test_staircase_closed_under_divisibility(basis_h):
    st = basis_h.staircase
    for (i, j) in st:
        for (a, b) in [(i - 1, j), (i, j - 1)]:
            if a >= 0 and b >= 0:
                assert (a, b) in st


def test_smooth_point_reported():
    r = milnor_basis(parse_poly("x+x^2+y^2", ["x", "y"]))
    assert r.status == SMOOTH_POINT


def test_non_isolated_reported_not_looped():
    r = milnor_basis(parse_poly("x^2*y^2", ["x", "y"]), JetConfig(degree_cap=14))
    assert r.status == NON_ISOLATED
    assert r.milnor_number is None


def test_preconditions():
    with pytest.raises(PreconditionError):
        milnor_basis(SparsePoly.zero(2))
    with pytest.raises(PreconditionError):
        milnor_basis(parse_poly("7+x^2", ["x"]))


def test_normal_form_of_partial_is_zero(h, basis_h):
    assert normal_form(h.diff(0), h, basis=basis_h).is_zero()


def test_normal_form_jacobian_identification(h, basis_h):
    # x^5 y^4 * dh/dx = 14 x^18 y^4 - 6 x^10 y^10, so the two monomials are
    # proportional in the Milnor algebra with constant 3/7
    p = SparsePoly.monomial(2, (18, 4)) - F(3, 7) * SparsePoly.monomial(2, (10, 10))
    assert normal_form(p, h, basis=basis_h).is_zero()
    nf = normal_form(SparsePoly.monomial(2, (18, 4)), h, basis=basis_h)
    assert not nf.is_zero()


def test_normal_form_univariate():
    z5 = parse_poly("z^5", ["z"])
    assert normal_form(parse_poly("z^7", ["z"]), z5).is_zero()
    assert normal_form(parse_poly("z^3+z^9", ["z"]), z5) == parse_poly("z^3", ["z"])


def test_normal_form_idempotent_and_linear(h, basis_h):
    p = parse_poly("x^18*y^4+3*x^2*y-x*y^2", ["x", "y"])
    q = parse_poly("x^13+y^13-x^6*y^6", ["x", "y"])
    nf = lambda r: normal_form(r, h, basis=basis_h)
    assert nf(nf(p)) == nf(p)
    assert nf(2 * p + F(1, 3) * q) == 2 * nf(p) + F(1, 3) * nf(q)


def test_lemma_monomial_basis(h, basis_h):
    assert is_monomial_basis(h, lemma_basis_monomials(), basis=basis_h)


def test_monomial_basis_counterexamples():
    z5 = parse_poly("z^5", ["z"])
    assert is_monomial_basis(z5, [(0,), (1,), (2,), (3,)])
    assert not is_monomial_basis(z5, [(0,), (1,), (2,), (4,)])  # z^4 lies in the ideal
    assert not is_monomial_basis(z5, [(0,), (1,), (2,)])  # wrong cardinality


def test_spectrum_independent_of_local_order():
    # same weighted homogeneous germ, two admissible local orders
    f = parse_poly("x^3+y^5", ["x", "y"])
    w = weighted_homogeneity(f)
    spectra = []
    for order in ("negdegrevlex", "negdeglex"):
        b = milnor_basis(f, JetConfig(local_order=order))
        spectra.append(spectrum_wh(f, w, basis=b).values)
    assert spectra[0] == spectra[1]

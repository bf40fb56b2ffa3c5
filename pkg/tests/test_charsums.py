import itertools
from fractions import Fraction

import pytest

from ffhyper.characters import char_group, quadratic_char, trivial_char
from ffhyper.charsums import (
    gauss,
    gauss_circ,
    jacobi,
    jacobi_bruteforce,
    poch,
    poch_circ,
    sum_tables,
)
from ffhyper.fields import build_field, q_to_field

ALL_Q = [3, 4, 5, 7, 8, 9, 11, 13, 16]
ODD_Q = [3, 5, 7, 9, 11, 13]


@pytest.fixture(scope="module")
def tbl():
    return {q: sum_tables(build_field(*q_to_field(q))) for q in ALL_Q}


def test_gauss_trivial_is_one(tbl):
    for q in ALL_Q:
        assert gauss(tbl[q], 0) == 1


def test_gauss_quadratic_square_f3(tbl):
    t = tbl[3]
    phi = quadratic_char(t.ctx)
    # frozen from the two-term summation: (-(zeta_3 - zeta_3^2))^2 = -3
    assert gauss(t, phi) * gauss(t, phi) == -3


@pytest.mark.parametrize("q", ALL_Q)
def test_gauss_inversion(q, tbl):
    t = tbl[q]
    minus_one = t.ctx.neg_i(1)
    for j in range(t.m):
        lhs = t.gauss_i(j) * t.gauss_circ_i(-j)
        assert lhs == t.chi_i(j, minus_one) * t.q


@pytest.mark.parametrize("q", ALL_Q)
def test_gauss_nonzero_and_inverse_table(q, tbl):
    t = tbl[q]
    for j in range(t.m):
        assert not t.gauss_i(j).is_zero()
        assert t.gauss_i(j) * t.inv_gauss_i(j) == 1
        assert t.gauss_circ_i(j) * t.inv_gauss_circ_i(j) == 1


def test_gauss_circ_values(tbl):
    t = tbl[7]
    assert gauss_circ(t, 0) == 7
    for j in range(1, 6):
        assert gauss_circ(t, j) == gauss(t, j)


def test_jacobi_examples(tbl):
    t = tbl[3]
    assert jacobi(t, 0, 0) == Fraction(1 - (1 - 3) ** 2, 3)
    assert jacobi(t, 0, 0) == -1
    phi = quadratic_char(t.ctx)
    assert jacobi(t, phi, phi) == -1
    with pytest.raises(ValueError):
        jacobi(t, 1)


@pytest.mark.parametrize("q", [3, 4, 5, 7, 8, 9])
def test_jacobi_against_bruteforce_pairs(q, tbl):
    t = tbl[q]
    for j1 in range(t.m):
        for j2 in range(t.m):
            assert jacobi(t, j1, j2) == jacobi_bruteforce(t, j1, j2)


@pytest.mark.parametrize("q", [3, 4, 5])
def test_jacobi_against_bruteforce_triples(q, tbl):
    t = tbl[q]
    for js in itertools.product(range(t.m), repeat=3):
        assert t.jacobi_i(*js) == t.jacobi_bruteforce_i(*js)


@pytest.mark.parametrize("q", [3, 4, 5, 7, 8])
def test_poch_trivial_and_chain(q, tbl):
    t = tbl[q]
    eps = trivial_char(t.ctx)
    for a in range(t.m):
        assert poch(t, a, eps) == 1
        assert poch_circ(t, a, eps) == 1
    for a, nu, mu in itertools.product(range(t.m), repeat=3):
        assert t.poch_i(a, (nu + mu) % t.m) == t.poch_i(a, nu) * t.poch_i((a + nu) % t.m, mu)
        assert t.poch_circ_i(a, (nu + mu) % t.m) == t.poch_circ_i(a, nu) * t.poch_circ_i(
            (a + nu) % t.m, mu
        )


@pytest.mark.parametrize("q", [3, 4, 5, 7, 8])
def test_poch_inversion(q, tbl):
    t = tbl[q]
    minus_one = t.ctx.neg_i(1)
    for a in range(t.m):
        for nu in range(t.m):
            lhs = t.poch_i(a, nu)
            rhs = t.chi_i(nu, minus_one) * t.inv_poch_circ_i(-a % t.m, -nu % t.m)
            assert lhs == rhs


@pytest.mark.parametrize("q", ODD_Q)
def test_duplication_gauss(q, tbl):
    t = tbl[q]
    phi = t.m // 2
    four = t.ctx.int_elem(4)
    for a in range(t.m):
        lhs = t.gauss_i(2 * a)
        rhs = t.chi_i(a, four) * t.gauss_i(a) * t.gauss_i(a + phi) * t.inv_gauss_i(phi)
        assert lhs == rhs
        lhs_c = t.gauss_circ_i(2 * a)
        rhs_c = (
            t.chi_i(a, four)
            * t.gauss_circ_i(a)
            * t.gauss_circ_i(a + phi)
            * t.inv_gauss_circ_i(phi)
        )
        assert lhs_c == rhs_c


@pytest.mark.parametrize("q", ODD_Q)
def test_duplication_poch(q, tbl):
    t = tbl[q]
    phi = t.m // 2
    four = t.ctx.int_elem(4)
    for a in range(t.m):
        for nu in range(t.m):
            chi4 = t.chi_i(nu, four)
            assert t.poch_i(2 * a, 2 * nu) == chi4 * t.poch_i(a, nu) * t.poch_i(a + phi, nu)
            assert t.poch_circ_i(2 * a, 2 * nu) == chi4 * t.poch_circ_i(a, nu) * t.poch_circ_i(
                a + phi, nu
            )


def test_psi_twists_differ(tbl):
    t = tbl[5]
    t2 = t.retwist(2)
    assert t2 is not t
    assert t.retwist(1) is t
    assert any(t.gauss_i(j) != t2.gauss_i(j) for j in range(1, t.m))


def test_char_group_round_trip(tbl):
    t = tbl[8]
    for chi in char_group(t.ctx):
        assert gauss(t, chi) == t.gauss_i(chi.j)

from fractions import Fraction

import pytest

import rankin_cohen as rc


@pytest.fixture(scope="module")
def theta():
    return rc.jacobi_theta("e8", 1, 5)


def test_theta_coefficients(theta):
    assert (theta.weight, theta.index, theta.trunc) == (4, 1, 5)
    assert theta.coeff(1, 0) == 126
    assert theta.coeff(1, 1) == 56
    assert isinstance(theta.coeff(2, 1), Fraction)
    assert rc.disc_class_invariant(theta)


def test_bracket_degenerations(theta):
    e4 = rc.eisenstein(4, 5)
    g = rc.mul(e4, theta)
    assert rc.bracket_jacobi(theta, g, Fraction(-1, 2), 0) == theta * g
    assert rc.bracket_jacobi(theta, theta, 1, 1).is_zero()
    b = rc.bracket_jacobi(theta, g, "1/3", 2)
    assert b.weight == 4 + 8 + 2
    assert b.coeff(0, 0) == 0
    assert rc.disc_class_invariant(b)


def test_floats_are_rejected(theta):
    with pytest.raises(TypeError):
        rc.bracket_jacobi(theta, theta, 0.5, 2)


def test_crosscheck_and_rank(theta):
    status, lam = rc.crosscheck(theta, theta, 0, 2)
    assert status == "proportional"
    assert lam == Fraction(4, 49)
    g = rc.mul(rc.eisenstein(4, 5), theta)
    h = rc.mul(rc.eisenstein(6, 5), theta)
    assert rc.rank_over_x(g, h, 2) == 2


def test_recursions():
    assert rc.check_recursions(4, 6, 3)
    assert rc.check_recursions(Fraction(9, 2), 6, 2)


def test_siegel_paths_agree():
    F = rc.siegel_theta("e8", 2)
    assert F.coeff(1, 0, 1) == 240 * 126
    direct = rc.bracket_siegel(F, F, 1, "direct")
    via = rc.bracket_siegel(F, F, 1, "jacobi")
    assert direct == via
    assert rc.export_siegel(direct) == rc.export_siegel(via)
    assert direct.weight == 10
    assert direct.slice(0).is_zero()


def test_file_round_trip(theta):
    text = rc.export_jacobi(theta)
    assert rc.export_jacobi(rc.import_jacobi(text)) == text
    with pytest.raises(ValueError):
        rc.import_jacobi(text.replace("126/1", "252/2"))


def test_verify_lattice_criterion():
    passed, witness = rc.verify(8)
    assert passed, witness

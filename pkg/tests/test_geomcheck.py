import pytest

from wittalg.geomcheck import (C_a_equations, RationalExpr, ShapeMismatch, curve_containment,
                               f_expr, gamma_check, i_a, ia_phi_equals_lambda, identity,
                               inverse_check, mu, nu, psi_a, pullback_rational, quadric_X,
                               ring_P1, ring_P2, ring_P3, geometry_summary, square_commutes, tau)


def test_psi_square():
    assert square_commutes([nu(), psi_a()], [psi_a(), tau()]) == {v: True for v in "wxyz"}


def test_ia_square():
    assert all(square_commutes([nu(), i_a()], [i_a(), mu()]).values())


def test_wrong_order_is_a_shape_error():
    with pytest.raises(ShapeMismatch):
        square_commutes([psi_a(), nu()], [psi_a(), tau()])


def test_rescaled_square_needs_scalar_mode():
    t2 = tau().rescaled(3)
    assert not all(square_commutes([nu(), psi_a()], [psi_a(), t2]).values())
    assert all(square_commutes([nu(), psi_a()], [psi_a(), t2], up_to_scalar=True).values())


def test_identity_square():
    assert all(square_commutes([identity(ring_P2()), mu()], [mu(), identity(ring_P2())]).values())


def test_quadric_and_curve():
    assert not psi_a().pullback()(quadric_X())
    assert curve_containment(psi_a(), C_a_equations())
    assert not curve_containment(psi_a(), ["z"])
    assert curve_containment(i_a(), ["z - a*y"])


def test_f_pullback():
    val = pullback_rational(psi_a(), f_expr())
    assert val == RationalExpr.parse(ring_P1(), "x*y - a*y^2", "x^2 - x*y")
    assert val != pullback_rational(psi_a(), f_expr(perturb=True))
    assert geometry_summary()["psi_a*(f)"] == "(-y^2*a + x*y)/(x^2 - x*y)"


def test_rational_expr_normalization():
    R = ring_P1()
    assert RationalExpr.parse(R, "2*x", "-4*y") == RationalExpr.parse(R, "-x", "2*y")
    with pytest.raises(ZeroDivisionError):
        RationalExpr.parse(R, "x", "0")


def test_gamma_and_inverse():
    assert gamma_check(1) and gamma_check(2)
    assert not gamma_check(2, perturb=True)
    assert inverse_check()
    with pytest.raises(ValueError):
        gamma_check(3)


def test_ia_phi_equals_lambda():
    assert all(ia_phi_equals_lambda(6).values())


def test_ia_pulls_z_over_y_to_a():
    v = pullback_rational(i_a(), RationalExpr.parse(ring_P2(), "z", "y"))
    assert v == RationalExpr.parse(ring_P1(), "a")


def test_non_homogeneous_map_rejected():
    from wittalg.geomcheck import ProjectiveMapSpec
    with pytest.raises(ValueError):
        ProjectiveMapSpec("bad", ring_P1(), ring_P1(), ("x^2", "y"))
    with pytest.raises(ShapeMismatch):
        ProjectiveMapSpec("bad", ring_P1(), ring_P3(), ("x", "y"))

from fractions import Fraction

import pytest

from surfsym.errors import DegenerateSurface, RetriesExhausted
from surfsym.surface import Parametrization, dot, fundamental_form, plane_check, prepare

from conftest import ENNEPER, PARABOLOID, surface, tsp


def test_paraboloid_prepared_unchanged(paraboloid):
    P = prepare(paraboloid)
    assert P is paraboloid
    assert P.origin_normal == (0, 0, 1)


def test_enneper_origin_normal(enneper):
    P = prepare(enneper)
    assert P is enneper
    assert P.origin_normal == (0, 0, -9)


def test_curve_image_is_degenerate():
    P = Parametrization(tsp("t**2"), tsp("t**2"), tsp("t**2"))
    with pytest.raises(DegenerateSurface):
        prepare(P)


def test_singular_origin_gets_reparametrized():
    # the cone-like (t^2, s^2, t*s) family is singular at the origin only
    P = Parametrization(tsp("t**2"), tsp("s**2"), tsp("t*s + t**3"))
    assert not any(P.origin_normal)
    Q = prepare(P, seed=3)
    assert any(Q.origin_normal)
    a, b, c, d, e, f = Q.substitution
    assert a * e - b * d != 0
    # same surface: the new origin is the old parametrization at (c, f)
    assert Q.origin_point == P.at(c, f)


def test_prepare_is_seed_deterministic():
    P = Parametrization(tsp("t**2"), tsp("s**2"), tsp("t*s + t**3"))
    assert prepare(P, seed=11).substitution == prepare(P, seed=11).substitution


def test_retries_exhausted_when_every_draw_is_singular(monkeypatch):
    import surfsym.surface as surf
    P = Parametrization(tsp("t**2"), tsp("s**2"), tsp("t*s + t**3"))
    monkeypatch.setattr(surf, "_substitute", lambda P, *args: P)
    with pytest.raises(RetriesExhausted):
        surf.prepare(P)


def test_fundamental_form_paraboloid(paraboloid):
    ff = fundamental_form(paraboloid)
    assert ff.E == tsp("1 + 4*t**2")
    assert ff.F == tsp("4*t*s")
    assert ff.G == tsp("1 + 4*s**2")
    assert (ff.A, ff.B, ff.C) == (1, 0, 1)


def test_fundamental_form_enneper(enneper):
    ff = fundamental_form(enneper)
    assert (ff.A, ff.B, ff.C) == (9, 0, 9)
    xt0, xs0 = enneper.partials_at(0, 0)
    assert xt0 == (0, 3, 0) and xs0 == (3, 0, 0)


@pytest.mark.parametrize("text", [
    PARABOLOID, ENNEPER,
    "x = t + s^2\ny = 2*s - t\nz = t*s\n",
    "x = t\ny = 1/3*s + t^2\nz = s^3 - t\n",
])
def test_cauchy_schwarz_at_regular_origin(text):
    ff = fundamental_form(prepare(surface(text)))
    assert ff.B ** 2 < ff.A * ff.C


@pytest.mark.parametrize("text, expected", [
    ("x = t\ny = s\nz = 2*t + 3*s\n", True),
    (PARABOLOID, False),
    ("x = t + s\ny = t - s\nz = 1 + t\n", True),
    ("x = t^2\ny = s\nz = t^2 - s\n", True),
    (ENNEPER, False),
])
def test_plane_check(text, expected):
    assert plane_check(surface(text)) is expected


def test_transformed_surface():
    P = surface(PARABOLOID)
    R = ((0, -1, 0), (1, 0, 0), (0, 0, 1))
    Q = P.transformed(R, (1, 2, 3))
    assert Q.at(2, 5) == (1 - 5, 2 + 2, 3 + 29)
    assert dot(Q.origin_normal, Q.origin_normal) == 1

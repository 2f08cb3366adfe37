import random
from fractions import Fraction

import pytest

from surfsym.arith.algebraic import AlgElem
from surfsym.candidates import CaseId
from surfsym.errors import ZeroWidthRequest
from surfsym.solver import Root2D, has_real_curve, refine, solve_real, verify_point
from surfsym.systems import PolySystem

from conftest import uv
from planted import brute_force_solutions, planted_system


def system(*eqs, side=()):
    return PolySystem([uv(e) for e in eqs], [uv(e) for e in side], CaseId("A", 1))


def points(sol):
    return [(r.u, r.v) for r in sol.roots]


def test_planted_two_points():
    sol = solve_real(system("(u - 1)*(u + 2)", "v - u"))
    assert sol.kind == "finite"
    assert points(sol) == [(-2, -2), (1, 1)]
    assert all(r.exact for r in sol.roots)


def test_inconsistent_system():
    assert solve_real(system("u**2 + v**2 + 1", "u - v")).is_empty
    assert solve_real(system("u - 1", "u - 2")).is_empty


def test_constant_equation_is_empty():
    assert solve_real(system("3")).is_empty


def test_side_condition_removes_roots():
    sol = solve_real(system("(u - 1)*(u + 2)", "v - u", side=["u - 1"]))
    assert points(sol) == [(-2, -2)]


def test_irrational_roots():
    sol = solve_real(system("u**2 - 2", "v - u"))
    assert sol.kind == "finite" and len(sol.roots) == 2
    neg, pos = sol.roots
    assert not pos.exact
    assert pos.u * pos.u == 2 and pos.v == pos.u
    assert pos.u.sign() == 1 and neg.u.sign() == -1


def test_irrational_fiber_over_irrational_base():
    # u = +-sqrt 2 and v = u^3 share the field Q(sqrt 2)
    sol = solve_real(system("u**2 - 2", "v - u**3"))
    assert len(sol.roots) == 2
    for r in sol.roots:
        assert r.v == r.u * 2


def test_positive_dimensional_circle():
    sol = solve_real(system("u**2 + v**2 - 1", "(u**2 + v**2 - 1)*(u - 3)"))
    assert sol.positive_dimensional
    assert sol.witness == uv("u**2 + v**2 - 1")


def test_complex_only_curve_is_not_positive():
    sol = solve_real(system("(u**2 + v**2 + 1)*(u - 1)", "(u**2 + v**2 + 1)*(v - 2)"))
    assert sol.kind == "finite"
    assert points(sol) == [(1, 2)]


def test_isolated_real_point_of_a_curve_factor():
    # u^2 + v^2 has the single real point (0, 0)
    sol = solve_real(system("(u**2 + v**2)*(u - 1)", "(u**2 + v**2)*(v + 1)"))
    assert sol.kind == "finite"
    assert points(sol) == [(0, 0), (1, -1)]


def test_has_real_curve():
    assert has_real_curve(uv("u**2 + v**2 - 1"))
    assert has_real_curve(uv("u - 3"))
    assert not has_real_curve(uv("u**2 + v**2 + 1"))
    assert not has_real_curve(uv("u**2 + v**2"))
    assert has_real_curve(uv("u**2 - v**3"))


def test_verify_point():
    s = system("u**2 + v**2 - 2", side=["u - v"])
    assert verify_point(Fraction(1), Fraction(-1), s)
    assert not verify_point(Fraction(1), Fraction(1), s)


def test_refine_exact_root_unchanged():
    r = Root2D(Fraction(1, 3), Fraction(2))
    assert refine(r, Fraction(1, 1000)) is r


def test_refine_irrational_root():
    r = solve_real(system("u**2 - 2", "v - 1")).roots[1]
    fine = refine(r, Fraction(1, 1000))
    (ulo, uhi), (vlo, vhi) = fine.enclosure(Fraction(1, 1000))
    assert uhi - ulo < Fraction(1, 1000)
    assert ulo ** 2 <= 2 <= uhi ** 2
    assert vlo == vhi == 1
    with pytest.raises(ZeroWidthRequest):
        refine(r, 0)


@pytest.mark.parametrize("seed", range(12))
def test_planted_order_independent(seed):
    s, pts, lines = planted_system(seed, max_roots=5)
    assert brute_force_solutions(lines) == pts
    rng = random.Random(seed)
    shuffled = list(s.equations)
    rng.shuffle(shuffled)
    s2 = PolySystem(shuffled, [], s.case)
    assert points(solve_real(s)) == points(solve_real(s2, seed=seed + 1)) == pts

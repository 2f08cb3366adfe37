from surfsym.candidates import CaseId, frame, phi_template
from surfsym.solver import solve_real
from surfsym.surface import fundamental_form
from surfsym.systems import PolySystem, assemble, saturate

from conftest import uv


def _system(P, name, sign):
    form = fundamental_form(P)
    case = CaseId(name, sign)
    return assemble(P, frame(P, case, form, phi_template(case, form)), form)


def test_saturate_removes_side_factors():
    p = uv("u**3 * v * (u**2 + v**2 - 1)")
    assert saturate(p, [uv("u"), uv("v")]) == uv("u**2 + v**2 - 1")


def test_enneper_case_a_single_solution(enneper):
    sol = solve_real(_system(enneper, "A", 1))
    assert sol.kind == "finite"
    assert [(r.u, r.v) for r in sol.roots] == [(0, 0)]


def test_paraboloid_case_d1_curve(paraboloid):
    sol = solve_real(_system(paraboloid, "D1", -1))
    assert sol.positive_dimensional
    assert sol.witness == uv("u**2 + v**2 - 1")


def test_paraboloid_case_b_origin(paraboloid):
    sol = solve_real(_system(paraboloid, "B", -1))
    assert [(r.u, r.v) for r in sol.roots] == [(0, 0)]


def test_system_is_sorted_and_deduplicated(enneper):
    system = _system(enneper, "D1", 1)
    assert len(set(system.equations)) == len(system.equations)
    degrees = [eq.degree() for eq in system.equations]
    assert degrees == sorted(degrees)
    assert len(system.provenance) == len(system.equations)


def test_dump_format(enneper):
    text = _system(enneper, "D1", 1).dump()
    lines = text.splitlines()
    assert lines[0] == "# case: D1+"
    assert {"# from: fff E", "# from: fff F", "# from: fff G"} <= set(lines)
    assert lines[-1] == "# side: v"
    assert text == _system(enneper, "D1", 1).dump()


def test_empty_system_for_absent_symmetry(enneper):
    assert solve_real(_system(enneper, "A", -1)).is_empty

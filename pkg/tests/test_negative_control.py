"""Why the t^4 negative control keeps one mirror, and a perturbation that removes them all."""
from fractions import Fraction

from surfsym import analyze
from surfsym.classifier import ConcretePhi, Plane, identity_defect, is_zero

from conftest import ENNEPER, surface
from test_acceptance import PERTURBED, off_surface, sampled_motions

STRONG = ENNEPER.replace("x = -s^3 + 3*s*t^2 + 3*s", "x = -s^3 + 3*s*t^2 + 3*s + t^4 + s^3*t")


def _holds(P, Q, b, phi):
    return all(all(is_zero(c) for c in comp.values()) for comp in identity_defect(P, Q, b, phi))


def test_mirror_y0_survives_t4():
    # x and z are even in t and y is odd, and t^4 is even: (t, s) -> (-t, s) realizes y -> -y
    P = surface(PERTURBED)
    Q = ((1, 0, 0), (0, -1, 0), (0, 0, 1))
    assert _holds(P, Q, (0, 0, 0), ConcretePhi(((-1, 0), (0, 1)), (0, 0)))
    for t, s in ((1, 2), (Fraction(-3, 2), 5)):
        x, y, z = P.at(t, s)
        assert (x, -y, z) == P.at(-t, s)


def test_engine_reports_only_that_mirror():
    rep = analyze(surface(PERTURBED))
    assert [inv.element for inv in rep.involutions] == [Plane((0, 1, 0), 0)]
    assert [o.case.label for o in rep.outcomes if o.status != "empty"] == ["C-"]


def test_strong_perturbation_has_no_involution():
    P = surface(STRONG)
    rep = analyze(P)
    assert rep.involutions == [] and rep.revolution is None
    assert all(o.status == "empty" for o in rep.outcomes)
    mirror = ((1, 0, 0), (0, -1, 0), (0, 0, 1))
    assert not _holds(P, mirror, (0, 0, 0), ConcretePhi(((-1, 0), (0, 1)), (0, 0)))
    for inv in sampled_motions():
        assert not _holds(P, inv.Q, inv.b, inv.phi)
        assert off_surface(P, inv.apply(P.at(Fraction(1), Fraction(2))))
    x, y, z = P.at(1, 2)
    assert off_surface(P, (x, -y, z))

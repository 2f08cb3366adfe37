"""The whole pipeline: prepare, fundamental form, twelve case searches, aggregate."""
from __future__ import annotations

import os
import time
from typing import Iterable, Optional

from .candidates import CaseId, all_cases, frame, phi_template
from .classifier import CaseOutcome, SymmetryReport, aggregate, instantiate
from .errors import EliminationDegenerate, PlaneInput, VerificationFailed
from .solver import solve_real
from .surface import Parametrization, fundamental_form, plane_check, prepare
from .systems import assemble


def select_cases(only: Optional[str] = None, case: Optional[str] = None):
    """Case ids to run; ``only`` is ``direct`` or ``opposite``."""
    cases = CaseId.parse(case) if case else all_cases()
    if only == "direct":
        cases = [c for c in cases if c.sign == 1]
    elif only == "opposite":
        cases = [c for c in cases if c.sign == -1]
    elif only is not None:
        raise ValueError("--only expects 'direct' or 'opposite'")
    return cases


def run_case(P, form, case, seed=0, dump_dir=None):
    """frame -> assemble -> solve -> instantiate for one case."""
    times = {}
    t0 = time.perf_counter()
    phi = phi_template(case, form)
    fr = frame(P, case, form, phi)
    times["frame"] = time.perf_counter() - t0
    t0 = time.perf_counter()
    system = assemble(P, fr, form)
    times["assemble"] = time.perf_counter() - t0
    if dump_dir is not None:
        os.makedirs(dump_dir, exist_ok=True)
        with open(os.path.join(dump_dir, f"system_{case.name}{'p' if case.sign > 0 else 'm'}.txt"), "w") as fh:
            fh.write(system.dump())
    t0 = time.perf_counter()
    try:
        sol = solve_real(system, seed)
    except EliminationDegenerate as exc:
        times["solve"] = time.perf_counter() - t0
        return CaseOutcome(case, "error", f"elimination degenerate: {exc}", frame=fr, timings=times)
    times["solve"] = time.perf_counter() - t0
    t0 = time.perf_counter()
    invs = []
    failures = []
    for root in sol.roots:
        try:
            invs.append(instantiate(fr, root, P))
        except VerificationFailed as exc:
            failures.append(str(exc))
    times["classify"] = time.perf_counter() - t0
    if sol.positive_dimensional:
        status, detail = "positive", f"real curve {sol.witness} = 0"
    elif sol.is_empty:
        status, detail = "empty", "no real solution"
    else:
        status, detail = "finite", f"{len(sol.roots)} real solution(s)"
    if failures:
        detail += "; verification failed: " + "; ".join(failures)
        if not invs and status == "finite":
            status = "failed"
    return CaseOutcome(case, status, detail, invs, sol.witness, fr, times)


def analyze(P_raw: Parametrization, seed: int = 0, cases: Optional[Iterable[CaseId]] = None,
            dump_dir: Optional[str] = None, surface_text=None) -> SymmetryReport:
    """All involutions of the surface parametrized by ``P_raw``."""
    if plane_check(P_raw):
        raise PlaneInput()
    P = prepare(P_raw, seed)
    form = fundamental_form(P)
    cases = list(cases) if cases is not None else all_cases()
    outcomes = [run_case(P, form, c, seed, dump_dir) for c in cases]
    if surface_text is None:
        surface_text = tuple(str(c) for c in P_raw.components)
    report = aggregate(outcomes, surface_text)
    report.prepared = P
    return report

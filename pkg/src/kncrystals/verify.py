"""Exhaustive verification suites over a fixed tensor shape.

Each suite walks every element of the shape (or every element pair for the
pairwise R-matrix checks) and re-derives an identity from two independent
routes.  The headline check is the energy/charge identity D(b) = -charge(b).
"""

from __future__ import annotations

import itertools
import time
from multiprocessing import Pool

from .charge import charge, charge_via_selection
from .core import (
    VERTEX_BUDGET,
    CartanType,
    TensorElement,
    crystal_size,
    e,
    eps,
    f,
    iter_tensor_elements,
    lusztig_involution,
    phi,
)
from .energy import (
    commutor,
    demazure_grading_oracle,
    energy_DL,
    energy_DR,
    local_energy,
    local_table,
    tau,
)
from .errors import ShapeTooLarge
from .kyoto import cut_construction, demazure_walk, ground_states
from .serialize import VerifyReport

SUITE_NAMES = (
    "theorem",
    "charge",
    "energy",
    "rmatrix",
    "involution",
    "oracle",
    "kyoto",
)


def _theorem_chunk(args):
    family, n, heights, start, stop = args
    ct = CartanType(family, n)
    worst = 0
    checks = 0
    for b in itertools.islice(iter_tensor_elements(ct, heights), start, stop):
        worst = max(worst, abs(energy_DL(b) + charge(b)))
        checks += 1
    return worst, checks


def _suite_theorem(ct, heights, jobs=1):
    size = crystal_size(ct, heights)
    if jobs > 1 and size > 4 * jobs:
        bounds = [round(size * k / jobs) for k in range(jobs + 1)]
        tasks = [
            (ct.family, ct.n, heights, a, b)
            for a, b in zip(bounds, bounds[1:])
        ]
        with Pool(jobs) as pool:
            parts = pool.map(_theorem_chunk, tasks)
        worst = max(w for w, _ in parts)
        checks = sum(c for _, c in parts)
    else:
        worst, checks = _theorem_chunk((ct.family, ct.n, heights, 0, None))
    return worst == 0, checks, worst


def _suite_charge(ct, heights):
    ok = True
    checks = 0
    for b in iter_tensor_elements(ct, heights):
        c0 = charge(b)
        if c0 != charge_via_selection(b):
            ok = False
        checks += 1
        for i in ct.classical_indices:
            fb = f(b, i)
            if fb is not None:
                checks += 1
                if charge(fb) != c0:
                    ok = False
        if phi(b, 0) >= 1 and eps(b, 0) >= 1:
            eb = e(b, 0)
            checks += 1
            if eb is None or charge(eb) != c0 - 1:
                ok = False
    return ok, checks


def _suite_energy(ct, heights):
    ok = True
    checks = 0
    for b in iter_tensor_elements(ct, heights):
        checks += 1
        if energy_DR(b) != energy_DL(tau(b)):
            ok = False
        if eps(b, 0) >= 1:
            fb = f(b, 0)
            if fb is not None:
                checks += 1
                if energy_DR(fb) != energy_DR(b) + 1:
                    ok = False
        if phi(b, 0) >= 1:
            eb = e(b, 0)
            if eb is not None:
                checks += 1
                if energy_DL(eb) != energy_DL(b) + 1:
                    ok = False
    return ok, checks


def _suite_rmatrix(ct, heights):
    """Pairwise checks over every ordered pair of heights in the shape."""
    ok = True
    checks = 0
    for hl, hr in sorted({(a, b) for a in heights for b in heights}):
        table = local_table(ct, hl, hr)
        gl, gr = tuple(range(1, hl + 1)), tuple(range(1, hr + 1))
        if table.sigma[(gl, gr)] != (gr, gl):
            ok = False
        if table.h[(gl, gr)] != 0:
            ok = False
        checks += 2
        for (l, r), (l2, r2) in table.sigma.items():
            pair = TensorElement(ct, (l, r))
            image = TensorElement(ct, (l2, r2))
            if commutor(ct, l, r) != (l2, r2):
                ok = False
            checks += 1
            # H(b2 (x) b1) = H(S(b1) (x) S(b2))
            sl = lusztig_involution(TensorElement(ct, (l,))).factors[0]
            sr = lusztig_involution(TensorElement(ct, (r,))).factors[0]
            if local_energy(ct, l, r) != local_energy(ct, sr, sl):
                ok = False
            checks += 1
            for i in ct.index_set:
                fp = f(pair, i)
                fi = f(image, i)
                if (fp is None) != (fi is None):
                    ok = False
                elif fp is not None:
                    if table.sigma[fp.factors] != fi.factors:
                        ok = False
                    if i != 0 and table.h[fp.factors] != table.h[(l, r)]:
                        ok = False
                checks += 1
        if ct.family == "C" and max(hl, hr) <= ct.n - 1:
            # local energies of unbarred pairs agree with type A on [n]
            ct_a = CartanType("A", ct.n)
            for (l, r), value in table.h.items():
                if all(x > 0 for x in l + r):
                    checks += 1
                    if local_energy(ct_a, l, r) != value:
                        ok = False
    return ok, checks


def _suite_involution(ct, heights):
    ok = True
    checks = 0
    for b in iter_tensor_elements(ct, heights):
        sb = lusztig_involution(b)
        checks += 1
        if lusztig_involution(sb) != b:
            ok = False
        for i in ct.classical_indices:
            fb = f(b, i)
            if fb is not None:
                checks += 1
                if e(sb, ct.istar(i)) != lusztig_involution(fb):
                    ok = False
    return ok, checks


def _suite_oracle(ct, heights):
    ok = True
    checks = 0
    for b in iter_tensor_elements(ct, heights):
        u_b, m = demazure_grading_oracle(b)
        checks += 1
        if m != energy_DR(b) - energy_DR(u_b):
            ok = False
    return ok, checks


def _suite_kyoto(ct, heights):
    ok = True
    checks = 0
    states = ground_states(ct, heights)
    if ct.family == "A":
        checks += 1
        if len(states) != 1:
            ok = False
    else:
        for g in states:
            res = demazure_walk(g)
            checks += 1
            if res.final != cut_construction(g):
                ok = False
    targets = set()
    for b in iter_tensor_elements(ct, heights):
        targets.add(demazure_grading_oracle(b)[0])
    checks += 1
    if targets != {g.element for g in states}:
        ok = False
    return ok, checks


def run_verify(ct, heights, mu=None, suites=None, jobs=1, budget=None):
    """Run the selected suites over one shape and assemble a report."""
    heights = tuple(heights)
    size = crystal_size(ct, heights)
    cap = VERTEX_BUDGET if budget is None else budget
    if size > cap:
        raise ShapeTooLarge(f"{size} vertices exceed the budget {cap}")
    wanted = SUITE_NAMES if suites is None else tuple(suites)
    t0 = time.perf_counter()
    report_suites = {}
    worst = 0
    for name in wanted:
        if name == "theorem":
            passed, checks, worst = _suite_theorem(ct, heights, jobs=jobs)
        elif name == "charge":
            passed, checks = _suite_charge(ct, heights)
        elif name == "energy":
            passed, checks = _suite_energy(ct, heights)
        elif name == "rmatrix":
            passed, checks = _suite_rmatrix(ct, heights)
        elif name == "involution":
            passed, checks = _suite_involution(ct, heights)
        elif name == "oracle":
            passed, checks = _suite_oracle(ct, heights)
        elif name == "kyoto":
            passed, checks = _suite_kyoto(ct, heights)
        else:
            raise ValueError(f"unknown suite {name!r}")
        report_suites[name] = {"passed": passed, "checks": checks}
    elapsed = time.perf_counter() - t0
    return VerifyReport(
        cartan=str(ct),
        heights=heights,
        mu=tuple(mu) if mu is not None else None,
        element_count=size,
        max_discrepancy=worst,
        elapsed_seconds=elapsed,
        suites=report_suites,
    )

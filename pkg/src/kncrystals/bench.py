"""Timing comparison between charge and the recursive energy definition."""

from __future__ import annotations

import json
import random
import statistics
import time
from dataclasses import dataclass

from .charge import charge
from .core import columns
from .core import TensorElement
from .energy import energy_DL, local_table


@dataclass
class BenchReport:
    cartan: str
    heights: tuple
    trials: int
    repeats: int
    charge_ns_per_element: float
    energy_warm_ns_per_element: float
    energy_cold_seconds: float
    speedup_energy_over_charge: float
    agreement: bool

    def to_json(self):
        return json.dumps(
            {
                "cartan": self.cartan,
                "heights": list(self.heights),
                "trials": self.trials,
                "repeats": self.repeats,
                "charge_ns_per_element": round(self.charge_ns_per_element, 1),
                "energy_warm_ns_per_element": round(
                    self.energy_warm_ns_per_element, 1
                ),
                "energy_cold_seconds": round(self.energy_cold_seconds, 6),
                "speedup_energy_over_charge": round(
                    self.speedup_energy_over_charge, 3
                ),
                "agreement": self.agreement,
            },
            indent=2,
            sort_keys=True,
        )

    def to_text(self):
        return "\n".join(
            [
                f"shape: {self.cartan} heights={list(self.heights)}",
                f"sampled elements: {self.trials} (timing repeats: {self.repeats})",
                f"charge: {self.charge_ns_per_element:.0f} ns/element (median)",
                f"energy (warm tables): {self.energy_warm_ns_per_element:.0f} ns/element (median)",
                f"energy table build (cold): {self.energy_cold_seconds:.3f} s",
                f"ratio energy/charge: {self.speedup_energy_over_charge:.2f}x",
                f"values agree (D = -charge): {self.agreement}",
            ]
        )


def run_bench(ct, heights, trials=10_000, seed=0, repeats=3):
    """Sample random elements and time charge against warm-table energy.

    Every sampled element is also checked for D = -charge; the ratio is
    reported without asserting a threshold.
    """
    heights = tuple(heights)
    rng = random.Random(seed)
    pools = [columns(ct, h) for h in heights]
    sample = [
        TensorElement(ct, tuple(rng.choice(pool) for pool in pools))
        for _ in range(trials)
    ]

    charges = [charge(b) for b in sample]

    t0 = time.perf_counter()
    for hl in set(heights):
        for hr in set(heights):
            local_table(ct, hl, hr)
    energy_DL(sample[0])
    cold = time.perf_counter() - t0

    energies = [energy_DL(b) for b in sample]
    agreement = all(d == -c for d, c in zip(energies, charges))

    def timed(fn):
        runs = []
        for _ in range(repeats):
            t0 = time.perf_counter()
            for b in sample:
                fn(b)
            runs.append((time.perf_counter() - t0) * 1e9 / len(sample))
        return statistics.median(runs)

    charge_ns = timed(charge)
    energy_ns = timed(energy_DL)

    return BenchReport(
        cartan=str(ct),
        heights=heights,
        trials=trials,
        repeats=repeats,
        charge_ns_per_element=charge_ns,
        energy_warm_ns_per_element=energy_ns,
        energy_cold_seconds=cold,
        speedup_energy_over_charge=energy_ns / charge_ns if charge_ns else 0.0,
        agreement=agreement,
    )

"""Generating functions built on charge and energy.

The Macdonald polynomial specialized at t = 0 is the charge-weighted sum of
weight monomials over a tensor product of column crystals; its type A Schur
expansion coefficients are the Kostka-Foulkes polynomials, recovered here as
charge-weighted counts of classically highest elements.  One-dimensional
sums grade highest elements by the energy D instead, so their q-exponents
are <= 0 and in type A they are the Kostka-Foulkes polynomials at 1/q.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .charge import charge
from .core import (
    TensorElement,
    crystal_size,
    is_classical_highest,
    iter_tensor_elements,
    tensor_elements,
    weight,
)
from .energy import combinatorial_r, energy_DL
from .errors import ShapeTooLarge, WeightMismatch


def conjugate(mu):
    """The transposed partition."""
    mu = tuple(mu)
    if any(a < b for a, b in zip(mu, mu[1:])) or any(p <= 0 for p in mu):
        raise ValueError(f"{mu} is not a partition")
    return tuple(sum(1 for p in mu if p >= i) for i in range(1, (mu[0] if mu else 0) + 1))


def shape_heights(ct, mu):
    """Factor heights of B_mu: the conjugate parts, tallest first."""
    heights = conjugate(mu)
    if heights and heights[0] > ct.max_height:
        raise ValueError(
            f"column height {heights[0]} of mu' exceeds {ct.max_height} for {ct}"
        )
    return heights


@dataclass(frozen=True)
class QPolynomial:
    """A sparse integer polynomial in q (negative exponents permitted)."""

    coeffs: tuple  # of (exponent, coefficient), sorted by exponent

    @staticmethod
    def from_dict(d):
        return QPolynomial(tuple(sorted((a, c) for a, c in d.items() if c)))

    def as_dict(self):
        return dict(self.coeffs)

    def substitute_inverse(self):
        """The polynomial with q replaced by 1/q."""
        return QPolynomial.from_dict({-a: c for a, c in self.coeffs})

    def __str__(self):
        if not self.coeffs:
            return "0"
        return " + ".join(f"{c}*q^{a}" for a, c in self.coeffs)


@dataclass(frozen=True)
class QXPolynomial:
    """A sparse polynomial in q and weight monomials x^content."""

    coeffs: tuple  # of ((exponent, content), coefficient), sorted

    @staticmethod
    def from_dict(d):
        return QXPolynomial(tuple(sorted((k, c) for k, c in d.items() if c)))

    def as_dict(self):
        return dict(self.coeffs)

    def q_at_one(self):
        """Collapse q; returns content -> coefficient."""
        out = {}
        for (a, content), c in self.coeffs:
            out[content] = out.get(content, 0) + c
        return out

    def total(self):
        return sum(c for _, c in self.coeffs)

    def is_symmetric(self):
        """Invariance of the coefficients under permuting the content vector."""
        d = self.as_dict()
        for (a, content), c in self.coeffs:
            for perm in set(itertools.permutations(content)):
                if d.get((a, perm), 0) != c:
                    return False
        return True

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for (a, content), c in self.coeffs:
            xs = ",".join(str(m) for m in content)
            parts.append(f"{c}*q^{a}*x^({xs})")
        return " + ".join(parts)


def sort_via_rmatrix(elem):
    """Reorder the factors to weakly decreasing heights by adjacent swaps.

    Each swap applies the combinatorial R-matrix, so the energy D is
    unchanged; this is asserted.
    """
    ct = elem.cartan
    before = energy_DL(elem)
    cols = list(elem.factors)
    changed = True
    while changed:
        changed = False
        for p in range(len(cols) - 1):
            if len(cols[p]) < len(cols[p + 1]):
                cols[p], cols[p + 1] = combinatorial_r(ct, cols[p], cols[p + 1])
                changed = True
    out = TensorElement(ct, tuple(cols))
    assert energy_DL(out) == before, "the R-matrix failed to preserve D"
    return out


def macdonald_p_q0(ct, mu, budget=None):
    """P_mu(x; q, 0) as the charge generating function over B_mu."""
    heights = shape_heights(ct, mu)
    acc = {}
    for b in tensor_elements(ct, heights, budget=budget):
        key = (charge(b), weight(b))
        acc[key] = acc.get(key, 0) + 1
    return QXPolynomial.from_dict(acc)


def highest_weight_elements(ct, heights, budget=None):
    from .core import VERTEX_BUDGET

    cap = VERTEX_BUDGET if budget is None else budget
    size = crystal_size(ct, heights)
    if size > cap:
        raise ShapeTooLarge(f"{size} vertices exceed the budget {cap}")
    for b in iter_tensor_elements(ct, heights):
        if is_classical_highest(b):
            yield b


def kostka_foulkes(ct, lam, mu):
    """K_{lambda' mu'}(q): charge over highest elements of B_mu of weight lambda."""
    if ct.family != "A":
        raise ValueError("Kostka-Foulkes polynomials are computed in type A")
    lam, mu = tuple(lam), tuple(mu)
    if sum(lam) != sum(mu):
        raise WeightMismatch(f"|{lam}| != |{mu}|")
    heights = shape_heights(ct, mu)
    target = lam + (0,) * (ct.n - len(lam))
    if len(target) != ct.n:
        raise ValueError(f"lambda = {lam} has more than n = {ct.n} parts")
    acc = {}
    for b in highest_weight_elements(ct, heights):
        if weight(b) == target:
            a = charge(b)
            acc[a] = acc.get(a, 0) + 1
    return QPolynomial.from_dict(acc)


def one_dim_sum_X(ct, lam, heights):
    """X_{lambda,B}(q): energy over highest elements of weight lambda.

    Exponents are <= 0 under the normalization D = 0 at the generators.
    """
    heights = tuple(heights)
    target = tuple(lam) + (0,) * (ct.n - len(lam))
    acc = {}
    for b in highest_weight_elements(ct, heights):
        if weight(b) == target:
            a = energy_DL(b)
            acc[a] = acc.get(a, 0) + 1
    return QPolynomial.from_dict(acc)


def dominant_contents(ct, heights):
    """Sorted weights of all classically highest elements of the product."""
    seen = set()
    for b in highest_weight_elements(ct, heights):
        seen.add(weight(b))
    return sorted(seen, reverse=True)


def schur_content_multiplicities(n, lam):
    """Weight multiplicities of the type A Schur polynomial s_lambda.

    Computed by direct enumeration of semistandard tableaux of shape lam
    with entries in [n]: columns strictly increase downward, rows weakly
    increase to the right.  Charge plays no role here, so this serves as an
    independent oracle for the Kostka-Foulkes reconstruction.
    """
    lam = tuple(lam)
    heights = conjugate(lam) if lam else ()
    if heights and heights[0] > n:
        return {}
    out = {}

    def fill(j, prev, content):
        if j == len(heights):
            key = tuple(content)
            out[key] = out.get(key, 0) + 1
            return
        h = heights[j]
        for col in itertools.combinations(range(1, n + 1), h):
            if prev is not None and any(col[i] < prev[i] for i in range(h)):
                continue
            for x in col:
                content[x - 1] += 1
            fill(j + 1, col, content)
            for x in col:
                content[x - 1] -= 1

    fill(0, None, [0] * n)
    return out


def schur_expansion_reconstruction(ct, mu):
    """Assemble sum_lambda K_{lambda' mu'}(q) s_lambda as a QXPolynomial."""
    if ct.family != "A":
        raise ValueError("the Schur reconstruction is a type A identity")
    heights = shape_heights(ct, mu)
    acc = {}
    for lam_content in dominant_contents(ct, heights):
        lam = tuple(p for p in lam_content if p > 0)
        kf = kostka_foulkes(ct, lam, mu)
        schur = schur_content_multiplicities(ct.n, lam)
        for a, c in kf.coeffs:
            for content, m in schur.items():
                key = (a, content)
                acc[key] = acc.get(key, 0) + c * m
    return QXPolynomial.from_dict(acc)

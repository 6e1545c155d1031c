"""Ground states and Demazure walks for the path model with a level-1 anchor.

A ground state of B^{r_N,1} (x) ... (x) B^{r_1,1} is an element u such that
u (x) u_{Lambda_0} is highest weight.  They are enumerated recursively from
the right: b_1 ranges over the elements with eps(b_1) = Lambda_0, and each
next factor over those with eps(b_{k+1}) = phi(b_k).  Type A crystals are
perfect, so the chain is forced and there is a single ground state; in type
C every step may branch and the construction yields a tree of states.  The
weight of a state is phi(b_N), always a single fundamental weight.

From each type C ground state an explicit sequence of Demazure arrows leads
to an element with no barred letters: the shape sequence grows by one
horizontal domino per step, wrapping completed height-n columns, and the
lowering word F_j is read off the current shape.  The same element is
produced directly by the cut construction, which lays out one column of
factor indices per unbarred letter and one per barred letter, cuts them at
multiples of n, and reads the rows as factor memberships.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .core import (
    TensorElement,
    column_eps_weight,
    column_phi_weight,
    columns,
    f,
)
from .energy import is_demazure_arrow
from .errors import BarredResidue, NonDemazureArrow, ShapeTooLarge


@dataclass(frozen=True)
class GroundState:
    """A ground state element together with its fundamental weight index."""

    element: TensorElement
    weight_index: int


@lru_cache(maxsize=None)
def _columns_by_eps(ct, height):
    table = {}
    for col in columns(ct, height):
        table.setdefault(column_eps_weight(ct, col), []).append(col)
    return table


def _fundamental_index(ct, coeffs):
    if sum(coeffs) != 1:
        return None
    return coeffs.index(1)


def ground_states(ct, heights, budget=100_000):
    """All ground states of the tensor product with the given heights.

    ``heights`` lists the factors left to right, so the recursion starts at
    the last entry.  States are returned sorted by their factor serialization.
    """
    heights = tuple(heights)
    out = []

    def extend(chain, want):
        # chain holds b_1, b_2, ... ; factor heights are read right to left
        k = len(chain)
        if k == len(heights):
            h = _fundamental_index(ct, column_phi_weight(ct, chain[-1]))
            if h is None:
                raise AssertionError("ground state weight is not fundamental")
            elem = TensorElement(ct, tuple(reversed(chain)))
            out.append(GroundState(elem, h))
            if len(out) > budget:
                raise ShapeTooLarge(f"more than {budget} ground states")
            return
        height = heights[len(heights) - 1 - k]
        for col in _columns_by_eps(ct, height).get(want, ()):
            extend(chain + [col], column_phi_weight(ct, col))

    extend([], ct.fundamental(0))
    out.sort(key=lambda g: g.element.sort_key())
    return out


@dataclass(frozen=True)
class ShapeState:
    """A partition with k full columns of height n and two extras h2 >= h1."""

    k: int
    h2: int
    h1: int

    def grow(self, n):
        return normalize_shape(ShapeState(self.k, self.h2 + 1, self.h1 + 1), n)

    def cells(self, n):
        return self.k * n + self.h2 + self.h1


def normalize_shape(state, n):
    """Fold completed height-n columns into the full-column count."""
    k, h2, h1 = state.k, state.h2, state.h1
    if h2 == n and h1 == n:
        k, h2, h1 = k + 2, 0, 0
    elif h2 == n:
        k, h2, h1 = k + 1, h1, 0
    if not (n > h2 >= h1 >= 0):
        raise ValueError(f"bad shape state {state} for n = {n}")
    return ShapeState(k, h2, h1)


def f_word(state, ct):
    """The lowering word of one walk step, in application order.

    For the shape (k, h2, h1) the word applies, from high to low index,
    f_n k times, f_i 2k times for h2 < i < n, 2k+1 times for h1 < i <= h2,
    2k+2 times for 1 <= i <= h1, and finally f_0 k+1 times.
    """
    n = ct.n
    k, h2, h1 = state.k, state.h2, state.h1

    def exponent(i):
        if i == 0:
            return k + 1
        if i == n:
            return k
        if i <= h1:
            return 2 * k + 2
        if i <= h2:
            return 2 * k + 1
        return 2 * k

    word = []
    for i in range(n, -1, -1):
        word.extend([i] * exponent(i))
    return tuple(word)


@dataclass(frozen=True)
class WalkResult:
    ground_state: GroundState
    final: TensorElement
    steps: tuple  # of (ShapeState, word) for each applied F_j


def demazure_walk(gs):
    """Iterate v -> F_j(v) until the word fails, checking every 0-arrow.

    The attempt of a word rolls back on the first undefined operator; only
    fully applied words advance the walk.  Raises if an applied f_0 is not a
    Demazure arrow or if the final element still contains a barred letter.
    """
    elem = gs.element
    ct = elem.cartan
    if ct.family != "C":
        raise ValueError("the Demazure walk is defined for type C only")
    state = normalize_shape(ShapeState(0, gs.weight_index, 0), ct.n)
    steps = []
    cell_cap = sum(elem.heights)
    while state.cells(ct.n) <= cell_cap:
        word = f_word(state, ct)
        cur = elem
        ok = True
        bad_zero = None
        for i in word:
            if i == 0 and not is_demazure_arrow(cur, 0) and f(cur, 0) is not None:
                bad_zero = cur
            nxt = f(cur, i)
            if nxt is None:
                ok = False
                break
            cur = nxt
        if not ok:
            break
        if bad_zero is not None:
            raise NonDemazureArrow(f"f_0 applied at {bad_zero} with eps_0 = 0")
        steps.append((state, word))
        elem = cur
        state = state.grow(ct.n)
    if any(x < 0 for col in elem.factors for x in col):
        raise BarredResidue(f"walk ended at {elem} with barred letters")
    return WalkResult(gs, elem, tuple(steps))


def cut_construction(gs):
    """The direct construction of the walk's final element.

    Factor i contributes a cell labelled i to the first tower per unbarred
    letter and to the second tower per barred letter; the towers are cut at
    multiples of n and the pieces aligned at the bottom.  Row r then lists
    the factors of the result containing the letter r.
    """
    elem = gs.element
    ct = elem.cartan
    if ct.family != "C":
        raise ValueError("the cut construction is defined for type C only")
    n = ct.n
    n_fac = len(elem.factors)
    tower1 = []
    tower2 = []
    for i in range(1, n_fac + 1):
        col = elem.factor_from_right(i)
        tower1.extend([i] * sum(1 for x in col if x > 0))
        tower2.extend([i] * sum(1 for x in col if x < 0))
    rows = {r: [] for r in range(1, n + 1)}
    for tower in (tower1, tower2):
        for pos, label in enumerate(tower):
            rows[pos % n + 1].append(label)
    new_factors = {j: [] for j in range(1, n_fac + 1)}
    for r, labels in rows.items():
        for j in labels:
            new_factors[j].append(r)
    cols = tuple(
        tuple(sorted(new_factors[j])) for j in range(n_fac, 0, -1)
    )
    return TensorElement(ct, cols)

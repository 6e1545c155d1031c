"""Charge statistics on tensor products of columns.

Two interchangeable computations are provided for each type and cross-checked
in the tests:

* the circular-order reordering of the filling followed by summing arm
  lengths over descents (full arms in type A, half the arm sum in type C,
  where the filling is first written in split form), and
* the selection algorithm on the charge word, scanning right to left and
  wrapping around with a penalty.

The descent-arm route is the default; the selection route is the oracle.
Both require the column heights to be weakly decreasing left to right;
callers holding an unsorted element can reorder it with
:func:`kncrystals.qpoly.sort_via_rmatrix`, which preserves the energy.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import split_column
from .errors import (
    HeightsNotSorted,
    NotPartitionContent,
    OddArmSum,
)


def _require_sorted(heights):
    if any(a < b for a, b in zip(heights, heights[1:])):
        raise HeightsNotSorted(f"column heights {heights} are not weakly decreasing")


def ls_charge(word):
    """Lascoux-Schutzenberger charge of a word with partition content.

    Letters are positive integers.  Each round scans from the right end,
    selecting 1, 2, ..., k, always taking the nearest unused occurrence to
    the left of the previous selection and wrapping to the rightmost one
    when none exists; every wrap while seeking j+1 contributes k - j.
    Selected letters are removed and the procedure repeats.
    """
    word = list(word)
    if any(x < 1 for x in word):
        raise NotPartitionContent("letters must be positive integers")
    top = max(word, default=0)
    counts = [word.count(j) for j in range(1, top + 1)]
    if any(a < b for a, b in zip(counts, counts[1:])):
        raise NotPartitionContent(f"content {counts} is not a partition")
    alive = [True] * len(word)
    remaining = len(word)
    total = 0
    while remaining:
        pos = None
        wraps = []
        target = 1
        while True:
            found = None
            if pos is not None:
                for p in range(pos - 1, -1, -1):
                    if alive[p] and word[p] == target:
                        found = p
                        break
            if found is None:
                for p in range(len(word) - 1, -1, -1):
                    if alive[p] and word[p] == target:
                        found = p
                        break
                if found is not None and pos is not None:
                    wraps.append(target - 1)
            if found is None:
                break
            alive[found] = False
            remaining -= 1
            pos = found
            target += 1
        k = target - 1
        total += sum(k - j for j in wraps)
    return total


@dataclass(frozen=True)
class ChargeWord:
    """The sorted biword of a filling.

    Biletters pair each entry with its column label; labels count the
    columns of the (split, in type C) filling left to right starting at 1,
    so in type C the odd labels are the unprimed ones.  Biletters are listed
    in decreasing order of the entries, ties broken by decreasing label.
    """

    cartan: object
    doubled: bool
    biletters: tuple  # of (letter, label)

    @property
    def cw2(self):
        return tuple(label for _, label in self.biletters)

    def cw2_names(self):
        return tuple(self.label_name(j) for j in self.cw2)

    def label_name(self, j):
        if not self.doubled:
            return str(j)
        q, r = divmod(j + 1, 2)
        return f"{q}'" if r == 1 else str(q)


def split_factors(elem):
    """The doubled column sequence of a type C element, left to right."""
    ct = elem.cartan
    out = []
    for col in elem.factors:
        left, right = split_column(ct, col)
        out.append(left)
        out.append(right)
    return tuple(out)


def charge_word(elem):
    ct = elem.cartan
    _require_sorted(elem.heights)
    if ct.family == "C":
        cols = split_factors(elem)
        doubled = True
    else:
        cols = elem.factors
        doubled = False
    bis = []
    for j, col in enumerate(cols, start=1):
        for x in col:
            bis.append((x, j))
    bis.sort(key=lambda kl: (-ct.key(kl[0]), -kl[1]))
    return ChargeWord(ct, doubled, tuple(bis))


@dataclass(frozen=True)
class CircFilling:
    """A filling of the (doubled) shape produced by the circular reordering.

    Columns are stored in produced row order, top row first; ``heights``
    lists the column heights left to right.
    """

    cartan: object
    doubled: bool
    heights: tuple
    cols: tuple

    def rows(self):
        out = []
        for i in range(self.heights[0] if self.heights else 0):
            out.append(tuple(c[i] for c, h in zip(self.cols, self.heights) if h > i))
        return tuple(out)

    def descents(self):
        """Cells (row, column), 1-based, whose right neighbour is smaller."""
        key = self.cartan.key
        found = []
        for j in range(len(self.cols) - 1):
            h_next = self.heights[j + 1]
            for i in range(min(self.heights[j], h_next)):
                if key(self.cols[j][i]) > key(self.cols[j + 1][i]):
                    found.append((i + 1, j + 1))
        return tuple(found)

    def arm(self, row, col):
        return sum(1 for h in self.heights[col:] if h >= row)


def _circ_min(ct, start, pool):
    """The minimum of ``pool`` in the circular order starting at ``start``."""
    size = ct.alphabet_size
    base = ct.key(start)
    return min(pool, key=lambda x: (ct.key(x) - base) % size)


def circ_ord(elem):
    """Reorder a filling column by column against the circular order.

    The first column stays put; each later cell takes the unused letter of
    its column that is circularly smallest from the previous column's entry
    in the same row.  In type C the rule runs over the doubled sequence of
    split columns.
    """
    ct = elem.cartan
    _require_sorted(elem.heights)
    if ct.family == "C":
        cols = split_factors(elem)
        doubled = True
    else:
        cols = elem.factors
        doubled = False
    out = [tuple(cols[0])]
    for col in cols[1:]:
        pool = list(col)
        prev = out[-1]
        produced = []
        for i in range(len(col)):
            pick = _circ_min(ct, prev[i], pool)
            pool.remove(pick)
            produced.append(pick)
        out.append(tuple(produced))
    filling = CircFilling(ct, doubled, tuple(len(c) for c in cols), tuple(out))
    if doubled:
        for i, j in filling.descents():
            if j % 2 == 1:
                raise OddArmSum(
                    f"descent inside the split pair at row {i}, column {j}"
                )
    return filling


def charge_from_filling(filling):
    arms = sum(filling.arm(i, j) for i, j in filling.descents())
    if not filling.doubled:
        return arms
    if arms % 2:
        raise OddArmSum(f"odd descent arm sum {arms} on a doubled filling")
    return arms // 2


def charge(elem):
    """The charge statistic; equal to minus the energy D."""
    return charge_from_filling(circ_ord(elem))


def _selection_charge(word, paired):
    """Charge of a label word by the selection algorithm.

    With ``paired`` the labels 1, 2, 3, 4, ... stand for 1, 1', 2, 2', ...;
    a wrap while seeking a primed label violates the structural guarantee
    and raises, and a wrap while seeking the unprimed label j+1 contributes
    k - j, where k is the number of pairs selected in the round.
    """
    word = list(word)
    alive = [True] * len(word)
    remaining = len(word)
    total = 0
    while remaining:
        pos = None
        wraps = []
        target = 1
        while True:
            found = None
            if pos is not None:
                for p in range(pos - 1, -1, -1):
                    if alive[p] and word[p] == target:
                        found = p
                        break
            if found is None:
                for p in range(len(word) - 1, -1, -1):
                    if alive[p] and word[p] == target:
                        found = p
                        break
                if found is not None and pos is not None:
                    wraps.append(target)
            if found is None:
                break
            alive[found] = False
            remaining -= 1
            pos = found
            target += 1
        top = target - 1
        if not paired:
            total += sum(top - (t - 1) for t in wraps)
        else:
            if top % 2:
                raise OddArmSum("selection round ended between a pair")
            k = top // 2
            for t in wraps:
                if t % 2 == 0:
                    raise OddArmSum(
                        f"wrap while seeking the primed label {t // 2}'"
                    )
                total += k - (t - 1) // 2
    return total


def charge_via_selection(elem):
    """Charge by the selection algorithm on the charge word (the oracle)."""
    cw = charge_word(elem)
    return _selection_charge(cw.cw2, cw.doubled)

"""Shared helpers for the test suite."""

from kncrystals import CartanType, conjugate


def partitions_of(total, maxpart=None):
    maxpart = total if maxpart is None else maxpart
    if total == 0:
        yield ()
        return
    for first in range(min(total, maxpart), 0, -1):
        for rest in partitions_of(total - first, first):
            yield (first,) + rest


def theorem_shapes():
    """The exhaustive-verification shapes: all valid mu within the caps."""
    out = []
    for n in (2, 3, 4):
        ct = CartanType("A", n)
        for size in range(1, 9):
            for mu in partitions_of(size, maxpart=3):
                if conjugate(mu)[0] <= ct.max_height:
                    out.append((ct, mu))
    for n in (2, 3):
        ct = CartanType("C", n)
        for size in range(1, 7):
            for mu in partitions_of(size, maxpart=2):
                if conjugate(mu)[0] <= ct.max_height:
                    out.append((ct, mu))
    return out

"""Partitions, multipartitions, Young diagrams and rim hooks.

A partition is a weakly decreasing tuple of positive ints and a multipartition
is a tuple of ``r`` partitions.  Plain tuples keep everything hashable and
cheap to compare.  Nodes are 1-based ``(row, col, comp)`` triples.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import NamedTuple, Sequence

Partition = tuple[int, ...]
Multipartition = tuple[Partition, ...]


class Node(NamedTuple):
    row: int
    col: int
    comp: int


@dataclass(frozen=True)
class RimHook:
    """A rim hook (border strip) lying inside a single component."""

    comp: int
    cells: frozenset[Node]

    @property
    def length(self) -> int:
        return len(self.cells)


def is_partition(parts: Sequence[int]) -> bool:
    return all(x > 0 for x in parts) and all(
        parts[i] >= parts[i + 1] for i in range(len(parts) - 1)
    )


def partition(parts: Sequence[int]) -> Partition:
    """Validate ``parts`` and return it as a tuple."""
    parts = tuple(int(x) for x in parts)
    if not is_partition(parts):
        raise ValueError(f"not a partition: {parts!r}")
    return parts


def multipartition(components: Sequence[Sequence[int]]) -> Multipartition:
    if len(components) < 1:
        raise ValueError("a multipartition needs at least one component")
    return tuple(partition(c) for c in components)


def size(mp: Multipartition) -> int:
    return sum(sum(c) for c in mp)


def partition_key(p: Partition) -> tuple[int, ...]:
    # Ascending sort on this key is decreasing lexicographic order on parts,
    # with a proper prefix ranked after its extensions: (2,) (1,1) (1,) ().
    return tuple(-x for x in p) + (1,)


def multipartition_key(mp: Multipartition) -> tuple[tuple[int, ...], ...]:
    return tuple(partition_key(c) for c in mp)


def _partitions_max(n: int, largest: int):
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions_max(n - first, first):
            yield (first,) + rest


@lru_cache(maxsize=None)
def enumerate_partitions(n: int) -> tuple[Partition, ...]:
    """All partitions of ``n`` in decreasing lexicographic order."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return tuple(_partitions_max(n, n))


@lru_cache(maxsize=None)
def enumerate_multipartitions(n: int, r: int) -> tuple[Multipartition, ...]:
    """All ``r``-partitions of ``n``, lexicographic over components.

    Components are compared under the partition order of
    :func:`enumerate_partitions`, so ``((2), ())`` precedes ``((1, 1), ())``
    which precedes ``((1), (1))``.
    """
    if n < 0 or r < 1:
        raise ValueError("need n >= 0 and r >= 1")
    if r == 1:
        return tuple((p,) for p in enumerate_partitions(n))
    out = []
    for m in range(n + 1):
        for head in enumerate_partitions(m):
            for tail in enumerate_multipartitions(n - m, r - 1):
                out.append((head,) + tail)
    out.sort(key=multipartition_key)
    return tuple(out)


def diagram(mp: Multipartition) -> frozenset[Node]:
    return frozenset(
        Node(i, j, k)
        for k, comp in enumerate(mp, start=1)
        for i, row_len in enumerate(comp, start=1)
        for j in range(1, row_len + 1)
    )


def _to_beta(p: Partition, m: int) -> list[int]:
    padded = list(p) + [0] * (m - len(p))
    return [padded[i] + (m - 1 - i) for i in range(m)]


def _from_beta(beta: Sequence[int]) -> Partition:
    m = len(beta)
    beads = sorted(beta, reverse=True)
    return tuple(x for x in (beads[i] - (m - 1 - i) for i in range(m)) if x > 0)


def _partition_cells(p: Partition, comp: int) -> set[Node]:
    return {Node(i, j, comp) for i, row_len in enumerate(p, start=1) for j in range(1, row_len + 1)}


def partition_rim_hook_removals(p: Partition, l: int) -> list[Partition]:
    """Partitions obtained from ``p`` by removing one rim hook of length ``l``.

    Ordered by the row in which the removed hook starts (top first).
    """
    if l < 1:
        raise ValueError("hook length must be positive")
    m = len(p)
    beta = _to_beta(p, m)
    occupied = set(beta)
    out = []
    for b in beta:
        if b - l >= 0 and (b - l) not in occupied:
            out.append(_from_beta([b - l if x == b else x for x in beta]))
    return out


def partition_rim_hook_additions(p: Partition, l: int) -> list[Partition]:
    """Partitions obtained from ``p`` by wrapping on one rim hook of length ``l``."""
    if l < 1:
        raise ValueError("hook length must be positive")
    m = len(p) + l
    beta = _to_beta(p, m)
    occupied = set(beta)
    out = [
        _from_beta([b + l if x == b else x for x in beta])
        for b in beta
        if (b + l) not in occupied
    ]
    out.sort(key=partition_key)
    return out


def _replace(mp: Multipartition, k: int, comp: Partition) -> Multipartition:
    return mp[:k] + (comp,) + mp[k + 1 :]


def rim_hook_removals(mp: Multipartition, l: int) -> list[tuple[Multipartition, RimHook]]:
    """All ``(mu, hook)`` with ``hook`` a length-``l`` rim hook of ``mp`` and ``mu = mp - hook``."""
    out = []
    for k, comp in enumerate(mp):
        before = _partition_cells(comp, k + 1)
        for smaller in partition_rim_hook_removals(comp, l):
            cells = frozenset(before - _partition_cells(smaller, k + 1))
            out.append((_replace(mp, k, smaller), RimHook(k + 1, cells)))
    return out


def rim_hook_additions(mp: Multipartition, l: int) -> list[tuple[Multipartition, RimHook]]:
    """All ``(mu, hook)`` with ``mu`` obtained by wrapping a length-``l`` rim hook onto ``mp``."""
    out = []
    for k, comp in enumerate(mp):
        before = _partition_cells(comp, k + 1)
        for bigger in partition_rim_hook_additions(comp, l):
            cells = frozenset(_partition_cells(bigger, k + 1) - before)
            out.append((_replace(mp, k, bigger), RimHook(k + 1, cells)))
    return out


def remove_hook(mp: Multipartition, hook: RimHook) -> Multipartition:
    """Remove the cells of ``hook`` from ``mp``; raises if the result is not a multipartition."""
    k = hook.comp - 1
    cells = _partition_cells(mp[k], hook.comp)
    if not hook.cells <= cells:
        raise ValueError("hook is not contained in the diagram")
    rest = cells - hook.cells
    comp = tuple(
        sum(1 for node in rest if node.row == i) for i in range(1, len(mp[k]) + 1)
    )
    comp = tuple(x for x in comp if x > 0)
    if not is_partition(comp) or _partition_cells(comp, hook.comp) != rest:
        raise ValueError("removal does not leave a partition")
    return _replace(mp, k, comp)


def is_rim_hook(cells: frozenset[Node]) -> bool:
    """Connected, nonempty, one component, and free of 2x2 squares."""
    if not cells or len({c.comp for c in cells}) != 1:
        return False
    pos = {(c.row, c.col) for c in cells}
    for i, j in pos:
        if {(i + 1, j), (i, j + 1), (i + 1, j + 1)} <= pos:
            return False
    seen = set()
    stack = [next(iter(pos))]
    while stack:
        i, j = stack.pop()
        if (i, j) in seen:
            continue
        seen.add((i, j))
        stack.extend(x for x in ((i + 1, j), (i - 1, j), (i, j + 1), (i, j - 1)) if x in pos)
    return seen == pos


def e_core(p: Partition, e: int) -> Partition:
    """The ``e``-core of ``p``, read off the ``e``-runner abacus.

    Sliding every bead as far up its runner as it will go is the same as
    stripping ``e``-hooks until none remain.
    """
    if e < 2:
        raise ValueError("e must be at least 2")
    m = len(p)
    beta = _to_beta(p, m)
    per_runner = [0] * e
    for b in beta:
        per_runner[b % e] += 1
    core_beta = [runner + e * level for runner in range(e) for level in range(per_runner[runner])]
    return _from_beta(core_beta)


def e_weight(p: Partition, e: int) -> int:
    return (sum(p) - sum(e_core(p, e))) // e


def hook_lengths(p: Partition) -> dict[tuple[int, int], int]:
    conj = [sum(1 for x in p if x >= j) for j in range(1, (p[0] if p else 0) + 1)]
    return {
        (i, j): (p[i - 1] - j) + (conj[j - 1] - i) + 1
        for i in range(1, len(p) + 1)
        for j in range(1, p[i - 1] + 1)
    }


def to_nested(mp: Multipartition) -> list[list[int]]:
    return [list(c) for c in mp]


def from_nested(data: Sequence[Sequence[int]]) -> Multipartition:
    return multipartition(data)

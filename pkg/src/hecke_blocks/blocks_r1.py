"""Blocks of type G(r,1,n) from residue classes, with a rim-hook cross-check."""

from __future__ import annotations

from dataclasses import dataclass, field

from .multipartition import (
    Multipartition,
    enumerate_multipartitions,
    rim_hook_additions,
    rim_hook_removals,
    size,
)
from .report import BlockReport
from .residue import HeckeParamsG1, group_by_content, residue_content
from .unionfind import UnionFind


def _check_rank(r: int, params: HeckeParamsG1) -> None:
    if params.r != r:
        raise ValueError(f"parameters are for r={params.r}, not r={r}")


def residue_classes(n: int, r: int, params: HeckeParamsG1) -> BlockReport:
    """The residue classes of r-partitions of n, which are the blocks of type G(r,1,n)."""
    _check_rank(r, params)
    classes = group_by_content(enumerate_multipartitions(n, r), params)
    gamma = [block[0] for block in classes if len(block) == 1]
    return BlockReport("g_r1n", n, r, params, classes, gamma)


def gamma_set(n: int, r: int, params: HeckeParamsG1) -> frozenset[Multipartition]:
    """Multipartitions that are alone in their residue class."""
    return frozenset(residue_classes(n, r, params).gamma)


def jantzen_adjacent(lam: Multipartition, mu: Multipartition, params: HeckeParamsG1) -> bool:
    """One rim-hook move: unwrap a hook from ``lam`` and wrap one of equal length to reach ``mu``.

    The move only counts when the residue contents of both ends agree.
    """
    n = size(lam)
    if size(mu) != n or len(mu) != len(lam):
        raise ValueError("adjacency compares multipartitions of the same size and rank")
    if lam == mu or residue_content(lam, params) != residue_content(mu, params):
        return False
    for l in range(1, n + 1):
        for nu, _ in rim_hook_removals(lam, l):
            if any(m == mu for m, _ in rim_hook_additions(nu, l)):
                return True
    return False


def jantzen_closure(n: int, r: int, params: HeckeParamsG1) -> BlockReport:
    """Connected components of the rim-hook move graph on r-partitions of n."""
    _check_rank(r, params)
    mps = enumerate_multipartitions(n, r)
    content = {mp: residue_content(mp, params) for mp in mps}
    uf = UnionFind(mps)
    for lam in mps:
        for l in range(1, n + 1):
            for nu, _ in rim_hook_removals(lam, l):
                for mu, _ in rim_hook_additions(nu, l):
                    if mu != lam and content[mu] == content[lam]:
                        uf.union(lam, mu)
    classes = uf.classes(mps)
    gamma = [block[0] for block in classes if len(block) == 1]
    return BlockReport("g_r1n", n, r, params, classes, gamma)


@dataclass
class LMAgreement:
    agree: bool
    refines: bool
    refinement_direction: str
    # (lam, mu) with equal content but in different rim-hook classes
    split_witnesses: list[tuple[Multipartition, Multipartition]] = field(default_factory=list)
    # (lam, mu) joined by rim-hook moves despite different content; must stay empty
    violation_witnesses: list[tuple[Multipartition, Multipartition]] = field(default_factory=list)


def verify_lm_agreement(n: int, r: int, params: HeckeParamsG1) -> LMAgreement:
    """Compare rim-hook closure classes with residue classes."""
    residue = residue_classes(n, r, params)
    closure = jantzen_closure(n, r, params)
    r_index = {mp: i for i, block in enumerate(residue.classes) for mp in block}
    j_index = {mp: i for i, block in enumerate(closure.classes) for mp in block}

    violations = []
    for block in closure.classes:
        for mp in block[1:]:
            if r_index[mp] != r_index[block[0]]:
                violations.append((block[0], mp))

    splits = []
    for block in residue.classes:
        seen = {j_index[block[0]]}
        for mp in block[1:]:
            if j_index[mp] not in seen:
                seen.add(j_index[mp])
                splits.append((block[0], mp))

    refines = not violations
    if not refines:
        direction = "violation"
    elif splits:
        direction = "strict_refinement"
    else:
        direction = "equal"
    return LMAgreement(refines and not splits, refines, direction, splits, violations)

"""Type G(r,p,n): the shift action, the label set, and the block classification.

The shift ``lam[i]`` rotates components inside each consecutive run of ``p``
components.  Labels ``lam<j>`` are classes of pairs ``(lam, j mod p)`` under
shifting ``lam`` and moving ``j`` by multiples of ``p / period(lam)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .blocks_r1 import residue_classes
from .multipartition import Multipartition, enumerate_multipartitions, from_nested, multipartition_key, size, to_nested
from .report import BlockReport
from .residue import (
    HeckeParamsG1,
    RationalAngle,
    format_rational,
    parse_rational,
    residue_content,
    residue_equivalent,
    translate_content,
)
from .unionfind import UnionFind


@dataclass(frozen=True)
class GrpnParams:
    """Parameters ``h, k_1..k_{d-1}`` of the type G(r,p,n) algebra, ``r = p*d``."""

    n: int
    r: int
    p: int
    h: Fraction
    k: tuple[Fraction, ...] = ()

    def __post_init__(self):
        if self.n < 0 or self.r < 1 or self.p < 1:
            raise ValueError("need n >= 0, r >= 1, p >= 1")
        if self.r % self.p:
            raise ValueError(f"p={self.p} does not divide r={self.r}")
        object.__setattr__(self, "h", parse_rational(self.h) if isinstance(self.h, str) else Fraction(self.h))
        ks = tuple(parse_rational(x) if isinstance(x, str) else Fraction(x) for x in self.k)
        if len(ks) != self.d - 1:
            raise ValueError(f"expected {self.d - 1} k-parameters, got {len(ks)}")
        object.__setattr__(self, "k", ks)

    @property
    def d(self) -> int:
        return self.r // self.p

    def x_angle(self, c: int) -> RationalAngle:
        kc = Fraction(0) if c == 0 else self.k[c - 1]
        return RationalAngle(kc + Fraction(c, self.d))

    def to_dict(self) -> dict:
        return {"h": format_rational(self.h), "k": [format_rational(x) for x in self.k]}

    @classmethod
    def from_dict(cls, n: int, r: int, p: int, data: dict) -> "GrpnParams":
        return cls(n, r, p, parse_rational(data["h"]), tuple(parse_rational(x) for x in data["k"]))


@dataclass(frozen=True)
class Label:
    """Canonical name of ``rep<j>``: ``rep`` is orbit-minimal and ``0 <= j < d_lambda``."""

    rep: Multipartition
    j: int
    period: int
    d_lambda: int

    def sort_key(self):
        return (multipartition_key(self.rep), self.j)

    def to_dict(self) -> dict:
        return {"rep": to_nested(self.rep), "j": self.j, "period": self.period}

    @classmethod
    def from_dict(cls, data: dict, p: int) -> "Label":
        rep = from_nested(data["rep"])
        period = int(data["period"])
        return cls(rep, int(data["j"]), period, _label_count(rep, period, p))


def _label_count(lam: Multipartition, period: int, p: int) -> int:
    # G(r,p,0) and G(r,1,0) are both trivial, so the empty multipartition
    # carries a single label rather than p of them.
    return 1 if size(lam) == 0 else p // period


def shift(lam: Multipartition, i: int, p: int) -> Multipartition:
    r = len(lam)
    if p < 1 or r % p:
        raise ValueError(f"p={p} does not divide r={r}")
    return tuple(lam[c * p + (j + i) % p] for c in range(r // p) for j in range(p))


def orbit_period(lam: Multipartition, p: int) -> tuple[int, int]:
    """``(period, p // period)`` for the shift action on ``lam``."""
    for m in range(1, p + 1):
        if shift(lam, m, p) == lam:
            return m, p // m
    raise AssertionError("shift by p is always the identity")


def shift_orbit(lam: Multipartition, p: int) -> list[Multipartition]:
    period, _ = orbit_period(lam, p)
    return [shift(lam, i, p) for i in range(period)]


def orbit_rep(lam: Multipartition, p: int) -> Multipartition:
    return min(shift_orbit(lam, p), key=multipartition_key)


def label_of(lam: Multipartition, j: int, p: int) -> Label:
    """The canonical label of the class containing ``(lam, j mod p)``."""
    period, _ = orbit_period(lam, p)
    d_lam = _label_count(lam, period, p)
    return Label(orbit_rep(lam, p), j % d_lam, period, d_lam)


def index_set(n: int, r: int, p: int) -> list[Label]:
    """One canonical label per class of pairs ``(lam, j mod p)``.

    An orbit of period ``k`` contributes ``p // k`` labels, except at ``n == 0``
    where the group is trivial and there is a single label.
    """
    if r % p:
        raise ValueError(f"p={p} does not divide r={r}")
    labels = []
    for lam in enumerate_multipartitions(n, r):
        if orbit_rep(lam, p) == lam:
            period, _ = orbit_period(lam, p)
            d_lam = _label_count(lam, period, p)
            labels.extend(Label(lam, j, period, d_lam) for j in range(d_lam))
    return labels


def lift_params(gp: GrpnParams) -> HeckeParamsG1:
    """Type G(r,1,n) parameters whose cyclotomic roots are ``x_c * xi**j``."""
    r, p, d = gp.r, gp.p, gp.d
    k_dag = []
    for m in range(1, r):
        c, j = divmod(m, p)
        kc = Fraction(0) if c == 0 else gp.k[c - 1]
        k_dag.append(kc + Fraction(c, d) + Fraction(j, p) - Fraction(m, r))
    return HeckeParamsG1(r, gp.h, tuple(k_dag))


def approx_equivalent(lam: Multipartition, mu: Multipartition, gp: GrpnParams) -> bool:
    lifted = lift_params(gp)
    return any(residue_equivalent(lam, shift(mu, j, gp.p), lifted) for j in range(gp.p))


def approx_classes(gp: GrpnParams, residue_blocks: list[list[Multipartition]] | None = None) -> list[list[Multipartition]]:
    """Classes of ``lam ~ mu[j]``: residue classes glued along shift orbits."""
    if residue_blocks is None:
        residue_blocks = residue_classes(gp.n, gp.r, lift_params(gp)).classes
    mps = enumerate_multipartitions(gp.n, gp.r)
    uf = UnionFind(mps)
    for block in residue_blocks:
        for mp in block[1:]:
            uf.union(block[0], mp)
    for mp in mps:
        uf.union(mp, shift(mp, 1, gp.p))
    return uf.classes(mps)


def grpn_blocks(gp: GrpnParams) -> BlockReport:
    """Blocks of type G(r,p,n).

    A label whose representative is alone in its residue class is a block by
    itself.  All other labels fall into one block per class of ``approx_classes``.
    """
    lifted = lift_params(gp)
    residue = residue_classes(gp.n, gp.r, lifted)
    gamma = set(residue.gamma)
    by_rep: dict[Multipartition, list[Label]] = {}
    for label in index_set(gp.n, gp.r, gp.p):
        by_rep.setdefault(label.rep, []).append(label)

    blocks: list[list[Label]] = []
    for cls in approx_classes(gp, residue.classes):
        in_gamma = [mp in gamma for mp in cls]
        if any(in_gamma) and not all(in_gamma):
            raise AssertionError(f"class mixes Gamma and non-Gamma members: {cls}")
        labels = [label for mp in cls for label in by_rep.get(mp, [])]
        if all(in_gamma):
            blocks.extend([label] for label in labels)
        else:
            blocks.append(labels)
    blocks = [sorted(b, key=Label.sort_key) for b in blocks]
    blocks.sort(key=lambda b: b[0].sort_key())
    return BlockReport("g_rpn", gp.n, gp.r, gp, blocks, sorted(gamma, key=multipartition_key), gp.p)


@dataclass
class CheckReport:
    passed: bool
    checked: int
    witnesses: list = field(default_factory=list)


def _shift_translation(gp: GrpnParams, lifted: HeckeParamsG1) -> CheckReport:
    witnesses = []
    checked = 0
    for lam in enumerate_multipartitions(gp.n, gp.r):
        base = residue_content(lam, lifted)
        for i in range(gp.p):
            checked += 1
            expected = translate_content(base, Fraction(-i, gp.p))
            if residue_content(shift(lam, i, gp.p), lifted) != expected:
                witnesses.append((lam, i))
    return CheckReport(not witnesses, checked, witnesses)


def verify_shift_translation(n: int, gp: GrpnParams) -> CheckReport:
    """Check content(lam[i]) is content(lam) rotated by ``-i/p``, for ``q != 1``."""
    gp = _with_n(gp, n)
    lifted = lift_params(gp)
    if lifted.regime != "circle":
        raise ValueError("verify_shift_translation needs q != 1; use verify_shift_translation_q1")
    return _shift_translation(gp, lifted)


def verify_shift_translation_q1(n: int, gp: GrpnParams) -> CheckReport:
    """The ``q == 1`` analogue: the ``Q``-coordinate of each residue rotates by ``-i/p``."""
    gp = _with_n(gp, n)
    lifted = lift_params(gp)
    if lifted.regime == "circle":
        raise ValueError("verify_shift_translation_q1 needs q == 1")
    return _shift_translation(gp, lifted)


def verify_full_period_claim(n: int, gp: GrpnParams) -> CheckReport:
    """Every non-Gamma ``lam`` with period below ``p`` has a residue partner of full period."""
    gp = _with_n(gp, n)
    lifted = lift_params(gp)
    witnesses = []
    checked = 0
    for block in residue_classes(n, gp.r, lifted).classes:
        if len(block) == 1:
            continue
        full = any(orbit_period(mu, gp.p)[0] == gp.p for mu in block)
        for lam in block:
            if orbit_period(lam, gp.p)[0] != gp.p:
                checked += 1
                if not full:
                    witnesses.append(lam)
    return CheckReport(not witnesses, checked, witnesses)


def _with_n(gp: GrpnParams, n: int) -> GrpnParams:
    return gp if gp.n == n else GrpnParams(n, gp.r, gp.p, gp.h, gp.k)

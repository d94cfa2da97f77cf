"""Exact residues of nodes and residue equivalence of multipartitions.

Parameters are exact rationals; a rational ``t`` stands for the root of
unity ``exp(2*pi*i*t)``, so every comparison is exact equality in Q/Z.
"""

from __future__ import annotations

import math
import re
from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property
from fractions import Fraction
from typing import Iterable, Sequence, Union

import numpy as np

from . import _kernels
from .multipartition import Multipartition, Node, diagram, size

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$")


def parse_rational(text: str | int | Fraction) -> Fraction:
    """Parse ``"a/b"`` or ``"a"`` exactly.  Decimal strings are rejected."""
    if isinstance(text, (int, Fraction)):
        return Fraction(text)
    match = _RATIONAL_RE.match(text)
    if not match:
        raise ValueError(f"malformed rational: {text!r}")
    num, den = match.group(1), match.group(2)
    if den is not None and int(den) == 0:
        raise ValueError(f"zero denominator: {text!r}")
    return Fraction(int(num), int(den) if den is not None else 1)


def format_rational(value: Fraction) -> str:
    value = Fraction(value)
    return f"{value.numerator}/{value.denominator}"


@dataclass(frozen=True, order=True)
class RationalAngle:
    """An element ``t`` of Q/Z, kept reduced with ``0 <= t < 1``."""

    value: Fraction

    def __post_init__(self):
        v = Fraction(self.value)
        object.__setattr__(self, "value", v - math.floor(v))

    def __add__(self, other):
        return RationalAngle(self.value + _as_fraction(other))

    def __sub__(self, other):
        return RationalAngle(self.value - _as_fraction(other))

    def __neg__(self):
        return RationalAngle(-self.value)

    def __mul__(self, m: int):
        return RationalAngle(self.value * m)

    __rmul__ = __mul__

    def __str__(self):
        return format_rational(self.value)

    def __repr__(self):
        return f"RationalAngle({self})"

    @classmethod
    def parse(cls, text: str) -> "RationalAngle":
        return cls(parse_rational(text))


def _as_fraction(x) -> Fraction:
    return x.value if isinstance(x, RationalAngle) else Fraction(x)


@dataclass(frozen=True)
class Circle:
    """``q**(j-i) * Q_{k-1}`` for ``q != 1``."""

    angle: RationalAngle


@dataclass(frozen=True)
class PairQ1:
    """``(j-i, Q_{k-1})`` for ``q == 1`` with pairwise distinct ``Q``."""

    diag: int
    angle: RationalAngle


@dataclass(frozen=True)
class Bare:
    """``Q_{k-1}`` alone, the remaining case."""

    angle: RationalAngle


ResidueValue = Union[Circle, PairQ1, Bare]
ResidueContent = tuple[tuple[ResidueValue, int], ...]


def residue_sort_key(value: ResidueValue) -> tuple:
    if isinstance(value, Circle):
        return (0, 0, value.angle.value)
    if isinstance(value, PairQ1):
        return (1, value.diag, value.angle.value)
    return (2, 0, value.angle.value)


def residue_to_json(value: ResidueValue) -> dict:
    if isinstance(value, Circle):
        return {"case": "circle", "angle": str(value.angle)}
    if isinstance(value, PairQ1):
        return {"case": "pair_q1", "diag": value.diag, "angle": str(value.angle)}
    return {"case": "bare", "angle": str(value.angle)}


def residue_from_json(data: dict) -> ResidueValue:
    angle = RationalAngle.parse(data["angle"])
    case = data["case"]
    if case == "circle":
        return Circle(angle)
    if case == "pair_q1":
        return PairQ1(int(data["diag"]), angle)
    if case == "bare":
        return Bare(angle)
    raise ValueError(f"unknown residue case {case!r}")


def translate_residue(value: ResidueValue, delta) -> ResidueValue:
    """Rotate the ``Q``-angle (the whole angle for circle residues) by ``delta``."""
    if isinstance(value, Circle):
        return Circle(value.angle + delta)
    if isinstance(value, PairQ1):
        return PairQ1(value.diag, value.angle + delta)
    return Bare(value.angle + delta)


@dataclass(frozen=True)
class HeckeParamsG1:
    """Parameters ``h, k_1..k_{r-1}`` of the type G(r,1,n) algebra.

    ``q = exp(2 pi i h)`` and ``Q_m = exp(2 pi i (k_m + m/r))`` with ``k_0 = 0``.
    """

    r: int
    h: Fraction
    k: tuple[Fraction, ...] = field(default=())

    def __post_init__(self):
        if self.r < 1:
            raise ValueError("r must be positive")
        object.__setattr__(self, "h", parse_rational(self.h) if isinstance(self.h, str) else Fraction(self.h))
        ks = tuple(parse_rational(x) if isinstance(x, str) else Fraction(x) for x in self.k)
        if len(ks) != self.r - 1:
            raise ValueError(f"expected {self.r - 1} k-parameters, got {len(ks)}")
        object.__setattr__(self, "k", ks)

    @property
    def q_angle(self) -> RationalAngle:
        return RationalAngle(self.h)

    def Q_angle(self, m: int) -> RationalAngle:
        km = Fraction(0) if m == 0 else self.k[m - 1]
        return RationalAngle(km + Fraction(m, self.r))

    @cached_property
    def Q_angles(self) -> tuple[RationalAngle, ...]:
        return tuple(self.Q_angle(m) for m in range(self.r))

    @cached_property
    def regime(self) -> str:
        if self.q_angle.value != 0:
            return "circle"
        if len(set(self.Q_angles)) == self.r:
            return "pair_q1"
        return "bare"

    def to_dict(self) -> dict:
        return {"h": format_rational(self.h), "k": [format_rational(x) for x in self.k]}

    @classmethod
    def from_dict(cls, r: int, data: dict) -> "HeckeParamsG1":
        return cls(r, parse_rational(data["h"]), tuple(parse_rational(x) for x in data["k"]))


def residue(x: Node, params: HeckeParamsG1) -> ResidueValue:
    row, col, comp = x
    Q = params.Q_angles[comp - 1]
    regime = params.regime
    if regime == "circle":
        return Circle(Q + params.h * (col - row))
    if regime == "pair_q1":
        return PairQ1(col - row, Q)
    return Bare(Q)


def residue_content(mp: Multipartition, params: HeckeParamsG1) -> ResidueContent:
    """Multiset of node residues of ``mp`` in canonical sorted form."""
    if len(mp) != params.r:
        raise ValueError(f"multipartition has {len(mp)} components, parameters have r={params.r}")
    counts = Counter(residue(x, params) for x in diagram(mp))
    return tuple(sorted(counts.items(), key=lambda kv: residue_sort_key(kv[0])))


def translate_content(content: ResidueContent, delta) -> ResidueContent:
    counts: Counter = Counter()
    for value, mult in content:
        counts[translate_residue(value, delta)] += mult
    return tuple(sorted(counts.items(), key=lambda kv: residue_sort_key(kv[0])))


def residue_equivalent(lam: Multipartition, mu: Multipartition, params: HeckeParamsG1) -> bool:
    if len(lam) != len(mu) or size(lam) != size(mu):
        raise ValueError("residue equivalence compares multipartitions of the same size and rank")
    return residue_content(lam, params) == residue_content(mu, params)


def content_to_json(content: ResidueContent) -> list:
    return [[residue_to_json(v), c] for v, c in content]


def _is_prime(m: int) -> bool:
    if m < 2:
        return False
    return all(m % f for f in range(2, math.isqrt(m) + 1))


def primes_above(bound: int, count: int) -> list[int]:
    out = []
    m = bound + 1
    while len(out) < count:
        if _is_prime(m):
            out.append(m)
        m += 1
    return out


def generic_params(n: int, r: int) -> HeckeParamsG1:
    """Parameters under which residue content determines the multipartition.

    ``h`` and every ``k_m`` get distinct prime denominators larger than
    ``2*n*r``, so two circle residues agree only when they come from the same
    diagonal of the same component.
    """
    if n < 1 or r < 1:
        raise ValueError("need n, r >= 1")
    primes = primes_above(2 * n * r, r)
    return HeckeParamsG1(r, Fraction(1, primes[0]), tuple(Fraction(1, P) for P in primes[1:]))


# Batch path: integer residue codes through the kernel module.


def _integer_params(params: HeckeParamsG1):
    h = params.q_angle.value
    Qs = [a.value for a in params.Q_angles]
    modulus = math.lcm(h.denominator, *(q.denominator for q in Qs))
    h_num = int(h * modulus)
    q_nums = np.array([int(q * modulus) for q in Qs], dtype=np.int64)
    return modulus, h_num, q_nums


def node_arrays(mps: Sequence[Multipartition]):
    rows, cols, comps = [], [], []
    for mp in mps:
        for node in sorted(diagram(mp)):
            rows.append(node.row)
            cols.append(node.col)
            comps.append(node.comp)
    as_arr = lambda xs: np.asarray(xs, dtype=np.int64)
    return as_arr(rows), as_arr(cols), as_arr(comps)


_MODES = {"circle": _kernels.MODE_CIRCLE, "pair_q1": _kernels.MODE_PAIR_Q1, "bare": _kernels.MODE_BARE}


def content_codes(mps: Sequence[Multipartition], params: HeckeParamsG1, backend: str | None = None) -> np.ndarray:
    """Sorted integer residue codes, one row per multipartition.

    All of ``mps`` must have the same size ``n``.  Two rows are equal exactly
    when the residue contents are equal.
    """
    mps = list(mps)
    if not mps:
        return np.zeros((0, 0), dtype=np.int64)
    n = size(mps[0])
    if any(size(mp) != n or len(mp) != params.r for mp in mps):
        raise ValueError("content_codes needs multipartitions of one size and rank")
    if n == 0:
        return np.zeros((len(mps), 0), dtype=np.int64)
    modulus, h_num, q_nums = _integer_params(params)
    rows, cols, comps = node_arrays(mps)
    if backend is None:
        backend = _kernels.BACKEND
    if backend == "numba":
        if not _kernels.NUMBA_AVAILABLE:
            raise RuntimeError("numba backend requested but unavailable")
        codes = _kernels.residue_codes_numba(rows, cols, comps, h_num, q_nums, modulus, n, _MODES[params.regime])
        return _kernels.sorted_rows_numba(codes, n)
    codes = _kernels.residue_codes_numpy(rows, cols, comps, h_num, q_nums, modulus, n, _MODES[params.regime])
    return _kernels.sorted_rows_numpy(codes, n)


def group_by_content(mps: Iterable[Multipartition], params: HeckeParamsG1) -> list[list[Multipartition]]:
    """Partition ``mps`` into residue classes, preserving input order within and across classes."""
    mps = list(mps)
    codes = content_codes(mps, params)
    groups: dict[bytes, list[Multipartition]] = {}
    for mp, row in zip(mps, codes):
        groups.setdefault(row.tobytes(), []).append(mp)
    return list(groups.values())

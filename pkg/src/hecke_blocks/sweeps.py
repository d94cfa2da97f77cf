"""Parameter sweeps behind ``hecke-blocks verify``.

Parameters only matter modulo 1, so a sweep over ``max_den`` visits every
rational in ``[0, 1)`` with denominator at most ``max_den`` for ``h`` and for
each ``k``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Iterable, Iterator

from .blocks_r1 import verify_lm_agreement
from .clifford import (
    GrpnParams,
    lift_params,
    verify_full_period_claim,
    verify_shift_translation,
    verify_shift_translation_q1,
)
from .multipartition import to_nested
from .residue import HeckeParamsG1


def rationals_upto(max_den: int) -> list[Fraction]:
    return sorted({Fraction(a, b) for b in range(1, max_den + 1) for a in range(b)})


def g1_params(r: int, max_den: int) -> Iterator[HeckeParamsG1]:
    rats = rationals_upto(max_den)
    for h in rats:
        for ks in product(rats, repeat=r - 1):
            yield HeckeParamsG1(r, h, ks)


def grpn_params(n: int, r: int, p: int, max_den: int) -> Iterator[GrpnParams]:
    rats = rationals_upto(max_den)
    for h in rats:
        for ks in product(rats, repeat=r // p - 1):
            yield GrpnParams(n, r, p, h, ks)


def nontrivial_divisors(r: int) -> list[int]:
    return [p for p in range(2, r + 1) if r % p == 0]


@dataclass
class SweepResult:
    check: str
    instances: int = 0
    failures: list[dict] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_dict(self) -> dict:
        return {
            "kind": "verify",
            "check": self.check,
            "passed": self.passed,
            "instances": self.instances,
            "failures": self.failures,
        }


def _instance(n, r, params, p=None) -> dict:
    out = {"n": n, "r": r}
    if p is not None:
        out["p"] = p
    out["params"] = params.to_dict()
    return out


def lm_sweep(instances: Iterable[tuple[int, int, HeckeParamsG1]]) -> SweepResult:
    result = SweepResult("lm")
    for n, r, params in instances:
        result.instances += 1
        rep = verify_lm_agreement(n, r, params)
        if not rep.agree:
            result.failures.append(
                _instance(n, r, params)
                | {
                    "direction": rep.refinement_direction,
                    "split": [[to_nested(a), to_nested(b)] for a, b in rep.split_witnesses],
                    "violations": [[to_nested(a), to_nested(b)] for a, b in rep.violation_witnesses],
                }
            )
    return result


def lm_instances(max_n: int, max_r: int, max_den: int):
    for r in range(1, max_r + 1):
        for params in g1_params(r, max_den):
            for n in range(max_n + 1):
                yield n, r, params


def shift_sweep(instances: Iterable[GrpnParams]) -> SweepResult:
    """Runs the circle check for ``q != 1`` and the ``Q``-coordinate check for ``q == 1``."""
    result = SweepResult("shift")
    for gp in instances:
        result.instances += 1
        circle = lift_params(gp).regime == "circle"
        rep = verify_shift_translation(gp.n, gp) if circle else verify_shift_translation_q1(gp.n, gp)
        if not rep.passed:
            result.failures.append(
                _instance(gp.n, gp.r, gp, gp.p)
                | {"mode": "circle" if circle else "q1", "witnesses": [[to_nested(lam), i] for lam, i in rep.witnesses]}
            )
    return result


def claim_sweep(instances: Iterable[GrpnParams]) -> SweepResult:
    result = SweepResult("claim")
    for gp in instances:
        result.instances += 1
        rep = verify_full_period_claim(gp.n, gp)
        if not rep.passed:
            result.failures.append(
                _instance(gp.n, gp.r, gp, gp.p) | {"witnesses": [to_nested(lam) for lam in rep.witnesses]}
            )
    return result


def grpn_instances(max_n: int, rs: Iterable[int], max_den: int, ps: Iterable[int] | None = None, q_generic_only: bool = False):
    ps = None if ps is None else set(ps)
    for r in rs:
        for p in nontrivial_divisors(r):
            if ps is not None and p not in ps:
                continue
            for n in range(max_n + 1):
                for gp in grpn_params(n, r, p, max_den):
                    if q_generic_only and gp.h.denominator == 1:
                        continue
                    yield gp

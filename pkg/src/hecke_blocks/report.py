"""Block reports and their JSON/CSV/table renderings."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from typing import Any

from .multipartition import Multipartition, from_nested, multipartition_key, to_nested

CATEGORY_O_NOTE = (
    "Blocks are computed on the Hecke algebra side from residue combinatorics. "
    "The matching blocks of category O are given by the same label classes "
    "through the KZ functor; they are not computed independently here."
)


@dataclass
class BlockReport:
    """A partition of the label set into blocks.

    ``classes`` holds multipartitions for ``kind == "g_r1n"`` and
    :class:`~hecke_blocks.clifford.Label` values for ``kind == "g_rpn"``.
    """

    kind: str
    n: int
    r: int
    params: Any
    classes: list[list]
    gamma: list[Multipartition] = field(default_factory=list)
    p: int | None = None
    note: str = CATEGORY_O_NOTE

    @property
    def d(self) -> int | None:
        return None if self.p is None else self.r // self.p

    def labels(self) -> list:
        return [x for block in self.classes for x in block]

    def block_of(self, label) -> int:
        for idx, block in enumerate(self.classes):
            if label in block:
                return idx
        raise KeyError(label)

    def as_sets(self) -> set[frozenset]:
        return {frozenset(block) for block in self.classes}

    def to_dict(self) -> dict:
        out: dict[str, Any] = {"kind": self.kind, "n": self.n, "r": self.r}
        if self.kind == "g_rpn":
            out["p"] = self.p
            out["d"] = self.d
        out["params"] = self.params.to_dict()
        if self.kind == "g_r1n":
            out["blocks"] = [[to_nested(mp) for mp in block] for block in self.classes]
        else:
            out["blocks"] = [[label.to_dict() for label in block] for block in self.classes]
        out["gamma"] = [to_nested(mp) for mp in sorted(self.gamma, key=multipartition_key)]
        out["note"] = self.note
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict()) + "\n"

    @classmethod
    def from_dict(cls, data: dict) -> "BlockReport":
        from .clifford import GrpnParams, Label
        from .residue import HeckeParamsG1

        kind = data["kind"]
        n, r = data["n"], data["r"]
        gamma = [from_nested(x) for x in data.get("gamma", [])]
        if kind == "g_r1n":
            params = HeckeParamsG1.from_dict(r, data["params"])
            classes = [[from_nested(x) for x in block] for block in data["blocks"]]
            return cls(kind, n, r, params, classes, gamma, None, data.get("note", CATEGORY_O_NOTE))
        if kind == "g_rpn":
            p = data["p"]
            params = GrpnParams.from_dict(n, r, p, data["params"])
            classes = [[Label.from_dict(x, p) for x in block] for block in data["blocks"]]
            return cls(kind, n, r, params, classes, gamma, p, data.get("note", CATEGORY_O_NOTE))
        raise ValueError(f"unknown report kind {kind!r}")

    @classmethod
    def from_json(cls, text: str) -> "BlockReport":
        return cls.from_dict(json.loads(text))

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        gamma = set(self.gamma)
        if self.kind == "g_r1n":
            writer.writerow(["block", "multipartition", "in_gamma"])
            for idx, block in enumerate(self.classes):
                for mp in block:
                    writer.writerow([idx, json.dumps(to_nested(mp)), int(mp in gamma)])
        else:
            writer.writerow(["block", "rep", "j", "period", "d_lambda", "in_gamma"])
            for idx, block in enumerate(self.classes):
                for label in block:
                    writer.writerow(
                        [idx, json.dumps(to_nested(label.rep)), label.j, label.period, label.d_lambda, int(label.rep in gamma)]
                    )
        return buf.getvalue()

    def to_table(self) -> str:
        gamma = set(self.gamma)
        head = f"{self.kind}  n={self.n} r={self.r}"
        if self.p is not None:
            head += f" p={self.p} d={self.d}"
        lines = [head, f"params: {json.dumps(self.params.to_dict())}", f"{len(self.classes)} block(s)"]
        for idx, block in enumerate(self.classes):
            lines.append(f"block {idx} ({len(block)})")
            for x in block:
                if self.kind == "g_r1n":
                    tag = "  *" if x in gamma else ""
                    lines.append(f"  {_fmt_mp(x)}{tag}")
                else:
                    tag = "  *" if x.rep in gamma else ""
                    lines.append(f"  {_fmt_mp(x.rep)}<{x.j}>  period={x.period}{tag}")
        lines.append("* = member of Gamma (alone in its residue class)")
        lines.append(self.note)
        return "\n".join(lines) + "\n"


def _fmt_mp(mp: Multipartition) -> str:
    return "(" + ", ".join("(" + ",".join(map(str, c)) + ")" for c in mp) + ")"


def check_partition(classes: list[list], universe) -> None:
    """Raise ``AssertionError`` unless ``classes`` are disjoint, nonempty and cover ``universe``."""
    seen = []
    for block in classes:
        assert block, "empty block"
        seen.extend(block)
    assert len(seen) == len(set(seen)), "blocks overlap"
    assert set(seen) == set(universe), "blocks do not cover the label set"

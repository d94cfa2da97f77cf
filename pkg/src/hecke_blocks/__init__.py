"""Block classification for cyclotomic Hecke algebras of type G(r,1,n) and G(r,p,n)."""

from .blocks_r1 import gamma_set, jantzen_adjacent, jantzen_closure, residue_classes, verify_lm_agreement
from .clifford import (
    GrpnParams,
    Label,
    approx_equivalent,
    grpn_blocks,
    index_set,
    lift_params,
    orbit_period,
    shift,
    verify_full_period_claim,
    verify_shift_translation,
    verify_shift_translation_q1,
)
from .multipartition import (
    Node,
    RimHook,
    diagram,
    e_core,
    enumerate_multipartitions,
    enumerate_partitions,
    rim_hook_additions,
    rim_hook_removals,
)
from .report import BlockReport
from .residue import (
    Bare,
    Circle,
    HeckeParamsG1,
    PairQ1,
    RationalAngle,
    generic_params,
    residue,
    residue_content,
    residue_equivalent,
)

__version__ = "0.1.0"

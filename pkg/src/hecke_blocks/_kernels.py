"""Integer residue-code kernels.

Every residue angle of a fixed parameter set is a multiple of ``1/modulus``
for a common denominator ``modulus``, so residues become exact int64 codes.
The numba path is used when numba imports and ``HECKE_BLOCKS_DISABLE_NUMBA``
is unset; otherwise the vectorised numpy path runs.  Both return identical
arrays.
"""

from __future__ import annotations

import os

import numpy as np

MODE_CIRCLE = 0
MODE_PAIR_Q1 = 1
MODE_BARE = 2


def _numba_requested() -> bool:
    return os.environ.get("HECKE_BLOCKS_DISABLE_NUMBA", "").strip().lower() not in {"1", "true", "yes", "on"}


try:
    if not _numba_requested():
        raise ImportError("numba disabled by HECKE_BLOCKS_DISABLE_NUMBA")
    from numba import njit

    NUMBA_AVAILABLE = True
except ImportError:
    NUMBA_AVAILABLE = False


def residue_codes_numpy(rows, cols, comps, h_num, q_nums, modulus, diag_offset, mode):
    diag = cols - rows
    q = q_nums[comps - 1]
    if mode == MODE_CIRCLE:
        return (diag * h_num + q) % modulus
    if mode == MODE_PAIR_Q1:
        return (diag + diag_offset) * modulus + q
    return q.copy()


def sorted_rows_numpy(codes, width):
    return np.sort(codes.reshape(-1, width), axis=1)


if NUMBA_AVAILABLE:

    @njit(cache=True)
    def residue_codes_numba(rows, cols, comps, h_num, q_nums, modulus, diag_offset, mode):
        out = np.empty(rows.shape[0], dtype=np.int64)
        for t in range(rows.shape[0]):
            diag = cols[t] - rows[t]
            q = q_nums[comps[t] - 1]
            if mode == 0:
                out[t] = (diag * h_num + q) % modulus
            elif mode == 1:
                out[t] = (diag + diag_offset) * modulus + q
            else:
                out[t] = q
        return out

    @njit(cache=True)
    def sorted_rows_numba(codes, width):
        # Rows are short (one entry per node), so an in-place insertion sort
        # beats allocating a slice per row for np.sort.
        m = codes.shape[0] // width if width > 0 else 0
        out = codes[: m * width].copy().reshape(m, width)
        for a in range(m):
            for i in range(1, width):
                v = out[a, i]
                j = i - 1
                while j >= 0 and out[a, j] > v:
                    out[a, j + 1] = out[a, j]
                    j -= 1
                out[a, j + 1] = v
        return out

    residue_codes = residue_codes_numba
    sorted_rows = sorted_rows_numba
else:
    residue_codes_numba = None
    sorted_rows_numba = None
    residue_codes = residue_codes_numpy
    sorted_rows = sorted_rows_numpy

BACKEND = "numba" if NUMBA_AVAILABLE else "numpy"

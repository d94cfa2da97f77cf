"""Compare the numba and numpy residue-code kernels on one large batch.

    python benchmarks/bench_kernels.py --n 10 --r 3 --repeats 5
"""

import argparse
import json
import time
from fractions import Fraction

import numpy as np

from hecke_blocks import _kernels
from hecke_blocks.multipartition import enumerate_multipartitions
from hecke_blocks.residue import _MODES, HeckeParamsG1, _integer_params, content_codes, node_arrays


def best_of(fn, repeats):
    fn()  # warm-up, pays the numba compile
    times = []
    for _ in range(repeats):
        start = time.perf_counter()
        fn()
        times.append(time.perf_counter() - start)
    return min(times)


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--n", type=int, default=10)
    parser.add_argument("--r", type=int, default=3)
    parser.add_argument("--h", default="1/3")
    parser.add_argument("--repeats", type=int, default=5)
    parser.add_argument("--output", choices=["text", "json"], default="text")
    args = parser.parse_args(argv)

    params = HeckeParamsG1(args.r, Fraction(args.h), tuple(Fraction(m, 7) for m in range(1, args.r)))
    mps = enumerate_multipartitions(args.n, args.r)
    # Kernel-only timings use prebuilt node arrays; end-to-end includes building them.
    modulus, h_num, q_nums = _integer_params(params)
    arrays = node_arrays(mps)
    kernel_args = (*arrays, h_num, q_nums, modulus, args.n, _MODES[params.regime])

    def numpy_kernel():
        return _kernels.sorted_rows_numpy(_kernels.residue_codes_numpy(*kernel_args), args.n)

    def numba_kernel():
        return _kernels.sorted_rows_numba(_kernels.residue_codes_numba(*kernel_args), args.n)

    result = {
        "n": args.n,
        "r": args.r,
        "batch": len(mps),
        "numpy_kernel_s": best_of(numpy_kernel, args.repeats),
        "numpy_s": best_of(lambda: content_codes(mps, params, "numpy"), args.repeats),
    }
    if _kernels.NUMBA_AVAILABLE:
        result["numba_kernel_s"] = best_of(numba_kernel, args.repeats)
        result["numba_s"] = best_of(lambda: content_codes(mps, params, "numba"), args.repeats)
        result["kernel_speedup"] = result["numpy_kernel_s"] / result["numba_kernel_s"]
        result["speedup"] = result["numpy_s"] / result["numba_s"]
        same = np.array_equal(content_codes(mps, params, "numpy"), content_codes(mps, params, "numba"))
        result["identical"] = bool(same)
    else:
        result["numba_kernel_s"] = result["numba_s"] = None

    if args.output == "json":
        print(json.dumps(result, indent=2))
    else:
        print(f"batch of {result['batch']} multipartitions (n={args.n}, r={args.r})")
        print(f"{'':8}{'kernel':>12}{'end-to-end':>14}")
        print(f"{'numpy':8}{result['numpy_kernel_s'] * 1e3:9.2f} ms{result['numpy_s'] * 1e3:11.2f} ms")
        if result["numba_s"] is not None:
            print(f"{'numba':8}{result['numba_kernel_s'] * 1e3:9.2f} ms{result['numba_s'] * 1e3:11.2f} ms")
            print(f"kernel speedup x{result['kernel_speedup']:.2f}, end-to-end x{result['speedup']:.2f}, identical={result['identical']}")
        else:
            print("numba   unavailable or disabled")


if __name__ == "__main__":
    main()

"""Time the numba-jitted kernels against their pure-numpy fallbacks.

Run:  python3 benchmarks/bench_kernels.py

Covers the two hot loops (Gram power iteration, mod-p rank) plus an
end-to-end norm-equation sweep driven through whichever backend the
SINGIDEAL_NO_NUMBA flag selects for the current process.
"""

from __future__ import annotations

import random
import time

import numpy as np

from singideal import _kernels
from singideal.groupoid import build_coset_groupoid
from singideal.groups import conjugation_closure, subgroup_generated, symmetric_group
from singideal.norms import verify_norm_equation
from singideal.sampling import random_groupoid_function

P = _kernels.CERT_PRIME


def bench(label, fn, *args, repeat=5):
    fn(*args)  # warmup (and JIT compile)
    best = min(timeit(fn, args) for _ in range(repeat))
    print(f"{label:<38} {best * 1e3:9.2f} ms")
    return best


def timeit(fn, args):
    t0 = time.perf_counter()
    fn(*args)
    return time.perf_counter() - t0


def power_iteration_batch(impl, grams):
    for g in grams:
        impl(g, 1e-10, 10_000)


def rank_batch(impl, mats):
    for m in mats:
        impl(m.copy(), P)


def main():
    rng = np.random.default_rng(0)
    grams = []
    for _ in range(400):
        a = rng.normal(size=(24, 24))
        grams.append(np.ascontiguousarray(a.T @ a))
    mats = [rng.integers(0, 2, size=(256, 64)).astype(np.int64) for _ in range(60)]

    print(f"numba available: {_kernels.HAS_NUMBA}; active backend: "
          f"{'numba' if _kernels.USING_NUMBA else 'numpy'}")
    print()
    print("gram power iteration, 400 x 24x24:")
    t_np = bench("  numpy fallback", power_iteration_batch,
                 _kernels._gram_power_iteration_py, grams)
    if _kernels.HAS_NUMBA:
        t_nb = bench("  numba @njit", power_iteration_batch,
                     _kernels._gram_power_iteration_jit, grams)
        print(f"  speedup: {t_np / t_nb:.1f}x")
    print()
    print("mod-p rank, 60 x 256x64 0/1 matrices:")
    t_np = bench("  numpy fallback", rank_batch, _kernels._rank_mod_p_py, mats)
    if _kernels.HAS_NUMBA:
        t_nb = bench("  numba @njit", rank_batch, _kernels._rank_mod_p_jit, mats)
        print(f"  speedup: {t_np / t_nb:.1f}x")
    print()

    group = symmetric_group(3)
    t = next(g for g in group.elements() if group.element_order(g) == 2)
    family = conjugation_closure(group, [subgroup_generated(group, (t,))])
    groupoid = build_coset_groupoid(group, family)
    py_rng = random.Random(0)
    fns = [random_groupoid_function(py_rng, groupoid) for _ in range(100)]

    def norm_sweep():
        for f in fns:
            for subset in ([0], [1], [2], [0, 1], [0, 2], [1, 2]):
                verify_norm_equation(groupoid, subset, f)

    print("end-to-end norm-equation sweep (600 checks), active backend:")
    bench("  verify_norm_equation", norm_sweep)


if __name__ == "__main__":
    main()

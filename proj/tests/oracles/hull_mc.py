"""Independent numpy Monte Carlo for the hull penalty U0(N).

Uses numpy's PCG64 stream (unrelated to the library's counter-based
generator) and a full sort per column, so agreement with the C++ build is a
genuine cross-check. Prints U0 tables, U0 / Gaussian approximation ratios and
the envelope crossing index for beta in {0, 1, 2}.

Run: python3 tests/oracles/hull_mc.py [samples]
"""
import math
import sys

import numpy as np


def u0_from_column(col, s1sq):
    pos = np.sort(col[col > 0])
    thr = s1sq * col.size
    if pos.sum() <= thr:
        return 0.0
    suffix = np.cumsum(pos[::-1])[::-1]  # suffix[j] = sum_{i>=j} pos[i]
    # smallest j >= 1 with suffix[j] <= thr; U0 = pos[j-1]
    ok = np.nonzero(suffix <= thr)[0]
    if ok.size == 0:
        return float(pos[-1])
    j = ok[0]
    return float(pos[j - 1])


def hull(beta, n_max, samples, seed):
    rng = np.random.default_rng(seed)
    sig2 = np.arange(1, n_max + 1, dtype=float) ** (2 * beta)
    eta = np.zeros(samples)
    u0 = np.zeros(n_max)
    for n in range(n_max):
        xi = rng.standard_normal(samples)
        eta += sig2[n] * (xi * xi - 1.0)
        u0[n] = u0_from_column(eta, sig2[0])
    return u0, sig2


def main():
    samples = int(sys.argv[1]) if len(sys.argv) > 1 else 1_000_000
    for beta in (0, 1, 2):
        u0, sig2 = hull(beta, 100, samples, 20240 + beta)
        mono = np.maximum.accumulate(u0)
        big = np.cumsum(sig2 ** 2)
        gauss = np.sqrt(np.clip(2 * big * np.log(big / (math.pi * sig2[0] ** 2)), 0, None))
        u1 = np.sqrt(np.clip(np.log(big / (2 * math.pi * sig2[0] ** 2)), 0, None))
        small_u0 = mono / np.sqrt(2 * big)
        below = np.nonzero(small_u0 < u1)[0]
        n0 = int(below[-1]) + 2 if below.size else 1
        print(f"beta={beta}")
        print("  U0[1..12] =", np.round(u0[:12], 4).tolist())
        print("  U0[10]=%.6g U0[25]=%.6g U0[50]=%.6g U0[100]=%.6g" % (u0[9], u0[24], u0[49], u0[99]))
        r = mono[49:] / gauss[49:]
        print("  U0/gauss N>=50: min=%.4f max=%.4f" % (r.min(), r.max()))
        rho = 1 + 1.1 * mono / np.cumsum(sig2)
        print("  rho(alpha=0.1) N=1..16:", np.round(rho[:16], 3).tolist(), "rho100=%.4f" % rho[99])
        print("  envelope N0 =", n0, " margins at N0..:", np.round((small_u0 - u1)[n0 - 1:n0 + 4], 4).tolist())


if __name__ == "__main__":
    main()

"""Brute-force oracles for the deterministic goldens used by the C++ tests.

Run: python3 tests/oracles/closed_forms.py
"""
import math

from scipy import integrate


def threshold(beta, n_max=10_000):
    s2 = 0.0
    s4 = 0.0
    for k in range(1, n_max + 1):
        s2 += float(k) ** (2 * beta)
        s4 += float(k) ** (4 * beta)
        if s2 >= 2.0 * math.sqrt(2.0 * s4):
            return k
    return None


def family(a, W, m, eps, n):
    return [a * eps / (1.0 + (i / W) ** m) for i in range(1, n + 1)]


def projection_risk(theta, sigma2, N):
    return sum(t * t for t in theta[N:]) + sum(sigma2[:N])


def main():
    for beta in (0, 1, 2, 3):
        print(f"threshold beta={beta}: {threshold(beta)}")

    phi1 = math.exp(-0.5) / math.sqrt(2 * math.pi)
    val, err = integrate.quad(lambda x: (x * x - 1) * math.exp(-x * x / 2) / math.sqrt(2 * math.pi), 1, math.inf)
    print(f"2*int_1^inf (x^2-1)phi = {2*val:.12f} (2 phi(1) = {2*phi1:.12f})")

    theta = family(10, 6, 6, 1.0, 50)
    sigma2 = [float(k * k) for k in range(1, 51)]
    risks = [projection_risk(theta, sigma2, N) for N in range(1, 51)]
    best = min(range(50), key=lambda i: (risks[i], i))
    print(f"oracle theta^10 beta=1: argmin={best+1} min={risks[best]!r}")
    print("risks[0:8]=", [repr(r) for r in risks[:8]])


if __name__ == "__main__":
    main()

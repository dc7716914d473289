"""Independent re-derivation of the truncation indices in 50-digit arithmetic.

Shares nothing with the package except the rounding convention: values
within 1e-12 of an integer count as that integer before ceil/floor.
"""

import mpmath as mp

SNAP = mp.mpf("1e-12")


def _snap(v):
    r = mp.nint(v)
    return r if abs(v - r) <= SNAP else v


def ceil_(v):
    return int(mp.ceil(_snap(v)))


def floor_(v):
    return int(mp.floor(_snap(v)))


def rho(kappa):
    kappa = mp.mpf(kappa)
    if kappa >= 1 / (2 * mp.pi):
        return mp.asinh(1)
    s = 2 * mp.pi * kappa
    return mp.asinh(mp.sqrt(1 + mp.sqrt(1 - s * s)) / s)


def plan(alpha, beta, gamma, delta, d, h):
    """Return (n, m, N_minus, N_plus, M_minus, M_plus, feasible)."""
    with mp.workdps(50):
        alpha, beta, gamma, delta, d, h = (mp.mpf(v) for v in (alpha, beta, gamma, delta, d, h))
        mu, nu = min(alpha, beta), min(gamma, delta)
        n = ceil_(mp.log(2 * d / (nu * h)) / h)
        m = ceil_((n + mp.log(mu / nu) / h) / 2)
        ht = 2 * h
        if alpha <= beta:
            Mm, Mp = m, m - floor_(mp.log(beta / alpha) / ht)
        else:
            Mp, Mm = m, m - floor_(mp.log(alpha / beta) / ht)
        if gamma <= delta:
            Nm, Np = n, n - floor_(mp.log(delta / gamma) / h)
        else:
            Np, Nm = n, n - floor_(mp.log(gamma / delta) / h)
        feasible = (
            Mm * ht >= rho(alpha) and Mp * ht >= rho(beta) and Nm * h >= rho(gamma) and Np * h >= rho(delta)
        )
        return n, m, Nm, Np, Mm, Mp, bool(feasible)


def grid():
    """50 (params, h) cases: random exponents, exact ties and infeasible meshes."""
    import random

    rng = random.Random(20240601)
    cases = []
    for _ in range(30):
        a, b, g, dd = (rng.choice([0.05, 0.1, 0.25, 0.5, 1.0, 1.5, 2.0, 3.0]) for _ in range(4))
        d = rng.uniform(0.2, 1.5)
        h = rng.uniform(0.08, 0.9)
        cases.append(((a, b, g, dd, d), h))
    for a in (0.5, 1.0, 2.0):  # ties alpha == beta and gamma == delta
        for h in (0.1, 0.3):
            cases.append(((a, a, a, a, 1.0), h))
    cases.append(((1.0, 1.0, 0.5, 3.0, 1.0), 0.5))
    cases.append(((0.5, 1.0, 1.0, 0.5, 4.0 / 3.0), 0.5))
    for h in (0.8, 1.2, 2.5, 5.0, 10.0):  # infeasible: large h
        cases.append(((1.0, 1.0, 0.5, 3.0, 1.0), h))
    for h in (0.9, 1.5, 3.0, 4.5, 7.0, 12.0, 20.0):
        cases.append(((0.3, 2.0, 0.04, 1.0, 0.3), h))
    assert len(cases) == 50
    return cases

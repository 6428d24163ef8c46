"""Independent reference spectra used to validate the finite-element solver.

Two oracles, both deliberately disjoint from the FEM path:

* the classical round-sphere spectrum l(l+1) with multiplicity 2l+1;
* a one-dimensional shooting solve for the two-antipodal-branch-point
  problem, separated in the azimuth with half-integer mode numbers.

For the antipodal pair a section written as g(theta) e^{i mu phi} with
mu in Z + 1/2 satisfies

    -(sin(theta) g')' / sin(theta) + mu^2 g / sin(theta)^2 = lambda g

on (0, pi), with g ~ theta^{|mu|} at both poles. Each eigenvalue carries the
two azimuthal signs, so multiplicities come in pairs.
"""

from __future__ import annotations

import numpy as np
from scipy.integrate import solve_ivp
from scipy.optimize import brentq

from .errors import NotConverged


def untwisted_spectrum(l_max: int) -> list[tuple[float, int]]:
    """(eigenvalue, multiplicity) of the round-sphere Laplacian up to l_max."""
    return [(float(l * (l + 1)), 2 * l + 1) for l in range(l_max + 1)]


def _shoot_to_equator(lam: float, mu: float, theta0: float = 1e-8,
                      rtol: float = 1e-12, atol: float = 1e-14):
    """Integrate the radial system from the pole to theta = pi/2.

    State is (g, h) with h = sin(theta) g'; the pole start uses the leading
    asymptotics g ~ theta^mu.
    """

    def rhs(theta, y):
        g, h = y
        sin_t = np.sin(theta)
        return [h / sin_t, (mu * mu / sin_t - lam * sin_t) * g]

    g0 = theta0 ** mu
    h0 = mu * theta0 ** mu  # sin(theta0) * mu * theta0^(mu-1) to leading order
    sol = solve_ivp(rhs, (theta0, np.pi / 2), [g0, h0], rtol=rtol, atol=atol,
                    dense_output=False)
    if not sol.success:
        raise NotConverged(f"radial integration failed at lambda={lam}")
    return sol.y[0, -1], sol.y[1, -1]


def antipodal_radial_eigenvalues(mu: float, count: int,
                                 lam_max: float = 60.0) -> list[float]:
    """Eigenvalues of the half-integer radial problem by shooting.

    Mirror symmetry about the equator splits the spectrum into even branches
    (g'(pi/2) = 0) and odd branches (g(pi/2) = 0); both are scanned and the
    merged list is returned sorted.
    """
    found = []
    for parity in ("even", "odd"):
        def match(lam):
            g, h = _shoot_to_equator(lam, mu)
            # normalize to tame the exponential growth of the solution scale
            scale = max(abs(g), abs(h), 1e-300)
            return (h if parity == "even" else g) / scale

        grid = np.linspace(0.05, lam_max, 600)
        vals = [match(lam) for lam in grid]
        for a, b, fa, fb in zip(grid[:-1], grid[1:], vals[:-1], vals[1:]):
            if fa == 0.0:
                found.append(float(a))
            elif fa * fb < 0:
                found.append(float(brentq(match, a, b, xtol=1e-12, rtol=1e-14)))
    found.sort()
    return found[:count]


def antipodal_spectrum(count: int, mu_max: float = 4.5) -> list[tuple[float, int]]:
    """(eigenvalue, multiplicity) for the antipodal twisted problem.

    Each (|mu|, k) radial level appears for both azimuthal signs; accidental
    coincidences across different |mu| merge with summed multiplicity.
    """
    levels: list[float] = []
    mu = 0.5
    while mu <= mu_max:
        levels.extend(antipodal_radial_eigenvalues(mu, count))
        mu += 1.0
    levels.sort()
    merged: list[tuple[float, int]] = []
    for lam in levels:
        if merged and abs(lam - merged[-1][0]) < 1e-7 * max(1.0, lam):
            prev, m = merged[-1]
            merged[-1] = (prev, m + 2)
        else:
            merged.append((lam, 2))
    return merged[:count]

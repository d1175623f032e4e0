#      Minorforge builds dense minors of graphs with no independent set of size three.
#      Copyright (C) 2025 mldchan
#
#      This program is free software: you can redistribute it and/or modify
#      it under the terms of the GNU Affero General Public License as
#      published by the Free Software Foundation, either version 3 of the
#      License, or (at your option) any later version.
#
#      This program is distributed in the hope that it will be useful,
#      but WITHOUT ANY WARRANTY; without even the implied warranty of
#      MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
#      GNU Affero General Public License for more details.
#
#      You should have received a copy of the GNU Affero General Public License
#      along with this program.  If not, see <https://www.gnu.org/licenses/>.
#

"""Closed-form bounds on the number of edges a minor built by the pipeline misses.

Notation: the host graph has 2n vertices, the minor H has n, k is the clique
number, a counts complement edges at Z and b complement edges away from Z.
"""

import math
from dataclasses import dataclass
from typing import Callable, NamedTuple

import numpy as np

from utils.errors import DomainError, InvalidHypotheses, NonpositiveDenominator

INV_PHI = (math.sqrt(5) - 1) / 2
INV_PHI_SQUARE = (3 - math.sqrt(5)) / 2

Z_MAX = 0.25
IDENTITY_TOLERANCE = 1e-12


def p_value(n: int, k: int, b: int, lam: float) -> float:
    if n - 2 * k < 0:
        raise DomainError(f"n - 2k is negative (n={n}, k={k})")
    if 2 * n - k - 2 <= 0:
        raise NonpositiveDenominator("2n - k - 2 is not positive")
    denominator = n - (k + 1) / 2 - b / (2 * n - k - 2) - float(lam)
    if denominator <= 0:
        raise NonpositiveDenominator(f"p has denominator {denominator}")
    return (n - 2 * k) / denominator


def bound_J(n: int, k: int, a: int, b: int, lam: float) -> float:
    """Upper bound on the expected number of missing edges of H."""
    lam = float(lam)
    if lam * lam <= 2 * n:
        raise InvalidHypotheses("lambda_sq_gt_2n", "lambda^2 <= 2n")
    if 2 * n - k - 4 <= 0:
        raise InvalidHypotheses("2n_minus_k_minus_4_positive", "2n - k - 4 <= 0")
    try:
        p = p_value(n, k, b, lam)
    except (NonpositiveDenominator, DomainError) as e:
        raise InvalidHypotheses("p_defined", str(e)) from e

    quadruples = b * (k - 1) ** 2 * p * p / (4 * (2 * n - k - 2) * (2 * n - k - 4))
    triples = a * (k - 1) * p / (2 * (2 * n - k - 2))
    return (quadruples + triples) / (1 - 2 * n / (lam * lam))


def bound_J_substituted(n: int, z: float, zeta: float, lam: float) -> float:
    """bound_J / C(n, 2) after putting k = 2nz, a = 4n^2 zeta and the asymptotic b and p in."""
    k = 2 * n * z
    a = 4 * n * n * zeta
    b = 2 * n * n * ((1 - z) * z - zeta)
    p = (1 - 4 * z) / (1 - 2 * z + zeta / (1 - z))
    lam = float(lam)
    quadruples = b * (k - 1) ** 2 * p * p / (4 * (2 * n - k - 2) * (2 * n - k - 4))
    triples = a * (k - 1) * p / (2 * (2 * n - k - 2))
    return (quadruples + triples) / (1 - 2 * n / (lam * lam)) / (n * (n - 1) / 2)


# Asymptotic forms

def g_values(z, zeta):
    """Vectorised g(z, zeta) without domain checks."""
    z = np.asarray(z, dtype=float)
    zeta = np.asarray(zeta, dtype=float)
    numerator = z * (1 - 4 * z) * (z * z * (1 - 5 * z + 4 * z * z) + zeta * (4 - 13 * z + 12 * z * z)
                                   + 4 * zeta * zeta)
    return numerator / (1 + zeta - 3 * z + 2 * z * z) ** 2


def f_values(z):
    z = np.asarray(z, dtype=float)
    return z ** 3 * (5 - 38 * z + 92 * z * z - 80 * z ** 3) / (1 - 3 * z + 3 * z * z) ** 2


def _check_z(z: float):
    if not 0 <= z <= Z_MAX:
        raise DomainError(f"z={z} is outside [0, 1/4]")


def g_asymptotic(z: float, zeta: float) -> float:
    _check_z(z)
    if not 0 <= zeta <= z * z * (1 + IDENTITY_TOLERANCE):
        raise DomainError(f"zeta={zeta} is outside [0, z^2]")
    if 1 + zeta - 3 * z + 2 * z * z <= 0:
        raise DomainError("g has a non-positive denominator")
    return float(g_values(z, zeta))


def f_univariate(z: float) -> float:
    _check_z(z)
    return float(f_values(z))


# gamma

class GammaResult(NamedTuple):
    z_star: float
    gamma: float


def gss(f: Callable[[float], float], a: float, b: float, tol: float = 1e-5) -> tuple[float, float]:
    """Golden-section search for a minimum of f in [a, b].

    Returns a subinterval [c, d] holding the minimum, d - c <= tol.
    """
    a, b = min(a, b), max(a, b)
    h = b - a
    if h <= tol:
        return a, b

    steps = int(math.ceil(math.log(tol / h) / math.log(INV_PHI)))

    c = a + INV_PHI_SQUARE * h
    d = a + INV_PHI * h
    yc = f(c)
    yd = f(d)

    for _ in range(steps - 1):
        h = INV_PHI * h
        if yc < yd:
            b, d, yd = d, c, yc
            c = a + INV_PHI_SQUARE * h
            yc = f(c)
        else:
            a, c, yc = c, d, yd
            d = a + INV_PHI * h
            yd = f(d)

    return (a, d) if yc < yd else (c, b)


def gamma_optimize(tolerance: float = 1e-9, grid_points: int = 10_000) -> GammaResult:
    """Maximise f over [0, 1/4]: coarse grid, then golden-section around the best grid point."""
    if tolerance <= 0:
        raise DomainError("tolerance must be positive")
    grid = np.linspace(0.0, Z_MAX, grid_points + 1)
    best = int(np.argmax(f_values(grid)))
    low = grid[max(best - 1, 0)]
    high = grid[min(best + 1, grid_points)]

    left, right = gss(lambda z: -float(f_values(z)), low, high, tolerance)
    z_star = (left + right) / 2
    return GammaResult(z_star, 1 - f_univariate(z_star))


def zeta_monotonicity_check(grid_steps: int, g: Callable = g_values) -> bool:
    """True when g(z, .) never decreases along a grid of [0, z^2], for every grid z in [0, 1/4].

    `g` must accept numpy arrays.
    """
    if grid_steps < 2:
        raise DomainError("grid_steps must be at least 2")
    z = np.linspace(0.0, Z_MAX, grid_steps + 1)[:, None]
    fractions = np.linspace(0.0, 1.0, grid_steps + 1)[None, :]
    values = np.asarray(g(z, z * z * fractions), dtype=float)
    return bool(np.all(np.diff(values, axis=1) >= -IDENTITY_TOLERANCE))


# Reports

@dataclass
class BoundReport:
    n: int
    k: int
    a: int
    b: int
    lam: float
    p: float | None
    q: float
    rhs_J: float | None
    z: float
    zeta: float
    rhs_J2_fraction: float | None
    failed_flag: str | None = None

    def as_dict(self) -> dict:
        return dict(self.__dict__)


def bound_report(n: int, k: int, a: int, b: int, lam) -> BoundReport:
    lam = float(lam)
    q = 1 - 2 * n / (lam * lam) if lam > 0 else -math.inf
    z = k / (2 * n)
    zeta = a / (4 * n * n)

    try:
        p = p_value(n, k, b, lam)
    except (NonpositiveDenominator, DomainError):
        p = None

    rhs = None
    failed = None
    try:
        rhs = bound_J(n, k, a, b, lam)
    except InvalidHypotheses as e:
        failed = e.flag

    try:
        fraction = g_asymptotic(z, zeta)
    except DomainError:
        fraction = None

    return BoundReport(n, k, a, b, lam, p, q, rhs, z, zeta, fraction, failed)

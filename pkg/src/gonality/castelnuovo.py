"""Castelnuovo's and Halphen's genus bounds in exact integer arithmetic."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import ConsistencyError, DomainError

NONSPECIAL = "nonspecial"
INTERMEDIATE = "intermediate"
CASTELNUOVO = "castelnuovo"


@dataclass(frozen=True)
class SeriesPair:
    """Degree and dimension of a linear series g^r_d."""

    d: int
    r: int

    def __post_init__(self):
        if self.d < 1 or self.r < 1:
            raise DomainError(f"series g^{self.r}_{self.d} needs d >= 1 and r >= 1")


@dataclass(frozen=True)
class CastelnuovoData:
    d: int
    r: int
    chi: int
    epsilon: int
    pi: int | None = None
    regime: str | None = None


@dataclass(frozen=True)
class HalphenParams:
    d: int
    s: int
    k: int
    epsilon_h: int
    G: int


def _check_dr(d: int, r: int) -> None:
    if r < 2:
        raise DomainError(f"Castelnuovo bound needs r >= 2, got r={r}")
    if d <= r:
        raise DomainError(f"Castelnuovo bound needs d > r, got d={d}, r={r}")


def regime(d: int, r: int) -> str:
    if d < 2 * r:
        return NONSPECIAL
    if d < 3 * r - 1:
        return INTERMEDIATE
    return CASTELNUOVO


def decompose(d: int, r: int) -> CastelnuovoData:
    """Write ``d - 1 = chi*(r - 1) + epsilon`` with ``1 <= epsilon <= r - 1``.

    ``chi`` is the unique integer with ``(d-1)/(r-1) - 1 <= chi < (d-1)/(r-1)``.
    """
    _check_dr(d, r)
    chi = -(-(d - 1) // (r - 1)) - 1
    epsilon = d - 1 - chi * (r - 1)
    # re-check the defining inequality by cross multiplication
    if not ((d - 1) - (r - 1) <= chi * (r - 1) < d - 1 and 1 <= epsilon <= r - 1):
        raise ConsistencyError(f"bad decomposition chi={chi}, eps={epsilon} for ({d}, {r})")
    return CastelnuovoData(d, r, chi, epsilon)


def pi_bound(d: int, r: int) -> CastelnuovoData:
    """Castelnuovo's bound pi(d, r) on the genus of a curve with a simple g^r_d.

    >>> pi_bound(8, 3).pi
    9
    """
    base = decompose(d, r)
    chi, eps = base.chi, base.epsilon
    twice = chi * (chi - 1) * (r - 1)
    if twice % 2:
        raise ConsistencyError(f"chi(chi-1)(r-1) odd for ({d}, {r})")
    pi = twice // 2 + chi * eps
    tag = regime(d, r)
    if tag == NONSPECIAL and pi != d - r:
        raise ConsistencyError(f"pi({d},{r})={pi} but nonspecial shortcut gives {d - r}")
    if tag == INTERMEDIATE and pi != 2 * d - 3 * r + 1:
        raise ConsistencyError(f"pi({d},{r})={pi} but intermediate shortcut gives {2 * d - 3 * r + 1}")
    if (tag == CASTELNUOVO) != (chi >= 3):
        raise ConsistencyError(f"regime {tag} inconsistent with chi={chi} at ({d}, {r})")
    return CastelnuovoData(d, r, chi, eps, pi, tag)


def halphen_bound(d: int, s: int) -> HalphenParams:
    """Halphen's bound G(d, s) for space curves on no surface of degree < s.

    With ``d = k*s - eps``, ``0 <= eps < s``::

        G = d^2/(2s) + d(s-4)/2 + 1 - (eps/2)(s - 1 - eps + eps/s)
    """
    if s < 2:
        raise DomainError(f"Halphen bound needs s >= 2, got s={s}")
    if d <= s * (s - 1):
        raise DomainError(f"Halphen bound needs d > s(s-1) = {s * (s - 1)}, got d={d}")
    eps = (-d) % s
    k = (d + eps) // s
    G = (Fraction(d * d, 2 * s) + Fraction(d * (s - 4), 2) + 1
         - Fraction(eps, 2) * (s - 1 - eps + Fraction(eps, s)))
    if G.denominator != 1:
        raise ConsistencyError(f"G({d},{s}) = {G} is not an integer")
    return HalphenParams(d, s, k, eps, int(G))

"""The set C of genera of extremal curves of degree >= 3r - 1 in P^r.

``C = {pi(d, r) : r >= 2, chi(d, r) >= 3}``.  Membership is decided by
exhaustive search; the constructive witnesses follow the case analysis
that puts every even genus except 2, 4, 8, 14 into C.
"""
from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .castelnuovo import pi_bound
from .errors import ConsistencyError, DomainError

EXCLUDED_EVEN = (4, 8, 14)


@dataclass(frozen=True)
class GenusWitness:
    g: int
    witnesses: tuple[tuple[int, int], ...]

    def __post_init__(self):
        for d, r in self.witnesses:
            data = pi_bound(d, r)
            if r < 2 or d < 3 * r - 1 or data.pi != self.g:
                raise ConsistencyError(f"({d}, {r}) is not a witness for g={self.g}")

    @property
    def member(self) -> bool:
        return bool(self.witnesses)


@dataclass(frozen=True)
class ConstructiveCase:
    g: int
    tag: str
    witness: tuple[int, int] | None = None

    TAGS = ("even_mod6_0", "even_mod6_4", "even_mod6_2",
            "odd_composite", "odd_prime_square", "none")

    def __post_init__(self):
        if self.tag not in self.TAGS:
            raise ValueError(self.tag)
        if self.witness is not None:
            d, r = self.witness
            data = pi_bound(d, r)
            if data.chi < 3 or data.pi != self.g:
                raise ConsistencyError(f"constructive witness {self.witness} fails for g={self.g}")


def _check_g(g: int) -> None:
    if g < 3:
        raise DomainError(f"genus must be >= 3, got g={g}")


def factorize(n: int) -> list[int]:
    """Prime factors of ``n`` with multiplicity, ascending (2,3,5 wheel)."""
    if n < 1:
        raise DomainError(f"cannot factor {n}")
    out = []
    for p in (2, 3, 5):
        while n % p == 0:
            out.append(p)
            n //= p
    steps = (4, 2, 4, 2, 4, 6, 2, 6)
    p, i = 7, 0
    while p * p <= n:
        while n % p == 0:
            out.append(p)
            n //= p
        p += steps[i]
        i = (i + 1) % 8
    if n > 1:
        out.append(n)
    return out


def is_prime(n: int) -> bool:
    return n >= 2 and factorize(n) == [n]


def oracle_membership(g: int) -> GenusWitness:
    """All ``(d, r)`` with ``chi(d, r) >= 3`` and ``pi(d, r) = g``.

    Searches ``2 <= r <= g // 3`` and ``3r - 1 <= d <= g``; outside this box
    ``pi(d, r) >= 3r`` and ``pi(d, r) > d`` rule out equality.
    """
    _check_g(g)
    found = []
    for r in range(2, g // 3 + 1):
        for d in range(3 * r - 1, g + 1):
            data = pi_bound(d, r)
            if data.pi == g:
                found.append((d, r))
    return GenusWitness(g, tuple(found))


def oracle_table(g_min: int, g_max: int) -> dict[int, GenusWitness]:
    """Witnesses for every genus in ``[g_min, g_max]`` in one pass.

    Uses that ``pi(d, r)`` is increasing in ``d`` for ``d >= 3r - 1`` and
    exceeds ``d``; both facts are re-checked while enumerating.
    """
    _check_g(g_min)
    if g_max < g_min:
        raise DomainError(f"empty range [{g_min}, {g_max}]")
    found: dict[int, list[tuple[int, int]]] = {g: [] for g in range(g_min, g_max + 1)}
    r = 2
    while 3 * r <= g_max:
        prev = -1
        d = 3 * r - 1
        while True:
            pi = pi_bound(d, r).pi
            if pi <= prev or pi <= d:
                raise ConsistencyError(f"pi not increasing above d at ({d}, {r})")
            if pi > g_max:
                break
            if pi >= g_min:
                found[pi].append((d, r))
            prev = pi
            d += 1
        r += 1
    return {g: GenusWitness(g, tuple(w)) for g, w in found.items()}


def constructive_witness(g: int) -> ConstructiveCase:
    """Witness ``(d, r)`` from the explicit families, or tag ``none``.

    Case order: even multiples of 3 via ``(3r-1, r)``; ``g = 4 mod 6`` via
    ``(4r-2, r)``; ``g = 2 mod 6`` via ``(4r-1, r)``; odd ``g = p*alpha``
    with smallest prime ``p`` and ``4*alpha >= p(p+1)``; odd ``g = p^2``
    via ``(2p+2, 3)``.
    """
    _check_g(g)
    if g % 6 == 0:
        r = g // 3
        return ConstructiveCase(g, "even_mod6_0", (3 * r - 1, r))
    if g % 6 == 4 and (g + 2) // 6 >= 2:
        r = (g + 2) // 6
        return ConstructiveCase(g, "even_mod6_4", (4 * r - 2, r))
    if g % 6 == 2 and (g - 2) // 6 >= 3:
        r = (g - 2) // 6
        return ConstructiveCase(g, "even_mod6_2", (4 * r - 1, r))
    if g % 2 == 1:
        factors = factorize(g)
        if len(factors) >= 2:
            p = factors[0]
            alpha = g // p
            if 4 * alpha >= p * (p + 1):
                r = -(-2 * alpha // (p + 1)) + 1
                eps = alpha - (p - 1) * (r - 1) // 2
                if not 1 <= eps <= r - 1:
                    raise ConsistencyError(f"odd composite case gives eps={eps}, r={r} for g={g}")
                return ConstructiveCase(g, "odd_composite", (p * (r - 1) + 1 + eps, r))
            if factors == [p, p]:
                return ConstructiveCase(g, "odd_prime_square", (2 * p + 2, 3))
    return ConstructiveCase(g, "none")


@dataclass(frozen=True)
class GenusRow:
    g: int
    member: bool
    witnesses: tuple[tuple[int, int], ...]
    case: str
    case_witness: tuple[int, int] | None
    factors: tuple[int, ...]

    @property
    def distinct_primes(self) -> int:
        return len(set(self.factors))


@dataclass
class Classification:
    rows: list[GenusRow]
    checks: dict[str, bool] = field(default_factory=dict)
    failures: dict[str, list[int]] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(self.checks.values())

    def non_members(self) -> list[int]:
        return [row.g for row in self.rows if not row.member]


def _rows(bounds: tuple[int, int]) -> list[GenusRow]:
    lo, hi = bounds
    table = oracle_table(lo, hi)
    rows = []
    for g in range(lo, hi + 1):
        wit = table[g]
        case = constructive_witness(g)
        rows.append(GenusRow(g, wit.member, wit.witnesses, case.tag, case.witness,
                             tuple(factorize(g))))
    return rows


def _shards(lo: int, hi: int, n: int) -> list[tuple[int, int]]:
    n = max(1, min(n, hi - lo + 1))
    step = -(-(hi - lo + 1) // n)
    return [(a, min(a + step - 1, hi)) for a in range(lo, hi + 1, step)]


def classify_range(g_min: int, g_max: int, workers: int = 1) -> Classification:
    """Membership table for ``[g_min, g_max]`` plus checks of the claims on C.

    Checks: constructive witnesses are oracle members; every even
    non-member lies in {4, 8, 14} and those three are non-members; every
    odd non-member has at most two prime factors counted with
    multiplicity; ``p(p+2)`` is a non-member for twin primes ``p > 5``;
    no non-member is composite with three or more prime factors.
    """
    _check_g(g_min)
    if g_max < g_min:
        raise DomainError(f"empty range [{g_min}, {g_max}]")
    shards = _shards(g_min, g_max, workers)
    if workers > 1 and len(shards) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_rows, shards))
    else:
        parts = [_rows(s) for s in shards]
    rows = sorted((row for part in parts for row in part), key=lambda row: row.g)
    by_g = {row.g: row for row in rows}

    failures = {
        "constructive_sound": [r.g for r in rows if r.case_witness and not r.member],
        "even_non_members_excluded": [r.g for r in rows
                                      if r.g % 2 == 0 and not r.member and r.g not in EXCLUDED_EVEN],
        "exclusions_are_non_members": [g for g in EXCLUDED_EVEN if g in by_g and by_g[g].member],
        "odd_non_members_two_factors": [r.g for r in rows
                                        if r.g % 2 == 1 and not r.member and len(r.factors) > 2],
        "primes_are_non_members": [r.g for r in rows if len(r.factors) == 1 and r.member],
        "twin_prime_products": [],
    }
    p = 7
    while p * (p + 2) <= g_max:
        if is_prime(p) and is_prime(p + 2) and p * (p + 2) in by_g and by_g[p * (p + 2)].member:
            failures["twin_prime_products"].append(p * (p + 2))
        p += 2
    checks = {name: not bad for name, bad in failures.items()}
    return Classification(rows, checks, failures)


def prime_sieve(n: int) -> bytearray:
    """``sieve[k] == 1`` iff ``k`` is prime, for ``0 <= k <= n``."""
    sieve = bytearray([1]) * (n + 1)
    sieve[:2] = b"\x00\x00"[: min(2, n + 1)]
    for p in range(2, int(n ** 0.5) + 1):
        if sieve[p]:
            sieve[p * p::p] = bytes(len(range(p * p, n + 1, p)))
    return sieve


def pi_value_scan(r_max: int, d_max: int) -> dict[str, list[tuple[int, int]]]:
    """Pairs ``(d, r)`` with ``chi >= 3`` whose bound is prime or in {1, 4, 8, 14}."""
    values = [(d, r, pi_bound(d, r).pi)
              for r in range(2, r_max + 1) for d in range(3 * r - 1, d_max + 1)]
    sieve = prime_sieve(max((v for _, _, v in values), default=1))
    return {
        "prime": [(d, r) for d, r, v in values if sieve[v]],
        "excluded_value": [(d, r) for d, r, v in values if v in (1, 4, 8, 14)],
    }

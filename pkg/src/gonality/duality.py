"""Serre duality on linear series, sequence completion and validation."""
from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError
from .sequences import DUALITY, TAIL, GonalitySequence, general_bn_value


@dataclass(frozen=True)
class DualPair:
    d_dual: int
    r_dual: int


def dual_pair(g: int, d: int, r: int) -> DualPair:
    """Degree and dimension of ``|K - D|`` for a complete ``g^r_d``."""
    if g < 4:
        raise DomainError(f"genus must be >= 4, got g={g}")
    return DualPair(2 * g - 2 - d, g - 1 - d + r)


def check_prefix(g: int, known: dict[int, int]) -> None:
    """Raise :class:`DomainError` unless ``known`` is a valid sub-genus prefix."""
    if g < 4:
        raise DomainError(f"genus must be >= 4, got g={g}")
    if not known:
        raise DomainError("prefix must contain d_1")
    idx = sorted(known)
    if idx != list(range(1, len(idx) + 1)):
        raise DomainError(f"prefix indices must be 1..n without gaps, got {idx}")
    prev = 0
    for r in idx:
        d = known[r]
        if d >= g:
            raise DomainError(f"prefix value d_{r}={d} is not below g={g}")
        if d <= prev:
            raise DomainError(f"prefix not strictly increasing at r={r}")
        prev = d


def complete_sequence(g: int, known: dict[int, int], r_max: int) -> GonalitySequence:
    """Fill in ``d_r >= g`` from the values ``d_s < g`` by Serre duality.

    ``known`` must hold exactly the indices with ``d_r < g``.  Beyond it, a
    candidate ``d`` in ``[max(g, d_{r-1}+1), 2g-2]`` is admissible when the
    dual dimension ``r' = g-1-d+r`` is non-negative and ``d_{r'}`` fits into
    the dual degree ``2g-2-d`` (with ``d_0 = 0``).  The smallest admissible
    candidate wins, otherwise the non-special value ``g + r``.
    """
    check_prefix(g, known)
    if r_max < 1:
        raise DomainError(f"r_max must be >= 1, got {r_max}")
    r0 = len(known)

    def lookup(s: int) -> int | None:
        if s == 0:
            return 0
        return known.get(s)

    entries, prov = {}, {}
    prev = 0
    for r in range(1, r_max + 1):
        if r <= r0:
            entries[r] = prev = known[r]
            prov[r] = "fixture"
            continue
        best, tag = g + r, TAIL
        for d in range(max(g, prev + 1), 2 * g - 1):
            rd = g - 1 - d + r
            if rd < 0:
                break
            v = lookup(rd)
            if v is not None and v <= 2 * g - 2 - d:
                if d < best:
                    best, tag = d, DUALITY
                break
        entries[r] = prev = best
        prov[r] = tag
    return GonalitySequence(g, entries, prov)


@dataclass(frozen=True)
class Violation:
    rule: str
    indices: tuple[int, ...]
    detail: str

    def __str__(self):
        return f"{self.rule} at {self.indices}: {self.detail}"


def validate_sequence(seq: GonalitySequence, clifford: int | None = None,
                      plane: bool | None = None) -> list[Violation]:
    """Check a sequence against the general axioms; report, never raise.

    Unconditional rules: strict increase, subadditivity, additivity forcing
    ``d_n = n*d_1``, the upper bound ``g - [g/(r+1)] + r`` and the
    Riemann-Roch tails.  With ``clifford`` the lower bound
    ``min(gamma + 2r, g + r - 1)`` is checked; with ``plane=False`` the
    value ``d_{g-d_1} = 2g - 2 - d_1`` is.
    """
    g, e = seq.g, seq.entries
    out: list[Violation] = []
    idx = sorted(e)

    for a, b in zip(idx, idx[1:]):
        if e[a] >= e[b]:
            out.append(Violation("strict_increase", (a, b), f"d_{a}={e[a]} >= d_{b}={e[b]}"))

    for i, r in enumerate(idx):
        for s in idx[i:]:
            if r + s not in e:
                continue
            if e[r + s] > e[r] + e[s]:
                out.append(Violation("subadditivity", (r, s),
                                     f"d_{r + s}={e[r + s]} > d_{r}+d_{s}={e[r] + e[s]}"))
            elif e[r + s] == e[r] + e[s] and 1 in e:
                bad = [n for n in idx if n <= r + s and e[n] != n * e[1]]
                if bad:
                    out.append(Violation("additivity_forces_linear", (r, s),
                                         f"d_{r}+d_{s}=d_{r + s} but d_n != n*d_1 for n in {bad}"))

    if g >= 4:
        for r in idx:
            ub = general_bn_value(g, r)
            if e[r] > ub:
                out.append(Violation("upper_bound", (r,), f"d_{r}={e[r]} > {ub}"))

    for r in idx:
        if r >= g and e[r] != r + g:
            out.append(Violation("tail", (r,), f"d_{r}={e[r]} != r+g={r + g}"))
        elif 1 in e and g - e[1] < r < g and e[r] != r + g - 1:
            out.append(Violation("tail", (r,), f"d_{r}={e[r]} != r+g-1={r + g - 1}"))

    if clifford is not None:
        for r in idx:
            lb = min(clifford + 2 * r, g + r - 1)
            if e[r] < lb:
                out.append(Violation("clifford_lower_bound", (r,), f"d_{r}={e[r]} < {lb}"))

    if plane is False and 1 in e:
        k = g - e[1]
        if k >= 1 and k in e and e[k] != 2 * g - 2 - e[1]:
            out.append(Violation("dual_of_gonal_pencil", (k,),
                                 f"d_{k}={e[k]} != 2g-2-d_1={2 * g - 2 - e[1]}"))
    return out

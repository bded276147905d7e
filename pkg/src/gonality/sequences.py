"""Gonality sequences: the container type, closed forms and literal tables.

Every sequence is a finite map ``r -> d_r`` for ``r = 1..r_max`` with a
provenance tag per entry:

``fixture``  value copied from a published table
``formula``  closed-form expression for the family
``duality``  obtained from smaller values through Serre duality
``tail``     forced by Riemann-Roch once ``r`` is large enough
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .errors import DomainError

FIXTURE = "fixture"
FORMULA = "formula"
DUALITY = "duality"
TAIL = "tail"
PROVENANCES = (FIXTURE, FORMULA, DUALITY, TAIL)


@dataclass(frozen=True)
class FamilyDescriptor:
    """A named curve class with its parameters, e.g. ``plane(d=7)``."""

    kind: str
    params: tuple[tuple[str, int | str], ...] = ()

    KINDS = ("general", "plane", "pentagonal", "extremal", "quadric",
             "ci", "k3", "halphen", "fixture")

    def __post_init__(self):
        if self.kind not in self.KINDS:
            raise DomainError(f"unknown family kind {self.kind!r}")

    @classmethod
    def of(cls, kind: str, **params) -> FamilyDescriptor:
        return cls(kind, tuple(params.items()))

    def __str__(self):
        inner = ", ".join(f"{k}={v}" for k, v in self.params)
        return f"{self.kind}({inner})"


@dataclass
class GonalitySequence:
    """Genus plus finitely many values of the gonality sequence.

    No axioms are enforced here, so that invalid data can be handed to
    :func:`gonality.duality.validate_sequence` and reported on.
    """

    g: int
    entries: dict[int, int]
    provenance: dict[int, str] = field(default_factory=dict)
    family: FamilyDescriptor | None = None

    def __post_init__(self):
        self.entries = dict(sorted(self.entries.items()))
        for r in self.entries:
            if r < 1:
                raise DomainError(f"sequence index must be >= 1, got {r}")
            self.provenance.setdefault(r, FORMULA)
        extra = set(self.provenance) - set(self.entries)
        if extra:
            raise DomainError(f"provenance for missing indices {sorted(extra)}")
        for r, tag in self.provenance.items():
            if tag not in PROVENANCES:
                raise DomainError(f"unknown provenance {tag!r} at r={r}")

    def __getitem__(self, r: int) -> int:
        return self.entries[r]

    def __contains__(self, r: int) -> bool:
        return r in self.entries

    def __len__(self):
        return len(self.entries)

    @property
    def r_max(self) -> int:
        return max(self.entries, default=0)

    def values(self) -> list[int]:
        return list(self.entries.values())

    def is_consecutive(self) -> bool:
        return list(self.entries) == list(range(1, len(self.entries) + 1))

    def special_prefix(self) -> dict[int, int]:
        """Initial run of entries with ``d_r < g``."""
        out = {}
        for r in range(1, self.r_max + 1):
            if r not in self.entries or self.entries[r] >= self.g:
                break
            out[r] = self.entries[r]
        return out


@dataclass(frozen=True)
class NoetherIndex:
    r: int
    alpha: int
    beta: int


def _check_genus(g: int) -> None:
    if g < 4:
        raise DomainError(f"gonality sequences are considered for g >= 4, got g={g}")


def _check_rmax(r_max: int) -> None:
    if r_max < 1:
        raise DomainError(f"r_max must be >= 1, got {r_max}")


def general_bn_value(g: int, r: int) -> int:
    """``d_r = g - floor(g/(r+1)) + r`` for a Brill-Noether general curve."""
    _check_genus(g)
    if r < 1:
        raise DomainError(f"index must be >= 1, got r={r}")
    return g - g // (r + 1) + r


def general_sequence(g: int, r_max: int | None = None) -> GonalitySequence:
    r_max = 2 * g if r_max is None else r_max
    _check_rmax(r_max)
    entries = {r: general_bn_value(g, r) for r in range(1, r_max + 1)}
    return GonalitySequence(g, entries, family=FamilyDescriptor.of("general", g=g))


def noether_decompose(r: int) -> NoetherIndex:
    """Unique ``alpha >= 1``, ``0 <= beta <= alpha`` with ``r = alpha(alpha+3)/2 - beta``."""
    if r < 1:
        raise DomainError(f"index must be >= 1, got r={r}")
    # smallest alpha with alpha(alpha+3)/2 >= r; isqrt guess then fix up
    from math import isqrt
    alpha = max(1, (isqrt(8 * r + 9) - 3) // 2)
    while alpha * (alpha + 3) // 2 < r:
        alpha += 1
    while alpha > 1 and (alpha - 1) * (alpha + 2) // 2 >= r:
        alpha -= 1
    beta = alpha * (alpha + 3) // 2 - r
    return NoetherIndex(r, alpha, beta)


def plane_genus(d: int) -> int:
    return (d - 1) * (d - 2) // 2


def plane_curve_sequence(d: int, r_max: int | None = None) -> GonalitySequence:
    """Gonality sequence of a smooth plane curve of degree ``d >= 5`` (Noether).

    ``d_r = alpha*d - beta`` below the genus, ``r + g`` from the genus on.
    Defaults to ``r_max = g``.
    """
    if d < 5:
        raise DomainError(f"plane curve sequence needs d >= 5, got d={d}")
    g = plane_genus(d)
    r_max = g if r_max is None else r_max
    _check_rmax(r_max)
    entries = {}
    for r in range(1, r_max + 1):
        if r >= g:
            entries[r] = r + g
        else:
            n = noether_decompose(r)
            entries[r] = n.alpha * d - n.beta
    return GonalitySequence(g, entries, family=FamilyDescriptor.of("plane", d=d))


PENTAGONAL_MIN_GENUS = 11


def pentagonal_value(g: int, r: int) -> int:
    if g < PENTAGONAL_MIN_GENUS:
        raise DomainError(f"pentagonal formula used for g >= {PENTAGONAL_MIN_GENUS}, got g={g}")
    if r < 1:
        raise DomainError(f"index must be >= 1, got r={r}")
    # branch predicates evaluated per r; the middle one may be empty
    if r <= (g - 3) // 5:
        return 5 * r
    if 5 * r > g - 3 and r <= (g - 1) // 5:
        return -(-(5 * r + g - 3) // 2)
    if 5 * r > g - 1 and r <= g - 1:
        return r + g - 1 - (g - r - 1) // 4
    return r + g


def pentagonal_sequence(g: int, r_max: int | None = None) -> GonalitySequence:
    """Gonality sequence of a general pentagonal curve of genus ``g >= 11``."""
    r_max = 2 * g if r_max is None else r_max
    _check_rmax(r_max)
    entries = {r: pentagonal_value(g, r) for r in range(1, r_max + 1)}
    return GonalitySequence(g, entries, family=FamilyDescriptor.of("pentagonal", g=g))


def tail_values(g: int, d_1: int, r: int) -> int:
    """Values forced by Riemann-Roch: ``g + r`` for ``r >= g``,
    ``g + r - 1`` for ``g - d_1 < r < g``."""
    _check_genus(g)
    if r <= g - d_1:
        raise DomainError(f"no tail value for r={r} <= g - d_1 = {g - d_1}")
    return g + r if r >= g else g + r - 1


@dataclass(frozen=True)
class _Fixture:
    g: int
    table: dict[int, int]
    citation: str


# literal tables; values for larger r are filled from tail_values only
FIXTURES: dict[str, _Fixture] = {
    "extremal_8_3": _Fixture(
        9, {1: 4, 2: 7, 3: 8, 4: 11, 5: 12, 6: 14, 7: 15, 8: 16},
        "extremal curve of degree 8 in P^3, genus 9"),
    "quintic_quintic_quadric": _Fixture(
        16, {1: 5, 2: 9, 3: 10, 4: 14, 5: 15, 6: 18, 7: 19, 8: 20, 9: 23, 10: 24},
        "smooth curve of type (5,5) on a smooth quadric, genus 16"),
    "genus14_g13_4": _Fixture(
        14, {1: 8, 2: 10, 3: 12, 4: 13, 5: 16, 6: 18},
        "genus 14 curve with a g^4_13 computing Clifford index 5 (d_2 = 10 via trisecant lines)"),
    "tetragonal_g9": _Fixture(
        9, {1: 4, 2: 8, 3: 10, 4: 11, 5: 12, 6: 14, 7: 15, 8: 16},
        "general tetragonal curve of genus 9"),
    "bielliptic_g9": _Fixture(
        9, {1: 4, 2: 6, 3: 8, 4: 10, 5: 12, 6: 14, 7: 15, 8: 16},
        "bielliptic curve of genus 9"),
}


def fixture_citation(name: str) -> str:
    return _get_fixture(name).citation


def _get_fixture(name: str) -> _Fixture:
    try:
        return FIXTURES[name]
    except KeyError:
        raise DomainError(f"unknown fixture {name!r}; known: {', '.join(sorted(FIXTURES))}") from None


def fixture_sequence(name: str, r_max: int | None = None) -> GonalitySequence:
    """Published gonality table ``name``, extended by Riemann-Roch tails.

    Default ``r_max`` is the genus, or the last tabulated index when the
    tails do not reach back that far.  Asking for an index that is neither
    tabulated nor forced raises :class:`DomainError`.
    """
    fx = _get_fixture(name)
    g, table = fx.g, fx.table
    first_tail = g - table[1] + 1
    last = max(table)
    if r_max is None:
        r_max = g if first_tail <= last + 1 else last
    _check_rmax(r_max)
    entries, prov = {}, {}
    for r in range(1, r_max + 1):
        if r in table:
            entries[r], prov[r] = table[r], FIXTURE
        elif r >= first_tail:
            entries[r], prov[r] = tail_values(g, table[1], r), TAIL
        else:
            raise DomainError(f"fixture {name!r} has no value for r={r}")
    return GonalitySequence(g, entries, prov, FamilyDescriptor.of("fixture", name=name))

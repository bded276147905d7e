"""Known gonality facts for the curve families with explicit formulas.

Each generator returns a :class:`FamilyFacts` with degree, genus, the
values or bounds of ``d_r`` that are known for the family, the checked
hypotheses of the slope-violation criterion and its prediction.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .castelnuovo import halphen_bound, pi_bound
from .errors import ConsistencyError, DomainError
from .sequences import FamilyDescriptor, plane_curve_sequence, plane_genus
from .slope import HypothesisFailure, Lemma36Prediction, lemma36_check

EXISTS = "exists"


@dataclass
class FamilyFacts:
    descriptor: FamilyDescriptor
    d: int
    g: int
    # r -> d_r, or r -> (lower, upper) when only bounds are known
    known_values: dict[int, int | tuple[int, int]] = field(default_factory=dict)
    clifford: int | None = None
    predicted_violation: int | str | None = None
    hypothesis_report: list[tuple[str, bool]] = field(default_factory=list)
    prediction: Lemma36Prediction | None = None
    notes: list[str] = field(default_factory=list)

    def exact(self, r: int) -> int | None:
        v = self.known_values.get(r)
        return v if isinstance(v, int) else None


def _lemma36(facts: FamilyFacts, r: int, d_prev: int) -> Lemma36Prediction | None:
    """Record the criterion's hypotheses for the family's ``g^r_d``; predict if they hold."""
    d, g = facts.d, facts.g
    facts.hypothesis_report += [
        ("g >= 4", g >= 4),
        ("d >= 2r-1 >= 3", d >= 2 * r - 1 >= 3),
        ("d_{r-1} = d-1", d_prev == d - 1),
        ("2d <= g+3r-2", 2 * d <= g + 3 * r - 2),
    ]
    if g < 4:
        return None
    res = lemma36_check(g, d, r, d_prev)
    if isinstance(res, HypothesisFailure):
        facts.hypothesis_report += [(name, False) for name in res.failed if name == "r' >= r"]
        return None
    facts.prediction = res
    return res


def extremal_facts(d: int, r: int) -> FamilyFacts:
    """Extremal curve of degree ``d >= 3r - 1`` in ``P^r``."""
    if r < 2:
        raise DomainError(f"extremal curves need r >= 2, got r={r}")
    if d < 3 * r - 1:
        raise DomainError(f"extremal family needs d >= 3r-1 = {3 * r - 1}, got d={d}")
    data = pi_bound(d, r)
    chi, g = data.chi, data.pi
    facts = FamilyFacts(FamilyDescriptor.of("extremal", d=d, r=r), d, g)
    known = facts.known_values
    known[r - 1] = d - 1

    plane_alt = r == 5 and d % 2 == 0 and plane_genus(d // 2) == g
    if r == 2:
        gon: int | tuple[int, int] = d - 1
    elif (d - 1) % (r - 1):
        gon = chi + 1
    else:
        gon = (chi + 1, chi + 2)
    if plane_alt:
        lo = gon if isinstance(gon, int) else gon[0]
        hi = gon if isinstance(gon, int) else gon[1]
        gon = (min(lo, d // 2 - 1), max(hi, d // 2 - 1))
        facts.notes.append(f"may be a smooth plane curve of degree {d // 2} with gonality {d // 2 - 1}")
    if 1 in known and known[1] != gon:
        raise ConsistencyError(f"gonality clash for extremal ({d}, {r})")
    known[1] = gon

    if d == 3 * r - 1:
        if g != 3 * r:
            raise ConsistencyError(f"semicanonical genus {g} != 3r for r={r}")
        known[r] = g - 1
        known[r + 1] = g + 2
        if plane_alt:
            alt = plane_curve_sequence(d // 2, r + 1)[r + 1]
            known[r + 1] = (min(g + 2, alt), max(g + 2, alt))
            facts.notes.append(f"d_{r + 1} = g+2 unless plane, where it is {alt}")
        facts.predicted_violation = r
    else:
        facts.predicted_violation = EXISTS

    _lemma36(facts, r, d - 1)
    if facts.prediction is None:
        raise ConsistencyError(f"violation criterion does not apply to extremal ({d}, {r})")
    return facts


def quadric_facts(a: int, b: int) -> FamilyFacts:
    """Smooth curve of type ``(a, b)``, ``a <= b``, on a smooth quadric."""
    if a < 2 or a > b:
        raise DomainError(f"quadric type needs 2 <= a <= b, got ({a}, {b})")
    d, g = a + b, (a - 1) * (b - 1)
    facts = FamilyFacts(FamilyDescriptor.of("quadric", a=a, b=b), d, g)
    facts.known_values[1] = a
    facts.known_values[2] = 2 * a if a < b else d - 1
    if _lemma36(facts, 3, facts.known_values[2]):
        facts.predicted_violation = EXISTS
    return facts


def ci_inequality(s: int, p: int) -> int:
    """``ps(8 - p - s)``; the criterion needs it below 18, and it is even."""
    v = p * s * (8 - p - s)
    if v % 2:
        raise ConsistencyError(f"ps(8-p-s) odd at ({s}, {p})")
    return v


def ci_facts(s: int, p: int) -> FamilyFacts:
    """Smooth complete intersection of surfaces of degrees ``s <= p`` in ``P^3``."""
    if not 2 <= s <= p:
        raise DomainError(f"complete intersection needs 2 <= s <= p, got ({s}, {p})")
    d = p * s
    twice = p * s * (p + s - 4)
    g = twice // 2 + 1
    facts = FamilyFacts(FamilyDescriptor.of("ci", s=s, p=p), d, g)
    facts.known_values[2] = d - 1
    facts.hypothesis_report.append(("ps(8-p-s) <= 16", ci_inequality(s, p) <= 16))
    _lemma36(facts, 3, d - 1)
    if p >= 4:
        facts.predicted_violation = EXISTS
        if facts.prediction is None:
            raise ConsistencyError(f"criterion fails for complete intersection ({s}, {p})")
    return facts


def k3_facts(n: int, r: int) -> FamilyFacts:
    """Curve in ``|nH|`` on a general K3 surface of degree ``2r - 2`` in ``P^r``."""
    if n < 1 or r < 3:
        raise DomainError(f"K3 family needs n >= 1 and r >= 3, got ({n}, {r})")
    d = 2 * n * (r - 1)
    g = n * n * (r - 1) + 1
    facts = FamilyFacts(FamilyDescriptor.of("k3", n=n, r=r), d, g)
    if n >= 2:
        facts.clifford = d - 2 * r
        if facts.clifford != 2 * (n - 1) * (r - 1) - 2:
            raise ConsistencyError("Clifford index formulas disagree")
    facts.hypothesis_report.append(("d >= 8(r-1)", d >= 8 * (r - 1)))
    if n < 4:
        # d_{r-1} is not known below the threshold, so only the numeric conditions
        facts.hypothesis_report += [("d >= 2r-1 >= 3", d >= 2 * r - 1 >= 3),
                                    ("2d <= g+3r-2", 2 * d <= g + 3 * r - 2)]
    if n >= 4:
        facts.known_values[r - 1] = d - 1
        _lemma36(facts, r, d - 1)
        facts.predicted_violation = EXISTS
        if facts.prediction is None:
            raise ConsistencyError(f"criterion fails for K3 curve ({n}, {r})")
    return facts


def halphen_inequality(d: int, s: int) -> bool:
    """``d^2 + s(s-8)d + 18s > s^2(s-1)/4``, cleared of the denominator."""
    return 4 * (d * d + s * (s - 8) * d + 18 * s) > s * s * (s - 1)


def halphen_threshold(d: int, s: int) -> bool:
    return s >= 4 or (s == 2 and d >= 8) or (s == 3 and d >= 11)


def halphen_facts(d: int, s: int) -> FamilyFacts:
    """Halphen curve of degree ``d`` for the surface degree ``s``.

    The prediction follows the per-``s`` thresholds; the uniform
    ``d >= 11`` statement is reported as a separate hypothesis.
    """
    hp = halphen_bound(d, s)
    facts = FamilyFacts(FamilyDescriptor.of("halphen", d=d, s=s), d, hp.G)
    facts.known_values[2] = d - 1
    facts.hypothesis_report += [
        ("d^2+s(s-8)d+18s > s^2(s-1)/4", halphen_inequality(d, s)),
        ("g-1 > 2d-9", hp.G - 1 > 2 * d - 9),
        ("threshold: s>=4, or s=2 and d>=8, or s=3 and d>=11", halphen_threshold(d, s)),
        ("theorem: d >= 11", d >= 11),
    ]
    _lemma36(facts, 3, d - 1)
    if halphen_threshold(d, s):
        facts.predicted_violation = EXISTS
    return facts

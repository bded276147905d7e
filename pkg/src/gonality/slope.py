"""Slope inequalities ``d_r/r >= d_{r+1}/(r+1)``, compared by cross multiplication."""
from __future__ import annotations

from dataclasses import dataclass, field

from .errors import ConsistencyError, DomainError
from .sequences import GonalitySequence


@dataclass(frozen=True)
class SlopeComparison:
    r: int
    lhs: int  # (r+1) * d_r
    rhs: int  # r * d_{r+1}

    @property
    def satisfied(self) -> bool:
        return self.lhs >= self.rhs

    @property
    def strict(self) -> bool:
        return self.lhs > self.rhs


def slope_satisfied(r: int, d_r: int, d_next: int) -> SlopeComparison:
    if r < 1:
        raise DomainError(f"index must be >= 1, got r={r}")
    return SlopeComparison(r, (r + 1) * d_r, r * d_next)


@dataclass
class ViolationReport:
    g: int
    evidence: list[SlopeComparison] = field(default_factory=list)

    @property
    def indices(self) -> list[int]:
        return [c.r for c in self.evidence]

    def __bool__(self):
        return bool(self.evidence)


def slope_comparisons(seq: GonalitySequence) -> list[SlopeComparison]:
    return [slope_satisfied(r, seq[r], seq[r + 1]) for r in seq.entries if r + 1 in seq]


def find_violations(seq: GonalitySequence) -> ViolationReport:
    """All ``r`` with ``d_r/r < d_{r+1}/(r+1)``."""
    if not seq.is_consecutive():
        raise DomainError("slope analysis needs consecutive indices 1..r_max")
    return ViolationReport(seq.g, [c for c in slope_comparisons(seq) if not c.satisfied])


@dataclass(frozen=True)
class Lemma36Prediction:
    """Bounds ``d_{r'} <= d'`` and ``d_{r'+1} >= d' + 3`` around the dual index."""

    r_dual: int
    d_upper: int
    d_lower_next: int

    @property
    def violation_at(self) -> int:
        return self.r_dual

    @property
    def evidence(self) -> SlopeComparison:
        # worst case of the bounds still violates the inequality
        return slope_satisfied(self.r_dual, self.d_upper, self.d_lower_next)


@dataclass(frozen=True)
class HypothesisFailure:
    failed: tuple[str, ...]


def lemma36_check(g: int, d: int, r: int, d_prev: int) -> Lemma36Prediction | HypothesisFailure:
    """Predict a slope violation from a ``g^r_d`` with ``d_{r-1} = d - 1``.

    Hypotheses: ``d >= 2r - 1 >= 3``, ``d_{r-1} = d - 1`` and
    ``2d <= g + 3r - 2``.  If one fails the names of the failed
    hypotheses are returned instead of a prediction.
    """
    if g < 4 or r < 2:
        raise DomainError(f"need g >= 4 and r >= 2, got g={g}, r={r}")
    failed = []
    if not d >= 2 * r - 1 >= 3:
        failed.append("d >= 2r-1 >= 3")
    if d_prev != d - 1:
        failed.append("(1) d_{r-1} = d-1")
    if 2 * d > g + 3 * r - 2:
        failed.append("(2) 2d <= g+3r-2")
    if failed:
        return HypothesisFailure(tuple(failed))
    r_dual = g - 1 - d + r
    d_dual = 2 * g - 2 - d
    if r_dual < r:
        # the lemma derives r' >= r for an actual curve; these numbers admit none
        return HypothesisFailure(("r' >= r",))
    pred = Lemma36Prediction(r_dual, d_dual, d_dual + 3)
    if not d_dual < 3 * r_dual or pred.evidence.satisfied:
        raise ConsistencyError(f"lemma36 arithmetic failed at g={g}, d={d}, r={r}")
    return pred


@dataclass
class Prop414Report:
    g: int
    gamma: int
    r: int
    hypotheses: list[tuple[str, bool]]
    mismatches: list[int] = field(default_factory=list)
    violations: list[int] = field(default_factory=list)

    @property
    def hypotheses_hold(self) -> bool:
        return all(ok for _, ok in self.hypotheses)

    @property
    def violation_forced(self) -> bool:
        return self.hypotheses_hold and bool(self.mismatches)

    @property
    def conclusion(self) -> str:
        if not self.hypotheses_hold:
            failed = [name for name, ok in self.hypotheses if not ok]
            return "hypotheses fail: " + "; ".join(failed)
        if not self.mismatches:
            return "consistent: d_s = gamma + 2s for all s <= r"
        if self.violations:
            return f"slope violation forced; found at r in {self.violations}"
        return "slope violation forced; none among the supplied indices"


def prop414_check(g: int, gamma: int, r: int, seq: GonalitySequence) -> Prop414Report:
    """If ``g >= 2*gamma + r + 2`` and ``d_r = gamma + 2r`` then either
    ``d_s = gamma + 2s`` for all ``s <= r`` or some slope inequality fails."""
    missing = [s for s in range(1, r + 1) if s not in seq]
    if missing:
        raise DomainError(f"sequence lacks indices {missing}")
    hyp = [
        ("r >= 2", r >= 2),
        ("g >= 2*gamma + r + 2", g >= 2 * gamma + r + 2),
        ("d_r = gamma + 2r", seq[r] == gamma + 2 * r),
    ]
    rep = Prop414Report(g, gamma, r, hyp)
    if rep.hypotheses_hold:
        rep.mismatches = [s for s in range(1, r + 1) if seq[s] != gamma + 2 * s]
        if rep.mismatches and seq.is_consecutive():
            rep.violations = find_violations(seq).indices
    return rep

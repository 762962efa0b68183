"""Aggregation of labeling profiles.

Argument-wise plurality (AWPR), the sceptical/credulous initial operators,
the sceptical, credulous and super-credulous operators built on them, and a
per-argument supermajority rule.
"""

from __future__ import annotations

from collections.abc import Callable, Iterable
from dataclasses import dataclass
from typing import NamedTuple

from .algebra import down_admissible, up_complete
from .core import (
    IN,
    LABELS,
    OUT,
    UNDEC,
    ArgumentationError,
    ArgumentationFramework,
    Label,
    Labeling,
    _check_same,
    is_admissible,
    is_complete,
)

__all__ = [
    "IndividualRationalityError",
    "InvalidThreshold",
    "RuleUndefined",
    "LabelingProfile",
    "Counts",
    "TieFailure",
    "AggregationOutcome",
    "tally",
    "awpr",
    "sceptical_initial",
    "credulous_initial",
    "so",
    "co",
    "sco",
    "supermajority",
    "plurality_preference_threshold",
    "RULE_NAMES",
    "get_rule",
]


class IndividualRationalityError(ArgumentationError):
    """A voter's labeling is not complete and the profile requires it."""


class InvalidThreshold(ArgumentationError):
    """Supermajority quota outside ``floor(1 + N/2) .. N``."""


class RuleUndefined(ArgumentationError):
    """The rule has no outcome on this profile (AWPR tie)."""

    def __init__(self, tie: TieFailure):
        self.tie = tie
        super().__init__(f"tie on {', '.join(tie.arguments)}")


@dataclass(frozen=True)
class LabelingProfile:
    """One labeling per voter, all over the same framework.

    By default each labeling must be complete. Pass ``require_complete=False``
    to admit arbitrary labelings; so/co/sco then lose their completeness
    guarantees.
    """

    framework: ArgumentationFramework
    entries: tuple[tuple[str, Labeling], ...]
    require_complete: bool = True

    def __post_init__(self) -> None:
        object.__setattr__(self, "entries", tuple((str(v), lab) for v, lab in self.entries))
        if not self.entries:
            raise ArgumentationError("a profile needs at least one voter")
        ids = [v for v, _ in self.entries]
        if len(set(ids)) != len(ids):
            raise ArgumentationError("voter ids must be unique")
        for voter, lab in self.entries:
            _check_same(self.framework, lab)
            if self.require_complete and not is_complete(self.framework, lab):
                raise IndividualRationalityError(f"voter {voter} holds a non-complete labeling: {lab}")

    @classmethod
    def of(
        cls,
        framework: ArgumentationFramework,
        labelings: Iterable[Labeling],
        require_complete: bool = True,
    ) -> LabelingProfile:
        """Profile with synthetic voter ids ``v1 .. vN``."""
        entries = tuple((f"v{i}", lab) for i, lab in enumerate(labelings, 1))
        return cls(framework, entries, require_complete)

    @property
    def labelings(self) -> tuple[Labeling, ...]:
        return tuple(lab for _, lab in self.entries)

    @property
    def voters(self) -> tuple[str, ...]:
        return tuple(v for v, _ in self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def column(self, arg: str) -> tuple[Label, ...]:
        """Every voter's label on ``arg``, in voter order."""
        i = self.framework.index(arg)
        return tuple(lab.labels[i] for _, lab in self.entries)


class Counts(NamedTuple):
    in_: int
    out: int
    undec: int

    def of(self, label: Label | str) -> int:
        return self[LABELS.index(Label(label))]


VoteTally = dict[str, Counts]


def tally(profile: LabelingProfile) -> VoteTally:
    """Per argument, how many voters gave each label."""
    result: VoteTally = {}
    for arg in profile.framework.arguments:
        col = profile.column(arg)
        result[arg] = Counts(col.count(IN), col.count(OUT), col.count(UNDEC))
    return result


@dataclass(frozen=True)
class TieFailure:
    """Arguments with no strict plurality label, with their tallies."""

    tallies: tuple[tuple[str, Counts], ...]

    @property
    def arguments(self) -> tuple[str, ...]:
        return tuple(a for a, _ in self.tallies)

    def __str__(self) -> str:
        return "TIE: " + " ".join(self.arguments)


@dataclass(frozen=True)
class AggregationOutcome:
    result: Labeling | TieFailure

    @property
    def is_tie(self) -> bool:
        return isinstance(self.result, TieFailure)

    @property
    def labeling(self) -> Labeling:
        """The collective labeling; raises :class:`RuleUndefined` on a tie."""
        if isinstance(self.result, TieFailure):
            raise RuleUndefined(self.result)
        return self.result

    def __str__(self) -> str:
        return str(self.result)


def awpr(profile: LabelingProfile) -> AggregationOutcome:
    """Argument-wise plurality: each argument gets its strictly most frequent label."""
    labels: list[Label] = []
    ties: list[tuple[str, Counts]] = []
    for arg, counts in tally(profile).items():
        top = max(counts)
        winners = [lab for lab, c in zip(LABELS, counts) if c == top]
        if len(winners) > 1:
            ties.append((arg, counts))
        labels.append(winners[0])
    if ties:
        return AggregationOutcome(TieFailure(tuple(ties)))
    return AggregationOutcome(Labeling(profile.framework.arguments, tuple(labels)))


def sceptical_initial(profile: LabelingProfile) -> Labeling:
    """Keep in/out only where every voter agrees; undec elsewhere."""
    labels = []
    for arg in profile.framework.arguments:
        col = set(profile.column(arg))
        labels.append(col.pop() if col in ({IN}, {OUT}) else UNDEC)
    return Labeling(profile.framework.arguments, tuple(labels))


def credulous_initial(profile: LabelingProfile) -> Labeling:
    """Keep in (out) where some voter says so and nobody says the opposite."""
    labels = []
    for arg in profile.framework.arguments:
        col = set(profile.column(arg))
        if IN in col and OUT not in col:
            labels.append(IN)
        elif OUT in col and IN not in col:
            labels.append(OUT)
        else:
            labels.append(UNDEC)
    return Labeling(profile.framework.arguments, tuple(labels))


def so(profile: LabelingProfile) -> Labeling:
    """Sceptical operator: down-admissible of the sceptical initial labeling."""
    return down_admissible(profile.framework, sceptical_initial(profile))


def co(profile: LabelingProfile) -> Labeling:
    """Credulous operator: down-admissible of the credulous initial labeling."""
    return down_admissible(profile.framework, credulous_initial(profile))


def sco(profile: LabelingProfile) -> Labeling:
    """Super-credulous operator: up-complete of the credulous operator's result."""
    af = profile.framework
    lab = co(profile)
    # down_admissible always yields an admissible labeling
    assert is_admissible(af, lab), f"co produced a non-admissible labeling {lab}"
    return up_complete(af, lab)


def supermajority(profile: LabelingProfile, k: int) -> AggregationOutcome:
    """Per argument, the label with at least ``k`` votes, otherwise undec.

    ``k`` must lie in ``floor(1 + N/2) .. N``; ``k = N`` is unanimity and the
    lower bound is simple majority. Since ``k > N/2`` at most one label can
    qualify, so this rule never ties.
    """
    n = len(profile)
    if not (int(1 + 0.5 * n) <= k <= n):
        raise InvalidThreshold(f"k must be between {int(1 + 0.5 * n)} and {n}, got {k}")
    labels = []
    for counts in tally(profile).values():
        labels.append(next((lab for lab, c in zip(LABELS, counts) if c >= k), UNDEC))
    return AggregationOutcome(Labeling(profile.framework.arguments, tuple(labels)))


def plurality_preference_threshold(n: int, m: int, d_o: float) -> float:
    """Indecision cost above which plurality is the rational choice.

    With ``n`` voters of whom ``m`` are in the minority, and ``d_o`` the cost of
    defending a decision one opposed, plurality is preferable once the cost of
    defending an undecided verdict exceeds ``m / n * d_o``.
    """
    if n <= 0:
        raise ValueError("n must be positive")
    if not 0 <= m <= n:
        raise ValueError("m must lie between 0 and n")
    if d_o < 0:
        raise ValueError("d_o must be non-negative")
    return m * d_o / n


RULE_NAMES: tuple[str, ...] = ("awpr", "so", "co", "sco", "supermajority")


def get_rule(name: str, k: int | None = None) -> Callable[[LabelingProfile], Labeling]:
    """Rule by name, as a function returning the collective labeling.

    Raises :class:`RuleUndefined` when the rule has no outcome on a profile.
    """
    if name == "awpr":
        return lambda p: awpr(p).labeling
    if name == "supermajority":
        if k is None:
            raise InvalidThreshold("supermajority needs a quota k")
        return lambda p: supermajority(p, k).labeling
    table: dict[str, Callable[[LabelingProfile], Labeling]] = {"so": so, "co": co, "sco": sco}
    try:
        return table[name]
    except KeyError:
        raise ArgumentationError(f"unknown rule {name!r}; expected one of {RULE_NAMES}") from None


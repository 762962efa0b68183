"""Postulate checkers and exhaustive counterexample search.

Four postulates are checked on individual profiles:

* collective rationality -- the outcome is a complete labeling;
* compatibility -- no argument's outcome is in where some voter says out, or
  vice versa;
* unanimity -- a label every voter gives an argument is kept;
* independence -- two profiles that agree on an argument give it the same
  outcome.

:func:`search_violation` walks every profile of complete labelings over a fixed
catalog of small frameworks and returns the first counterexample it meets.
"""

from __future__ import annotations

import itertools
from collections.abc import Callable, Iterator, Sequence
from dataclasses import dataclass, field

from .algebra import labels_compatible
from .core import ArgumentationError, ArgumentationFramework, Labeling, enumerate_complete, is_admissible, is_complete
from .frameworks import catalog
from .rules import InvalidThreshold, LabelingProfile, RuleUndefined, get_rule

__all__ = [
    "POSTULATES",
    "Rule",
    "Witness",
    "PostulateReport",
    "check_collective_rationality",
    "check_admissibility",
    "check_compatibility",
    "check_unanimity",
    "check_independence",
    "search_violation",
    "postulate_matrix",
]

POSTULATES = ("collective_rationality", "compatibility", "unanimity", "independence")

# admissibility is the weaker rationality notion that the credulous operator meets
CHECKS = POSTULATES + ("admissibility",)


@dataclass(frozen=True)
class Rule:
    """An aggregation rule by name: ``awpr``, ``so``, ``co``, ``sco`` or ``supermajority`` with ``k``."""

    name: str
    k: int | None = None

    def __post_init__(self) -> None:
        get_rule(self.name, self.k)

    @classmethod
    def parse(cls, spec: str | Rule) -> Rule:
        """Accept ``Rule`` objects, ``"so"``, or ``"supermajority(6)"``."""
        if isinstance(spec, Rule):
            return spec
        spec = spec.strip()
        if spec.startswith("supermajority(") and spec.endswith(")"):
            return cls("supermajority", int(spec[len("supermajority(") : -1]))
        return cls(spec)

    def __call__(self, profile: LabelingProfile) -> Labeling:
        """Collective labeling; raises :class:`RuleUndefined` when there is none."""
        return get_rule(self.name, self.k)(profile)

    def __str__(self) -> str:
        return f"supermajority({self.k})" if self.name == "supermajority" else self.name


def _prepare(rule: Rule | str, af: ArgumentationFramework, profile: LabelingProfile) -> Labeling:
    if profile.framework != af:
        raise ArgumentationError("profile is over a different framework")
    return Rule.parse(rule)(profile)


def check_collective_rationality(rule: Rule | str, af: ArgumentationFramework, profile: LabelingProfile) -> bool:
    return is_complete(af, _prepare(rule, af, profile))


def check_admissibility(rule: Rule | str, af: ArgumentationFramework, profile: LabelingProfile) -> bool:
    return is_admissible(af, _prepare(rule, af, profile))


def _incompatible_arg(outcome: Labeling, profile: LabelingProfile) -> str | None:
    for arg in outcome.arguments:
        x = outcome[arg]
        if not all(labels_compatible(x, y) for y in profile.column(arg)):
            return arg
    return None


def _non_unanimous_arg(outcome: Labeling, profile: LabelingProfile) -> str | None:
    for arg in outcome.arguments:
        col = set(profile.column(arg))
        if len(col) == 1 and outcome[arg] not in col:
            return arg
    return None


def check_compatibility(rule: Rule | str, af: ArgumentationFramework, profile: LabelingProfile) -> bool:
    return _incompatible_arg(_prepare(rule, af, profile), profile) is None


def check_unanimity(rule: Rule | str, af: ArgumentationFramework, profile: LabelingProfile) -> bool:
    return _non_unanimous_arg(_prepare(rule, af, profile), profile) is None


def _independence_arg(
    o1: Labeling, o2: Labeling, p1: LabelingProfile, p2: LabelingProfile
) -> str | None:
    for arg in o1.arguments:
        if p1.column(arg) == p2.column(arg) and o1[arg] != o2[arg]:
            return arg
    return None


def check_independence(
    rule: Rule | str,
    af: ArgumentationFramework,
    profile_pair: tuple[LabelingProfile, LabelingProfile],
) -> bool:
    """Outcomes agree on every argument where both profiles have identical votes."""
    p1, p2 = profile_pair
    if len(p1) != len(p2):
        raise ArgumentationError("independence compares profiles with the same voters")
    return _independence_arg(_prepare(rule, af, p1), _prepare(rule, af, p2), p1, p2) is None


@dataclass(frozen=True)
class Witness:
    framework_name: str
    framework: ArgumentationFramework
    profiles: tuple[LabelingProfile, ...]
    argument: str | None = None


@dataclass(frozen=True)
class PostulateReport:
    rule: str
    postulate: str
    verdict: str  # "holds_on_tested_space" | "violated"
    witness: Witness | None = None
    profiles_checked: int = 0
    undefined: int = 0
    frameworks: tuple[str, ...] = field(default=())
    max_args: int = 0
    max_voters: int = 0

    @property
    def violated(self) -> bool:
        return self.verdict == "violated"

    def recheck(self) -> bool:
        """Re-run the check on the witness; True if the violation reproduces."""
        if self.witness is None:
            return False
        w = self.witness
        if self.postulate == "independence":
            return not check_independence(self.rule, w.framework, (w.profiles[0], w.profiles[1]))
        check = _SINGLE_CHECKS[self.postulate]
        return not check(self.rule, w.framework, w.profiles[0])

    def to_dict(self) -> dict:
        d = {
            "rule": self.rule,
            "postulate": self.postulate,
            "verdict": self.verdict,
            "profiles_checked": self.profiles_checked,
            "undefined": self.undefined,
            "frameworks": list(self.frameworks),
            "max_args": self.max_args,
            "max_voters": self.max_voters,
            "witness": None,
        }
        if self.witness is not None:
            w = self.witness
            d["witness"] = {
                "framework": w.framework_name,
                "argument": w.argument,
                "profiles": [[str(lab) for lab in p.labelings] for p in w.profiles],
            }
        return d


_SINGLE_CHECKS: dict[str, Callable[[Rule | str, ArgumentationFramework, LabelingProfile], bool]] = {
    "collective_rationality": check_collective_rationality,
    "admissibility": check_admissibility,
    "compatibility": check_compatibility,
    "unanimity": check_unanimity,
}


def _profiles(af: ArgumentationFramework, comp: Sequence[Labeling], n: int) -> Iterator[LabelingProfile]:
    for tup in itertools.product(comp, repeat=n):
        yield LabelingProfile.of(af, tup)


def _outcome(rule: Rule, profile: LabelingProfile) -> Labeling | None:
    try:
        return rule(profile)
    except (RuleUndefined, InvalidThreshold):
        return None


def _single_violation(postulate: str, af: ArgumentationFramework, out: Labeling, profile: LabelingProfile):
    """Return ``(violated, argument)`` for the one-profile checks."""
    if postulate == "collective_rationality":
        return not is_complete(af, out), None
    if postulate == "admissibility":
        return not is_admissible(af, out), None
    arg = _incompatible_arg(out, profile) if postulate == "compatibility" else _non_unanimous_arg(out, profile)
    return arg is not None, arg


def search_violation(
    rule: Rule | str,
    postulate: str,
    max_args: int = 4,
    max_voters: int = 3,
    frameworks: dict[str, ArgumentationFramework] | None = None,
) -> PostulateReport:
    """Exhaustively look for a profile (or pair) on which ``rule`` breaks ``postulate``.

    Frameworks come from :func:`argagg.frameworks.catalog` (in catalog order)
    restricted to at most ``max_args`` arguments; voters range over ``1 ..
    max_voters`` holding complete labelings, profiles in lexicographic order.
    Profiles where the rule is undefined are counted in ``undefined`` and skipped.
    """
    rule = Rule.parse(rule)
    if postulate not in CHECKS:
        raise ArgumentationError(f"unknown postulate {postulate!r}; expected one of {CHECKS}")
    pool = {name: af for name, af in (frameworks or catalog()).items() if len(af) <= max_args}
    checked = undefined = 0

    def report(witness: Witness | None) -> PostulateReport:
        return PostulateReport(
            rule=str(rule),
            postulate=postulate,
            verdict="violated" if witness else "holds_on_tested_space",
            witness=witness,
            profiles_checked=checked,
            undefined=undefined,
            frameworks=tuple(pool),
            max_args=max_args,
            max_voters=max_voters,
        )

    for name, af in pool.items():
        comp = enumerate_complete(af)
        for n in range(1, max_voters + 1):
            if postulate == "independence":
                profiles = list(_profiles(af, comp, n))
                outcomes = [_outcome(rule, p) for p in profiles]
                checked += len(profiles)
                undefined += sum(o is None for o in outcomes)
                hit = _first_independence_violation(af, profiles, outcomes)
                if hit is not None:
                    i, j, arg = hit
                    return report(Witness(name, af, (profiles[i], profiles[j]), arg))
                continue
            for profile in _profiles(af, comp, n):
                checked += 1
                out = _outcome(rule, profile)
                if out is None:
                    undefined += 1
                    continue
                bad, arg = _single_violation(postulate, af, out, profile)
                if bad:
                    return report(Witness(name, af, (profile,), arg))
    return report(None)


def _first_independence_violation(
    af: ArgumentationFramework,
    profiles: list[LabelingProfile],
    outcomes: list[Labeling | None],
) -> tuple[int, int, str] | None:
    """Lexicographically first pair ``i < j`` that breaks independence."""
    buckets: dict[tuple[str, tuple], list[int]] = {}
    for idx, p in enumerate(profiles):
        if outcomes[idx] is None:
            continue
        for arg in af.arguments:
            buckets.setdefault((arg, p.column(arg)), []).append(idx)
    for i, p in enumerate(profiles):
        oi = outcomes[i]
        if oi is None:
            continue
        best: tuple[int, str] | None = None
        for arg in af.arguments:
            for j in buckets[(arg, p.column(arg))]:
                if j > i and outcomes[j][arg] != oi[arg]:
                    if best is None or j < best[0]:
                        best = (j, arg)
                    break
        if best is not None:
            return i, best[0], best[1]
    return None


def postulate_matrix(
    rules: Sequence[Rule | str] = ("awpr", "so", "co", "sco"),
    max_args: int = 4,
    max_voters: int = 3,
    frameworks: dict[str, ArgumentationFramework] | None = None,
) -> dict[str, dict[str, PostulateReport]]:
    """Search every (rule, postulate) cell.

    The credulous operator's rationality cell is tested for admissibility
    rather than completeness, since that operator is only meant to return an
    admissible labeling.
    """
    matrix: dict[str, dict[str, PostulateReport]] = {}
    for r in rules:
        r = Rule.parse(r)
        row = {}
        for post in POSTULATES:
            target = "admissibility" if (r.name == "co" and post == "collective_rationality") else post
            row[post] = search_violation(r, target, max_args, max_voters, frameworks)
        matrix[str(r)] = row
    return matrix

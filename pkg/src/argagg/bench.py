"""Vignette scenarios, their vote profiles, and the plurality-vs-SSCO contrast.

Each scenario is a committee of ten deciding on a conclusion ``A``. The simple
scenarios use three arguments (B defeats A, B and C defeat each other); the
complex ones add a second counterargument D with its own rebuttal E. Voters
either reject every counterargument to ``A`` (the majority, by default) or
accept them all.
"""

from __future__ import annotations

import itertools
import math
from collections.abc import Mapping, Sequence
from dataclasses import dataclass, field

from .core import IN, OUT, UNDEC, ArgumentationError, ArgumentationFramework, Label, Labeling, enumerate_complete
from .frameworks import complex_af, simple_af
from .rules import AggregationOutcome, LabelingProfile, TieFailure, awpr, co, sco, so

__all__ = [
    "UnknownScenario",
    "Scenario",
    "VoteRatio",
    "PAPER_RATIOS",
    "FRAMINGS",
    "SCENARIO_IDS",
    "build_scenario",
    "extend_ballot",
    "build_profile",
    "example_one",
    "Replication",
    "replicate",
    "replicate_all",
    "DivergenceCensus",
    "divergence_census",
]


class UnknownScenario(ArgumentationError):
    pass


@dataclass(frozen=True)
class Scenario:
    id: str
    framework: ArgumentationFramework
    conclusion: str
    harm: bool
    conclusion_text: str
    fallback_text: str
    arguments_text: Mapping[str, str] = field(default_factory=dict, compare=False)

    @property
    def counterarguments(self) -> tuple[str, ...]:
        """Arguments that directly defeat the conclusion."""
        return self.framework.attackers[self.conclusion]


# Wording shown to participants; no computational effect.
FRAMINGS: dict[str, str] = {
    "baseline": "",
    "reminder": "States the practical consequence of accepting the conclusion.",
    "defense": "Every committee member is expected to support and defend the decision.",
    "responsibility": "If the decision proves wrong, every member shares responsibility.",
}

_SCENARIOS: dict[str, tuple[str, bool, str, str, dict[str, str]]] = {
    "flu": (
        "simple",
        False,
        "the government should stock up on medicines against the Mexican flu",
        "the decision is postponed for further investigation",
        {
            "A": "A virologist calls the flu a threatening pandemic, so stock up on medicines.",
            "B": "Journalists report the expert has a financial interest in drug makers.",
            "C": "His employer reports he has no such financial interest.",
        },
    ),
    "uniform": (
        "simple",
        True,
        "the school should have a uniform",
        "the decision is deferred to the school principal",
        {
            "A": "Attendance rose after another school introduced a uniform.",
            "B": "Other factors may explain that rise; their case may differ.",
            "C": "Both schools share entry standards and family backgrounds.",
        },
    ),
    "hiring": (
        "simple",
        False,
        "the candidate is worthy of a good offer",
        "the decision is postponed to get further reference letters",
        {
            "A": "The former adviser wrote a strong recommendation.",
            "B": "The adviser benefits from placing her student well.",
            "C": "The adviser risks her credibility by overselling.",
        },
    ),
    "stephen": (
        "complex",
        True,
        "there is evidence against Stephen",
        "the decision is deferred to the judge",
        {
            "A": "A witness saw Stephen near the crime scene.",
            "B": "It was dark, so the witness may have mistaken someone else.",
            "C": "The parking area is well lit.",
            "D": "The witness hates Stephen and is biased.",
            "E": "The witness did not know Stephen well and is unbiased.",
        },
    ),
    "excursion": (
        "complex",
        False,
        "the next summer excursion should be to Niagara Falls",
        "the decision is deferred to senior management",
        {
            "A": "The travel agent recommended Niagara Falls.",
            "B": "The agent has never been there.",
            "C": "The agent has organised many trips there.",
            "D": "The agent only cited Niagara Falls as an example of nature trips.",
            "E": "The agent specifically recommended Niagara Falls.",
        },
    ),
    "marconi": (
        "complex",
        True,
        "Marconi should be banned for three matches",
        "the decision is postponed for further investigation",
        {
            "A": "Marconi criticised the referee; Borello was banned three matches for that.",
            "B": "Borello did it in a press conference, a different case.",
            "C": "The cases are similar in what matters.",
            "D": "Zotti criticised a referee and went unpunished.",
            "E": "Zotti's criticism was less direct.",
        },
    ),
}

SCENARIO_IDS: tuple[str, ...] = tuple(_SCENARIOS)


def build_scenario(scenario_id: str) -> Scenario:
    try:
        kind, harm, concl, fallback, texts = _SCENARIOS[scenario_id]
    except KeyError:
        raise UnknownScenario(f"unknown scenario {scenario_id!r}; expected one of {SCENARIO_IDS}") from None
    af = simple_af() if kind == "simple" else complex_af()
    return Scenario(scenario_id, af, "A", harm, concl, fallback, dict(texts))


@dataclass(frozen=True)
class VoteRatio:
    majority: int
    minority: int

    def __post_init__(self) -> None:
        if self.minority < 0 or self.majority <= 0:
            raise ArgumentationError("vote counts must be non-negative, majority positive")
        if self.majority <= self.minority:
            raise ArgumentationError("majority must exceed minority")

    @classmethod
    def parse(cls, text: str) -> VoteRatio:
        try:
            a, b = text.split(":")
            return cls(int(a), int(b))
        except ValueError:
            raise ArgumentationError(f"bad vote ratio {text!r}, expected e.g. 6:4") from None

    @property
    def total(self) -> int:
        return self.majority + self.minority

    def __str__(self) -> str:
        return f"{self.majority}:{self.minority}"


PAPER_RATIOS = (VoteRatio(6, 4), VoteRatio(9, 1))


def extend_ballot(af: ArgumentationFramework, votes: Mapping[str, Label | str]) -> Labeling:
    """The unique complete labeling agreeing with a partial ballot."""
    votes = {a: Label(v) for a, v in votes.items()}
    matches = [lab for lab in enumerate_complete(af) if all(lab[a] is v for a, v in votes.items())]
    if len(matches) != 1:
        raise ArgumentationError(f"ballot {votes} extends to {len(matches)} complete labelings, expected 1")
    return matches[0]


def _ballots(scenario: Scenario) -> tuple[Labeling, Labeling]:
    """(rejects every counterargument, accepts every counterargument)."""
    af = scenario.framework
    pro: dict[str, Label] = {}
    for b in scenario.counterarguments:
        pro[b] = OUT
        for c in af.attackers[b]:
            pro[c] = IN
    con = {a: (OUT if v is IN else IN) for a, v in pro.items()}
    return extend_ballot(af, pro), extend_ballot(af, con)


def build_profile(scenario: Scenario, ratio: VoteRatio, polarity: str = "pro") -> LabelingProfile:
    """Vignette profile: ``ratio.majority`` voters on one ballot, the rest on the other.

    With ``polarity="pro"`` the majority rejects every counterargument to the
    conclusion; ``"con"`` hands the majority to the opposite ballot.
    """
    pro, con = _ballots(scenario)
    if polarity == "con":
        pro, con = con, pro
    elif polarity != "pro":
        raise ArgumentationError(f"polarity must be 'pro' or 'con', got {polarity!r}")
    return LabelingProfile.of(scenario.framework, [pro] * ratio.majority + [con] * ratio.minority)


def example_one() -> LabelingProfile:
    """The suspect example: six jurors accept B and reject C, four the reverse."""
    af = simple_af()
    return LabelingProfile.of(
        af,
        [af.labeling({"A": OUT, "B": IN, "C": OUT})] * 6 + [af.labeling({"A": IN, "B": OUT, "C": IN})] * 4,
    )


@dataclass(frozen=True)
class Replication:
    scenario: Scenario
    ratio: VoteRatio
    polarity: str
    awpr: AggregationOutcome
    so: Labeling
    co: Labeling
    sco: Labeling

    def conclusion(self) -> dict[str, str]:
        """Each rule's label on the conclusion argument (``"tie"`` if AWPR is undefined)."""
        a = self.scenario.conclusion
        res = self.awpr.result
        return {
            "awpr": "tie" if isinstance(res, TieFailure) else res[a].value,
            "so": self.so[a].value,
            "co": self.co[a].value,
            "sco": self.sco[a].value,
        }

    @property
    def matches_vignette(self) -> bool:
        """Plurality decides the conclusion while every SSCO stays undecided."""
        c = self.conclusion()
        expected = IN.value if self.polarity == "pro" else OUT.value
        return c["awpr"] == expected and all(c[r] == UNDEC.value for r in ("so", "co", "sco"))

    def to_dict(self) -> dict:
        return {
            "scenario": self.scenario.id,
            "ratio": str(self.ratio),
            "polarity": self.polarity,
            "harm": self.scenario.harm,
            "conclusion_argument": self.scenario.conclusion,
            "conclusion": self.conclusion(),
            "labelings": {
                "awpr": str(self.awpr.result),
                "so": str(self.so),
                "co": str(self.co),
                "sco": str(self.sco),
            },
        }


def replicate(scenario: Scenario | str, ratio: VoteRatio | str, polarity: str = "pro") -> Replication:
    if isinstance(scenario, str):
        scenario = build_scenario(scenario)
    if isinstance(ratio, str):
        ratio = VoteRatio.parse(ratio)
    p = build_profile(scenario, ratio, polarity)
    return Replication(scenario, ratio, polarity, awpr(p), so(p), co(p), sco(p))


def replicate_all(
    scenarios: Sequence[str] = SCENARIO_IDS,
    ratios: Sequence[VoteRatio] = PAPER_RATIOS,
    polarity: str = "pro",
) -> list[Replication]:
    return [replicate(s, r, polarity) for s in scenarios for r in ratios]


@dataclass(frozen=True)
class DivergenceCensus:
    """Agreement between plurality and each SSCO on one argument, over a profile space.

    ``ties`` counts profiles on which plurality is undefined; the remaining
    profiles split into ``agree`` and ``disagree`` per SSCO.
    """

    conclusion: str
    n_voters: int
    support_size: int
    ordered: bool
    total: int
    ties: int
    agree: dict[str, int]
    disagree: dict[str, int]

    def rows(self) -> list[tuple[str, int, int, int, int]]:
        return [(r, self.agree[r], self.disagree[r], self.ties, self.total) for r in ("so", "co", "sco")]

    def to_dict(self) -> dict:
        return {
            "conclusion": self.conclusion,
            "n_voters": self.n_voters,
            "support_size": self.support_size,
            "ordered": self.ordered,
            "total": self.total,
            "ties": self.ties,
            "agree": dict(self.agree),
            "disagree": dict(self.disagree),
        }


MAX_CENSUS_PROFILES = 200_000


def divergence_census(
    af: ArgumentationFramework,
    conclusion: str,
    n_voters: int,
    support: Sequence[Labeling] | None = None,
    ordered: bool = False,
    max_profiles: int = MAX_CENSUS_PROFILES,
) -> DivergenceCensus:
    """Compare plurality with so/co/sco on ``conclusion`` over every profile.

    Voters hold labelings from ``support`` (default: all complete labelings).
    Profiles are multisets unless ``ordered`` is set; every rule here is
    anonymous, so both give the same proportions.
    """
    if conclusion not in af:
        raise ArgumentationError(f"{conclusion!r} is not an argument of the framework")
    if n_voters < 1:
        raise ArgumentationError("need at least one voter")
    pool = list(support) if support is not None else enumerate_complete(af)
    c = len(pool)
    size = c**n_voters if ordered else math.comb(c + n_voters - 1, n_voters)
    if size > max_profiles:
        raise ArgumentationError(f"census would enumerate {size} profiles, limit is {max_profiles}")
    gen = itertools.product(pool, repeat=n_voters) if ordered else itertools.combinations_with_replacement(pool, n_voters)

    rules = {"so": so, "co": co, "sco": sco}
    total = ties = 0
    agree = dict.fromkeys(rules, 0)
    disagree = dict.fromkeys(rules, 0)
    for tup in gen:
        total += 1
        p = LabelingProfile.of(af, tup)
        res = awpr(p).result
        if isinstance(res, TieFailure):
            ties += 1
            continue
        for name, f in rules.items():
            if f(p)[conclusion] is res[conclusion]:
                agree[name] += 1
            else:
                disagree[name] += 1
    return DivergenceCensus(conclusion, n_voters, c, ordered, total, ties, agree, disagree)

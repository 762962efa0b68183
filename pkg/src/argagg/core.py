"""Argumentation frameworks, labelings and their semantics.

A framework is a finite set of arguments with a defeat relation. A labeling
assigns each argument one of ``in``, ``out`` or ``undec``. This module decides
admissibility and completeness of labelings and enumerates the admissible,
complete and grounded ones.
"""

from __future__ import annotations

import re
from collections.abc import Iterable, Iterator, Mapping
from dataclasses import dataclass
from enum import Enum
from functools import cached_property

__all__ = [
    "ArgumentationError",
    "FrameworkMismatch",
    "SizeLimitExceeded",
    "Label",
    "IN",
    "OUT",
    "UNDEC",
    "ArgumentationFramework",
    "Labeling",
    "MAX_ENUMERATION_ARGS",
    "is_admissible",
    "is_complete",
    "enumerate_admissible",
    "enumerate_complete",
    "all_labelings",
    "grounded",
]

MAX_ENUMERATION_ARGS = 24

_ARG_RE = re.compile(r"[A-Za-z0-9_]+\Z")


class ArgumentationError(ValueError):
    """Base class for errors raised by this package."""


class FrameworkMismatch(ArgumentationError):
    """A labeling does not cover exactly the arguments of a framework."""


class SizeLimitExceeded(ArgumentationError):
    """An exhaustive computation was asked for on too large an input."""


class Label(str, Enum):
    IN = "in"
    OUT = "out"
    UNDEC = "undec"

    def __str__(self) -> str:
        return self.value


IN, OUT, UNDEC = Label.IN, Label.OUT, Label.UNDEC

# enumeration order: in < out < undec
LABELS: tuple[Label, ...] = (IN, OUT, UNDEC)


@dataclass(frozen=True)
class ArgumentationFramework:
    """Arguments in declaration order plus a set of ``(attacker, target)`` pairs."""

    arguments: tuple[str, ...]
    defeats: frozenset[tuple[str, str]] = frozenset()

    def __init__(self, arguments: Iterable[str], defeats: Iterable[tuple[str, str]] = ()):
        args = tuple(arguments)
        seen: set[str] = set()
        for a in args:
            if not isinstance(a, str) or not _ARG_RE.match(a):
                raise ArgumentationError(f"invalid argument name {a!r}")
            if a in seen:
                raise ArgumentationError(f"duplicate argument {a!r}")
            seen.add(a)
        pairs = frozenset((str(s), str(t)) for s, t in defeats)
        for s, t in pairs:
            if s not in seen or t not in seen:
                raise ArgumentationError(f"defeat {s} -> {t} uses an undeclared argument")
        object.__setattr__(self, "arguments", args)
        object.__setattr__(self, "defeats", pairs)

    def __len__(self) -> int:
        return len(self.arguments)

    def __contains__(self, arg: object) -> bool:
        return arg in self._index

    def __repr__(self) -> str:
        edges = ", ".join(f"{s}->{t}" for s, t in self.sorted_defeats())
        return f"ArgumentationFramework([{', '.join(self.arguments)}], [{edges}])"

    @cached_property
    def _index(self) -> dict[str, int]:
        return {a: i for i, a in enumerate(self.arguments)}

    @cached_property
    def attackers(self) -> dict[str, tuple[str, ...]]:
        """Defeaters of each argument, in declaration order."""
        return {
            a: tuple(b for b in self.arguments if (b, a) in self.defeats)
            for a in self.arguments
        }

    @cached_property
    def _attacker_idx(self) -> tuple[tuple[int, ...], ...]:
        idx = self._index
        return tuple(tuple(idx[b] for b in self.attackers[a]) for a in self.arguments)

    def index(self, arg: str) -> int:
        return self._index[arg]

    def sorted_defeats(self) -> list[tuple[str, str]]:
        idx = self._index
        return sorted(self.defeats, key=lambda e: (idx[e[0]], idx[e[1]]))

    def labeling(self, assignment: Mapping[str, Label | str]) -> Labeling:
        """Build a labeling of this framework from an ``arg -> label`` mapping."""
        return Labeling.from_mapping(self.arguments, assignment)

    def all_undec(self) -> Labeling:
        return Labeling(self.arguments, (UNDEC,) * len(self.arguments))


@dataclass(frozen=True)
class Labeling(Mapping[str, Label]):
    """Total map from a framework's arguments to labels.

    Labels are stored positionally, aligned with ``arguments``. Two labelings
    are comparable only when their argument tuples are identical.
    """

    arguments: tuple[str, ...]
    labels: tuple[Label, ...]

    def __post_init__(self) -> None:
        if len(self.arguments) != len(self.labels):
            raise FrameworkMismatch("labeling must assign exactly one label per argument")
        object.__setattr__(self, "labels", tuple(Label(x) for x in self.labels))

    @classmethod
    def from_mapping(cls, arguments: Iterable[str], assignment: Mapping[str, Label | str]) -> Labeling:
        args = tuple(arguments)
        extra = set(assignment) - set(args)
        if extra:
            raise FrameworkMismatch(f"unknown arguments {sorted(extra)}")
        missing = [a for a in args if a not in assignment]
        if missing:
            raise FrameworkMismatch(f"no label for {missing}")
        return cls(args, tuple(Label(assignment[a]) for a in args))

    def __getitem__(self, arg: str) -> Label:
        try:
            return self.labels[self.arguments.index(arg)]
        except ValueError:
            raise KeyError(arg) from None

    def __iter__(self) -> Iterator[str]:
        return iter(self.arguments)

    def __len__(self) -> int:
        return len(self.arguments)

    def __str__(self) -> str:
        return " ".join(f"{a}={lab.value}" for a, lab in zip(self.arguments, self.labels))

    def __repr__(self) -> str:
        return f"Labeling({self})"

    def with_label(self, arg: str, label: Label | str) -> Labeling:
        i = self.arguments.index(arg)
        labels = list(self.labels)
        labels[i] = Label(label)
        return Labeling(self.arguments, tuple(labels))

    def args_with(self, label: Label | str) -> frozenset[str]:
        label = Label(label)
        return frozenset(a for a, x in zip(self.arguments, self.labels) if x is label)

    @property
    def in_set(self) -> frozenset[str]:
        return self.args_with(IN)

    @property
    def out_set(self) -> frozenset[str]:
        return self.args_with(OUT)

    @property
    def undec_set(self) -> frozenset[str]:
        return self.args_with(UNDEC)


def _check_same(af: ArgumentationFramework, lab: Labeling) -> None:
    if lab.arguments != af.arguments:
        raise FrameworkMismatch(
            f"labeling over {list(lab.arguments)} does not match framework {list(af.arguments)}"
        )


def _arg_legal(label: Label, attacker_labels: Iterable[Label], complete: bool) -> bool:
    att = tuple(attacker_labels)
    if label is IN:
        return all(x is OUT for x in att)
    if label is OUT:
        return any(x is IN for x in att)
    if not complete:
        return True
    return UNDEC in att and IN not in att


def _legal_everywhere(af: ArgumentationFramework, labels: tuple[Label, ...], complete: bool) -> bool:
    return all(
        _arg_legal(labels[i], (labels[j] for j in att), complete)
        for i, att in enumerate(af._attacker_idx)
    )


def is_admissible(af: ArgumentationFramework, lab: Labeling) -> bool:
    """In-labels have all defeaters out; out-labels have an in defeater."""
    _check_same(af, lab)
    return _legal_everywhere(af, lab.labels, complete=False)


def is_complete(af: ArgumentationFramework, lab: Labeling) -> bool:
    """Admissible, and every undec argument has an undec defeater and no in defeater."""
    _check_same(af, lab)
    return _legal_everywhere(af, lab.labels, complete=True)


def _guard(af: ArgumentationFramework) -> None:
    if len(af) > MAX_ENUMERATION_ARGS:
        raise SizeLimitExceeded(
            f"enumeration is limited to {MAX_ENUMERATION_ARGS} arguments, got {len(af)}"
        )


def _backtrack(af: ArgumentationFramework, complete: bool) -> list[Labeling]:
    _guard(af)
    n = len(af)
    att = af._attacker_idx
    # an argument's clause becomes checkable once it and all its defeaters are assigned
    ready: list[list[int]] = [[] for _ in range(n)]
    for i in range(n):
        ready[max((i, *att[i]))].append(i)

    out: list[Labeling] = []
    current: list[Label] = [UNDEC] * n

    def go(pos: int) -> None:
        if pos == n:
            out.append(Labeling(af.arguments, tuple(current)))
            return
        for label in LABELS:
            current[pos] = label
            if all(
                _arg_legal(current[i], (current[j] for j in att[i]), complete)
                for i in ready[pos]
            ):
                go(pos + 1)
        current[pos] = UNDEC

    go(0)
    return out


def enumerate_complete(af: ArgumentationFramework) -> list[Labeling]:
    """All complete labelings, ordered lexicographically with in < out < undec."""
    return _backtrack(af, complete=True)


def enumerate_admissible(af: ArgumentationFramework) -> list[Labeling]:
    """All admissible labelings, in the same order as :func:`enumerate_complete`."""
    return _backtrack(af, complete=False)


def all_labelings(af: ArgumentationFramework) -> Iterator[Labeling]:
    """Every one of the 3**n labelings, lexicographic order."""
    from itertools import product

    _guard(af)
    for labels in product(LABELS, repeat=len(af)):
        yield Labeling(af.arguments, labels)


def grounded(af: ArgumentationFramework) -> Labeling:
    """The least committed complete labeling, by the usual fixpoint."""
    labels = [UNDEC] * len(af)
    att = af._attacker_idx
    changed = True
    while changed:
        changed = False
        for i, a_att in enumerate(att):
            if labels[i] is not UNDEC:
                continue
            if all(labels[j] is OUT for j in a_att):
                labels[i] = IN
                changed = True
            elif any(labels[j] is IN for j in a_att):
                labels[i] = OUT
                changed = True
    return Labeling(af.arguments, tuple(labels))

"""Commitment order, compatibility, and the down-admissible / up-complete maps."""

from __future__ import annotations

from .core import (
    IN,
    OUT,
    UNDEC,
    ArgumentationError,
    ArgumentationFramework,
    FrameworkMismatch,
    Label,
    Labeling,
    _check_same,
    is_admissible,
)

__all__ = [
    "NotAdmissibleInput",
    "leq_committed",
    "compatible",
    "labels_compatible",
    "down_admissible",
    "up_complete",
]


class NotAdmissibleInput(ArgumentationError):
    """``up_complete`` was given a labeling that is not admissible."""


def _same_args(l1: Labeling, l2: Labeling) -> None:
    if l1.arguments != l2.arguments:
        raise FrameworkMismatch("labelings belong to different frameworks")


def leq_committed(l1: Labeling, l2: Labeling) -> bool:
    """True if every in/out label of ``l1`` is carried unchanged by ``l2``."""
    _same_args(l1, l2)
    return all(x is UNDEC or x is y for x, y in zip(l1.labels, l2.labels))


def labels_compatible(x: Label, y: Label) -> bool:
    return {x, y} != {IN, OUT}


def compatible(l1: Labeling, l2: Labeling) -> bool:
    """No argument is in under one labeling and out under the other."""
    _same_args(l1, l2)
    return all(labels_compatible(x, y) for x, y in zip(l1.labels, l2.labels))


def down_admissible(af: ArgumentationFramework, lab: Labeling) -> Labeling:
    """Greatest admissible labeling below ``lab``.

    Repeatedly demotes to undec every argument that is illegally in (some
    defeater not out) or illegally out (no defeater in). Labels only move
    towards undec, so at most ``len(af)`` sweeps change anything.
    """
    _check_same(af, lab)
    labels, _ = _contract(af, list(lab.labels))
    return Labeling(af.arguments, tuple(labels))


def _contract(af: ArgumentationFramework, labels: list[Label]) -> tuple[list[Label], int]:
    """Demotion fixpoint; also returns how many sweeps demoted something."""
    att = af._attacker_idx
    sweeps = 0
    while True:
        bad = [
            i
            for i, a_att in enumerate(att)
            if (labels[i] is IN and any(labels[j] is not OUT for j in a_att))
            or (labels[i] is OUT and not any(labels[j] is IN for j in a_att))
        ]
        if not bad:
            return labels, sweeps
        sweeps += 1
        for i in bad:
            labels[i] = UNDEC


def up_complete(af: ArgumentationFramework, lab: Labeling) -> Labeling:
    """Least complete labeling above an admissible ``lab``.

    Undec arguments whose defeaters are all out become in; undec arguments
    with an in defeater become out; repeat until nothing moves.
    """
    if not is_admissible(af, lab):
        raise NotAdmissibleInput(f"up_complete needs an admissible labeling, got {lab}")
    labels = list(lab.labels)
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

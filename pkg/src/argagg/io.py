"""Line-based text formats for frameworks and profiles.

Framework file::

    # comment
    arg A
    arg B
    att B A

Profile file, one ballot per line with a multiplicity::

    6: A=in,B=out,C=in
    4: A=out,B=in,C=out
"""

from __future__ import annotations

import re

from .core import ArgumentationError, ArgumentationFramework, Label, Labeling
from .rules import LabelingProfile

__all__ = [
    "ParseError",
    "parse_af",
    "serialize_af",
    "parse_profile",
    "serialize_profile",
    "parse_labeling",
]

_TOKEN = re.compile(r"[A-Za-z0-9_]+\Z")


class ParseError(ArgumentationError):
    def __init__(self, lineno: int, message: str):
        self.lineno = lineno
        super().__init__(f"line {lineno}: {message}")


def _lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line


def parse_af(text: str) -> ArgumentationFramework:
    args: list[str] = []
    declared: set[str] = set()
    defeats: list[tuple[str, str]] = []
    for lineno, line in _lines(text):
        parts = line.split()
        if parts[0] == "arg" and len(parts) == 2:
            name = parts[1]
            if not _TOKEN.match(name):
                raise ParseError(lineno, f"invalid argument name {name!r}")
            if name in declared:
                raise ParseError(lineno, f"duplicate argument {name!r}")
            declared.add(name)
            args.append(name)
        elif parts[0] == "att" and len(parts) == 3:
            for name in parts[1:]:
                if name not in declared:
                    raise ParseError(lineno, f"undeclared argument {name!r}")
            defeats.append((parts[1], parts[2]))
        else:
            raise ParseError(lineno, f"expected 'arg <id>' or 'att <src> <dst>', got {line!r}")
    return ArgumentationFramework(args, defeats)


def serialize_af(af: ArgumentationFramework) -> str:
    lines = [f"arg {a}" for a in af.arguments]
    lines += [f"att {s} {t}" for s, t in af.sorted_defeats()]
    return "".join(line + "\n" for line in lines)


def parse_labeling(text: str, af: ArgumentationFramework, lineno: int = 0) -> Labeling:
    """Parse ``A=in,B=out`` (commas and/or spaces separate assignments)."""
    assignment: dict[str, Label] = {}
    for item in re.split(r"[,\s]+", text.strip()):
        if not item:
            continue
        arg, sep, value = item.partition("=")
        arg, value = arg.strip(), value.strip()
        if not sep:
            raise ParseError(lineno, f"expected <arg>=<label>, got {item!r}")
        if arg not in af:
            raise ParseError(lineno, f"unknown argument {arg!r}")
        if arg in assignment:
            raise ParseError(lineno, f"argument {arg!r} assigned twice")
        try:
            assignment[arg] = Label(value)
        except ValueError:
            raise ParseError(lineno, f"bad label token {value!r}") from None
    missing = [a for a in af.arguments if a not in assignment]
    if missing:
        raise ParseError(lineno, f"missing assignment for {', '.join(missing)}")
    return af.labeling(assignment)


def parse_profile(text: str, af: ArgumentationFramework, require_complete: bool = True) -> LabelingProfile:
    labelings: list[Labeling] = []
    for lineno, line in _lines(text):
        mult, sep, rest = line.partition(":")
        if not sep:
            raise ParseError(lineno, "expected '<multiplicity>: <arg>=<label>,...'")
        try:
            k = int(mult)
        except ValueError:
            raise ParseError(lineno, f"bad multiplicity {mult.strip()!r}") from None
        if k < 1:
            raise ParseError(lineno, "multiplicity must be at least 1")
        labelings += [parse_labeling(rest, af, lineno)] * k
    if not labelings:
        raise ParseError(0, "profile has no ballots")
    return LabelingProfile.of(af, labelings, require_complete)


def serialize_profile(profile: LabelingProfile) -> str:
    """Runs of identical consecutive ballots are written with their multiplicity."""
    out = []
    labs = profile.labelings
    i = 0
    while i < len(labs):
        j = i
        while j < len(labs) and labs[j] == labs[i]:
            j += 1
        body = ",".join(f"{a}={x.value}" for a, x in zip(labs[i].arguments, labs[i].labels))
        out.append(f"{j - i}: {body}\n")
        i = j
    return "".join(out)

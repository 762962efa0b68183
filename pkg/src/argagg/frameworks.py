"""Named frameworks used by the bench, the postulate search and the tests."""

from __future__ import annotations

from .core import ArgumentationFramework

__all__ = [
    "simple_af",
    "complex_af",
    "tree_af",
    "cycle",
    "chain",
    "floating",
    "triangle",
    "CATALOG_VERSION",
    "catalog",
]


def simple_af() -> ArgumentationFramework:
    """Three arguments: B and C defeat each other, B defeats A."""
    return ArgumentationFramework("ABC", [("B", "A"), ("B", "C"), ("C", "B")])


def complex_af() -> ArgumentationFramework:
    """Five arguments: B and D defeat A; B/C and D/E are mutual defeats."""
    return ArgumentationFramework(
        "ABCDE",
        [("B", "A"), ("D", "A"), ("B", "C"), ("C", "B"), ("D", "E"), ("E", "D")],
    )


def tree_af() -> ArgumentationFramework:
    """a1 is defeated by a2 and a4, which are defeated by a3 and a5."""
    return ArgumentationFramework(
        ["a1", "a2", "a3", "a4", "a5"],
        [("a2", "a1"), ("a4", "a1"), ("a3", "a2"), ("a5", "a4")],
    )


def cycle(n: int) -> ArgumentationFramework:
    """Odd or even defeat cycle ``c1 -> c2 -> ... -> cn -> c1``."""
    args = [f"c{i}" for i in range(1, n + 1)]
    return ArgumentationFramework(args, [(args[i], args[(i + 1) % n]) for i in range(n)])


def chain(n: int) -> ArgumentationFramework:
    """Defeat path ``p1 -> p2 -> ... -> pn``."""
    args = [f"p{i}" for i in range(1, n + 1)]
    return ArgumentationFramework(args, [(args[i], args[i + 1]) for i in range(n - 1)])


def floating() -> ArgumentationFramework:
    """a and b defeat each other and both defeat c."""
    return ArgumentationFramework("abc", [("a", "b"), ("b", "a"), ("a", "c"), ("b", "c")])


def triangle() -> ArgumentationFramework:
    """Three arguments, every pair mutually defeating."""
    args = "abc"
    return ArgumentationFramework(args, [(x, y) for x in args for y in args if x != y])


CATALOG_VERSION = 1


def catalog() -> dict[str, ArgumentationFramework]:
    """Fixed, ordered set of frameworks searched by the postulate lab."""
    return {
        "simple": simple_af(),
        "complex": complex_af(),
        "tree": tree_af(),
        "cycle3": cycle(3),
        "cycle2": cycle(2),
        "chain3": chain(3),
        "floating": floating(),
        "triangle": triangle(),
    }

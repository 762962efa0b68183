"""Brute-force reference implementations, written straight from the definitions.

Kept free of the package's own semantics code so the tests compare two routes.
"""

from itertools import product

LABELS = ("in", "out", "undec")


def defeaters(args, defeats, a):
    return [b for b in args if (b, a) in defeats]


def complete_by_definition(args, defeats, lab):
    for a in args:
        att = [lab[b] for b in defeaters(args, defeats, a)]
        if lab[a] == "in" and any(x != "out" for x in att):
            return False
        if lab[a] == "out" and "in" not in att:
            return False
        if lab[a] == "undec" and ("undec" not in att or "in" in att):
            return False
    return True


def admissible_by_definition(args, defeats, lab):
    for a in args:
        att = [lab[b] for b in defeaters(args, defeats, a)]
        if lab[a] == "in" and any(x != "out" for x in att):
            return False
        if lab[a] == "out" and "in" not in att:
            return False
    return True


def all_dicts(args):
    for labels in product(LABELS, repeat=len(args)):
        yield dict(zip(args, labels))


def brute_complete(args, defeats):
    return [lab for lab in all_dicts(args) if complete_by_definition(args, defeats, lab)]


def brute_admissible(args, defeats):
    return [lab for lab in all_dicts(args) if admissible_by_definition(args, defeats, lab)]


def leq(l1, l2):
    return all(l1[a] == "undec" or l1[a] == l2[a] for a in l1)


def unique_max(cands):
    tops = [c for c in cands if all(leq(o, c) for o in cands)]
    assert len(tops) == 1, "no unique maximum"
    return tops[0]


def unique_min(cands):
    bots = [c for c in cands if all(leq(c, o) for o in cands)]
    assert len(bots) == 1, "no unique minimum"
    return bots[0]


def down_admissible_oracle(args, defeats, lab):
    return unique_max([c for c in brute_admissible(args, defeats) if leq(c, lab)])


def up_complete_oracle(args, defeats, lab):
    return unique_min([c for c in brute_complete(args, defeats) if leq(lab, c)])

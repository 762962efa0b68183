"""
Which rule satisfies which postulate
====================================

Exhaustive search over a fixed catalog of small frameworks, with up to three
voters holding complete labelings.
"""

# %%
from argagg.postulates import postulate_matrix, search_violation

matrix = postulate_matrix(["awpr", "so", "co", "sco"], max_args=4, max_voters=3)
for rule, row in matrix.items():
    print(rule.ljust(4), "  ".join(f"{p}={'X' if r.violated else 'ok'}" for p, r in row.items()))

# %%
# Each violation comes with a witness that can be re-checked on its own.
rep = matrix["sco"]["unanimity"]
w = rep.witness
print(w.framework_name, w.framework)
for lab in w.profiles[0].labelings:
    print("  voter:", lab)
print("re-check reproduces:", rep.recheck())

# %%
# Plurality fails collective rationality: three voters on a mutual-attack
# triangle produce an outcome that is not a complete labeling.
rep = matrix["awpr"]["collective_rationality"]
print(rep.witness.framework_name, [str(x) for x in rep.witness.profiles[0].labelings])

# %%
# The credulous operator is only guaranteed admissible. Within four
# arguments no incomplete outcome exists; the five-argument framework has one.
for n in (4, 5):
    r = search_violation("co", "collective_rationality", max_args=n)
    print(n, r.verdict, r.witness and r.witness.framework_name)

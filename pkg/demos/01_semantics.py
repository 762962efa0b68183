"""
Labelings of a small framework
==============================

Build two frameworks, list their complete labelings and pick out the
grounded one.
"""

# %%
# Three arguments: B attacks the conclusion A, and B and C attack each other.
from argagg import ArgumentationFramework, enumerate_admissible, enumerate_complete, grounded, is_complete

simple = ArgumentationFramework("ABC", [("B", "A"), ("B", "C"), ("C", "B")])
for lab in enumerate_complete(simple):
    print(lab)

# %%
# The grounded labeling is the least committed complete one. Here the
# mutual attack leaves everything undecided.
print("grounded:", grounded(simple))

# %%
# Admissible labelings drop the constraint on undec, so there are more.
print(len(enumerate_admissible(simple)), "admissible labelings")

# %%
# Adding a second attacker D on A, itself in a mutual attack with E, gives
# nine complete labelings.
from argagg.frameworks import complex_af

cx = complex_af()
labs = enumerate_complete(cx)
print(len(labs), "complete labelings")
for lab in labs:
    print(" ", lab)

# %%
# Checking a single labeling by hand:
print(is_complete(simple, simple.labeling({"A": "in", "B": "in", "C": "out"})))

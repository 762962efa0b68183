"""
Plurality versus the sceptical and credulous operators
======================================================

Ten voters split 6:4 on the three-argument framework. Plurality takes each
argument's most popular label; the sceptical, credulous and super-credulous
operators only commit where nobody objects.
"""

# %%
from argagg import LabelingProfile, awpr, co, sceptical_initial, credulous_initial, sco, so, supermajority, tally
from argagg.frameworks import simple_af

af = simple_af()
pro = af.labeling({"A": "in", "B": "out", "C": "in"})
con = af.labeling({"A": "out", "B": "in", "C": "out"})
profile = LabelingProfile.of(af, [pro] * 6 + [con] * 4)

for arg, counts in tally(profile).items():
    print(arg, counts)

# %%
# Plurality concludes A. Every other operator stays undecided.
print("awpr:", awpr(profile))
print("so:  ", so(profile))
print("co:  ", co(profile))
print("sco: ", sco(profile))

# %%
# A supermajority of 6 still accepts A; asking for 7 does not.
print("k=6:", supermajority(profile, 6))
print("k=7:", supermajority(profile, 7))

# %%
# When one voter is undecided instead of opposed, the credulous operator can
# commit where the sceptical one cannot.
mixed = LabelingProfile.of(af, [pro, af.all_undec()])
print("sceptical initial:", sceptical_initial(mixed))
print("credulous initial:", credulous_initial(mixed))
print("co:", co(mixed))

# %%
# A 5:5 split leaves plurality undefined.
split = LabelingProfile.of(af, [pro] * 5 + [con] * 5)
print(awpr(split))

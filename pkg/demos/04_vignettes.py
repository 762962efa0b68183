"""
The six committee scenarios
===========================

Rebuild each scenario's vote table, aggregate it, and count how often
plurality and the SSCOs disagree across all profiles.
"""

# %%
from argagg.bench import PAPER_RATIOS, SCENARIO_IDS, build_scenario, divergence_census, replicate
from argagg.rules import plurality_preference_threshold

for sid in SCENARIO_IDS:
    s = build_scenario(sid)
    for ratio in PAPER_RATIOS:
        r = replicate(s, ratio)
        print(f"{sid:10s} {ratio}  harm={s.harm!s:5s}  {r.conclusion()}")

# %%
# Flip the majority to the counterarguments and plurality rejects A instead.
print(replicate("stephen", "6:4", polarity="con").conclusion())

# %%
# Across every multiset of complete ballots, how often does each operator
# agree with plurality on the conclusion?
s = build_scenario("marconi")
for n in (2, 3, 4, 5):
    c = divergence_census(s.framework, "A", n)
    print(n, "voters:", c.total, "profiles,", c.ties, "ties,", "disagree", c.disagree)

# %%
# With 4 of 10 voters in the minority, plurality is the better bet once
# defending an undecided verdict costs more than 0.4 of defending a decision
# one voted against.
print(plurality_preference_threshold(10, 4, 1.0))

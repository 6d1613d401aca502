# coding: utf-8

# # Randomized lemma checks
#
# Each check draws seeded random instances. A failure comes back as a
# replayable counterexample record.

# In[1]:

from hxcomb.lemmas import LEMMA_IDS, run_lemma, leq4_exhaustion

for lid in LEMMA_IDS:
    rep = run_lemma(lid, trials=100, seed=1)
    print(f"{lid:20s} {rep.trials:4d} trials, {len(rep.failures)} failures")


# The small exhaustive case: at most four triples of the pool pairwise intersect.

# In[2]:

best, achiever = leq4_exhaustion()
print(best, [str(e) for e in achiever])


# Individual generators can be used directly.

# In[3]:

from hxcomb.lemmas import gen_stable_graph
from hxcomb.properties import nu

g = gen_stable_graph(10, 3, seed=5)
print(len(g), "edges, nu =", nu(g))

# coding: utf-8

# # Exact extremal search
#
# Over shifted 3-families the search finds the largest U(s, 2s+1) family
# and compares it with the bound.

# In[1]:

from hxcomb import verify_theorem, search_unrestricted_max, Budget

for n, s in [(7, 2), (8, 2), (9, 2), (10, 2), (9, 3), (10, 3)]:
    cert = verify_theorem(n, s, Budget(secs=60))
    print(n, s, "optimum", cert.optimum, "bound", cert.bound, "holds", cert.theorem_holds,
          "nodes", cert.nodes_explored)


# On the smallest instance the full search, without the shiftedness
# restriction, agrees.

# In[2]:

full = search_unrestricted_max(6, 2)
print("unrestricted (6,2):", full.optimum)


# Certificates serialize to JSON; the normalized form is reproducible byte for byte.

# In[3]:

import json
print(json.dumps(verify_theorem(9, 3).to_dict(normalized=True))[:200], "...")

# coding: utf-8

# # The union condition
#
# A family is U(s, q) when every s distinct edges together touch at most q
# vertices. `check_U` returns None or a maximal-union counterexample.

# In[1]:

from hxcomb import Family, check_U, max_union, make_F2

f = make_F2(9, 2)
print("F2(9,2) satisfies U(2,5):", check_U(f, 2, 5) is None)


# Adding one edge outside the construction breaks it.

# In[2]:

g = f.with_edges([(4, 5, 6)])
wit = check_U(g, 2, 5)
print("union", wit.union_size, "from", [str(e) for e in wit.edges])


# `max_union` gives the largest union and the lexicographically first list
# of edges that achieves it.

# In[3]:

small = Family(7, 3, [(1, 2, 3), (1, 4, 5), (2, 6, 7), (3, 4, 6)])
for s in (1, 2, 3):
    print(s, max_union(small, s))

# coding: utf-8

# # Matchings, shifting and the r-statistic

# In[1]:

from hxcomb import Family, matching_number, stabilize, is_shifted, r_stat

g = Family(8, 2, [(3, 4), (5, 6), (2, 6), (7, 8), (1, 8)])
value, wit = matching_number(g)
print("nu =", value, "witness:", [str(e) for e in wit.edges])


# Stabilizing pushes every edge toward small labels. Size is kept, and
# the matching number never goes up.

# In[2]:

h = stabilize(g)
print("shifted:", is_shifted(h), "size:", len(h), "nu:", matching_number(h)[0])
print([str(e) for e in h])


# The r-statistic picks which container graph holds a stable graph.

# In[3]:

from hxcomb import make_A_graph, is_subgraph

stat = r_stat(h)
print(stat)
print("inside container:", is_subgraph(h, make_A_graph(stat.r, h.n, stat.nu)))

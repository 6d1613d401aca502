# coding: utf-8

# # Building the extremal families
#
# Three 3-uniform families compete for the largest size under the union
# condition U(s, 2s+1). Here we build them and compare sizes against the closed forms.

# In[1]:

from hxcomb import make_F1, make_F2, make_F3, size_formulas, conjecture_bound

n, s = 10, 3
fams = {"F1": make_F1(n, s), "F2": make_F2(n, s), "F3": make_F3(n, s)}
for name, f in fams.items():
    print(name, len(f), "edges, first few:", [str(e) for e in list(f)[:4]])


# The enumerated sizes match the formulas, and the bound is their maximum.

# In[2]:

print(size_formulas(n, s), "bound =", conjecture_bound(n, s))


# Which family wins depends on n. For fixed s the star F1 eventually dominates.

# In[3]:

for n in range(8, 15):
    sizes = size_formulas(n, 3)
    print(n, sizes, "winner:", "F%d" % (1 + sizes.index(max(sizes))))


# Families round-trip through the text and JSON formats.

# In[4]:

from hxcomb.formats import family_to_text, family_from_text

text = family_to_text(make_F3(7, 2))
print(text.splitlines()[:3])
assert family_from_text(text) == make_F3(7, 2)

"""
Indexes of split epimorphisms
=============================

Z6 -> Z2 splits; its index sends every element to a kernel coordinate.
On the opposite brace of S3 the two group laws give two different indexes.
"""

from ilokit import cyclic, group_index, split_epi, symmetric_group
from ilokit.braces import brace_indexes, brace_split_epi, opposite_brace, trivial_brace

e = split_epi(cyclic(6), cyclic(2), [x % 2 for x in range(6)], [0, 3])
w = group_index(e)
print("kernel", e.kernel)
print("gamma ", [w.gamma_element(x) for x in range(6)])
print("index", w.is_index, "hyperindex", w.is_hyperindex)

# %%
# The sign map of S3 respects both the group law and its opposite.
S3 = symmetric_group(3)
sign = [0 if p in [(0, 1, 2), (1, 2, 0), (2, 0, 1)] else 1 for p in S3.labels]
b = brace_split_epi(opposite_brace(S3), trivial_brace(cyclic(2)), sign, [0, S3.index((1, 0, 2))])
ws, wc = brace_indexes(b)
for x, label in enumerate(S3.labels):
    print(label, S3.labels[ws.gamma_element(x)], S3.labels[wc.gamma_element(x)])

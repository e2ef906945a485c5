"""
A Mal'tsev term on latin quandles
=================================

For R3 (x > y = 2x - y mod 3) the term reduces to x - y + z.
"""

import itertools

import numpy as np

from ilokit import AlexanderDatum, alexander, cyclic, maltsev_term, multiplier, trivial_quandle
from ilokit.errors import NotLatin

R3 = alexander(AlexanderDatum(cyclic(3), multiplier(3, 2)))
p = maltsev_term(R3)
affine = np.array([[[(x - y + z) % 3 for z in range(3)] for y in range(3)] for x in range(3)])
print("p equals x - y + z:", np.array_equal(p, affine))

for x, z in itertools.product(range(3), repeat=2):
    assert p[x, x, z] == z and p[x, z, z] == x

# %%
# A trivial quandle is not latin, so there is no term to build.
try:
    maltsev_term(trivial_quandle(2))
except NotLatin as exc:
    print("T2:", exc)

"""Day convolution of filtrations and the coend calculus behind it: unit
laws, the comparison dichotomy for extensions, and colimit presentations
of products of simplices.

Run:  python demos/convolution_and_coends.py
"""

import random

from zilber import _random as zrandom
from zilber.filtration import (convolution_symmetry_check, day_convolution,
                               filtrations_stagewise_equal, unit_filtration)
from zilber.promonoidal import (delta_mu_unit_check, left_kan_check,
                                product_simplices_colimit_check)

rng = random.Random(0)
F = zrandom.rand_filtration(rng, p_max=2)
G = zrandom.rand_filtration(rng, p_max=2)

print("F convolved with the unit is F:",
      filtrations_stagewise_equal(day_convolution(F, unit_filtration()), F))
print("convolution is symmetric:", convolution_symmetry_check(F, G).ok)
print("unit law for the multiplication profunctor (b = 2):",
      delta_mu_unit_check(2).ok)

# the comparison map for an extension is a bijection exactly when the
# total arity fits under the truncation bound
for b in (1, 2, 3):
    cert = left_kan_check([1, 1], b, range(4))
    print(f"extension comparison for [1,1] under b={b}:",
          "bijective" if cert.ok else f"fails, witness {cert.witness}")

print("a product of simplices is the colimit of its nondegenerate cells:",
      product_simplices_colimit_check([2, 1], range(5)).ok)

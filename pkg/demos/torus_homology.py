"""Build a torus as a product of simplicial circles, normalize it, and
compare its homology with the tensor product of the factors.

Run:  python demos/torus_homology.py
"""

from zilber.chains import homology, is_homology_isomorphism
from zilber.doldkan import normalize
from zilber.ez import shuffle_product
from zilber.simplicial import circle, free_abelian, product

T = product(circle(2), circle(2))
print("torus level sizes:", [T.level_size(k) for k in range(3)])
print("nondegenerate simplices per level:", T.nondegenerate_counts())

A = free_abelian(T)
N = normalize(A).normalized
print("normalized ranks:", N.ranks)
print("homology:", [str(h) for h in homology(N)])

# the shuffle map compares the tensor square of a circle with the torus
S = free_abelian(circle(2))
sp = shuffle_product(S, S)
print("tensor-side homology:", [str(h) for h in homology(sp.source)])
print("shuffle map induces an isomorphism:",
      is_homology_isomorphism(sp.map))

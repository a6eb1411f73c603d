"""Compute the spectral sequence of the skeletal filtration of a torus
and print each page with its differentials.

Run:  python demos/spectral_pages.py
"""

from zilber.filtration import skeletal_filtration
from zilber.simplicial import circle, free_abelian, product
from zilber.spectral import CONVENTION, SpectralSequence, heart_check

A = free_abelian(product(circle(2), circle(2)))
F = skeletal_filtration(A)
S = SpectralSequence(F)

print("convention:", CONVENTION)
for r in range(1, S.r_top + 1):
    print(f"\npage E_{r}:")
    for (p, q), sq in sorted(S.pages[r].items()):
        if not sq.ngens:
            continue
        pretty = " + ".join("Z" if o == 0 else f"Z/{o}" for o in sq.orders)
        d = S.diffs[r][(p, q)]
        print(f"  E_{r}^{{{p},{q}}} = {pretty}   d_{r} = {d}")

print("\nfirst page with d_1 is the normalized chain complex:",
      heart_check(A).ok)
print("collapse at E_infinity:",
      {pq: list(sq.orders) for pq, sq in S.infinity().items() if sq.ngens})

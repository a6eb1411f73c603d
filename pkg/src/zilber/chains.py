"""Chain complexes of finitely generated free ℤ-modules, tensor products
with Koszul signs, chain maps, and homology via Smith normal form.

Homology values are reported as AbelianGroupInvariants: a free rank plus the
chain of invariant factors (each >= 2, each dividing the next).
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from . import intlinalg as la
from .intlinalg import Subquotient

CHAIN_FORMAT = "chain"
CHAIN_VERSION = 1


@dataclass(frozen=True)
class AbelianGroupInvariants:
    free_rank: int
    torsion: tuple

    def __post_init__(self):
        for a, b in zip(self.torsion, self.torsion[1:]):
            if b % a:
                raise ValueError("torsion coefficients must form a divisibility chain")
        if any(t < 2 for t in self.torsion):
            raise ValueError("torsion coefficients must be >= 2")

    def __str__(self):
        parts = []
        if self.free_rank:
            parts.append(f"Z^{self.free_rank}" if self.free_rank > 1 else "Z")
        parts.extend(f"Z/{t}" for t in self.torsion)
        return " + ".join(parts) if parts else "0"

    @property
    def is_trivial(self):
        return self.free_rank == 0 and not self.torsion

    def direct_sum(self, other):
        # merge invariant factors of a direct sum back into a divisibility chain
        from math import gcd
        factors = list(self.torsion) + list(other.torsion)
        primary = {}
        for f in factors:
            n = f
            p = 2
            while p * p <= n:
                if n % p == 0:
                    e = 0
                    while n % p == 0:
                        n //= p
                        e += 1
                    primary.setdefault(p, []).append(p ** e)
                p += 1
            if n > 1:
                primary.setdefault(n, []).append(n)
        chains = []
        for p, powers in primary.items():
            powers.sort()
            chains.append(powers)
        width = max((len(c) for c in chains), default=0)
        out = [1] * width
        for c in chains:
            for i, v in enumerate(reversed(c)):
                out[width - 1 - i] *= v
        return AbelianGroupInvariants(self.free_rank + other.free_rank,
                                      tuple(v for v in out if v > 1))


def invariants_of_subquotient(sq):
    return AbelianGroupInvariants(sq.free_rank, tuple(sq.torsion))


class ChainComplex:
    """A nonnegatively graded chain complex of free ℤ-modules, zero above
    top_degree.  diffs[n] is the matrix of d_n : C_n -> C_{n-1} (n >= 1)."""

    def __init__(self, ranks, diffs, check=True):
        self.ranks = list(ranks)
        self.top_degree = len(self.ranks) - 1
        self.diffs = dict(diffs)
        for n in range(1, self.top_degree + 1):
            if n not in self.diffs:
                self.diffs[n] = la.zeros(self.ranks[n - 1], self.ranks[n])
        if check:
            self._validate()

    def rank(self, n):
        if 0 <= n <= self.top_degree:
            return self.ranks[n]
        return 0

    def diff(self, n):
        """d_n : C_n -> C_{n-1}; zero matrix outside the stored range."""
        if 1 <= n <= self.top_degree:
            return self.diffs[n]
        return la.zeros(self.rank(n - 1), self.rank(n))

    def _validate(self):
        for n in range(1, self.top_degree + 1):
            if not la.shape_ok(self.diffs[n], self.ranks[n - 1], self.ranks[n]):
                raise ValueError(f"differential d_{n} has wrong shape")
        for n in range(2, self.top_degree + 1):
            if not la.is_zero(la.mat_mul(self.diffs[n - 1], self.diffs[n])):
                raise ValueError(f"d_{n-1} ∘ d_{n} != 0")

    def __eq__(self, other):
        return (isinstance(other, ChainComplex) and self.ranks == other.ranks
                and all(la.mat_eq(self.diff(n), other.diff(n))
                        for n in range(1, self.top_degree + 1)))

    def euler_characteristic(self):
        return sum((-1) ** n * r for n, r in enumerate(self.ranks))

    def to_payload(self):
        return {
            "format": CHAIN_FORMAT,
            "version": CHAIN_VERSION,
            "ranks": self.ranks,
            "differentials": {str(n): self.diffs[n]
                              for n in range(1, self.top_degree + 1)},
        }

    def save(self, path):
        with open(path, "w") as fh:
            json.dump(self.to_payload(), fh, sort_keys=True, indent=1)
            fh.write("\n")

    @classmethod
    def from_payload(cls, payload):
        if payload.get("format") != CHAIN_FORMAT:
            raise ValueError("not a chain payload")
        diffs = {int(n): M for n, M in payload["differentials"].items()}
        return cls(payload["ranks"], diffs)

    @classmethod
    def load(cls, path):
        with open(path) as fh:
            return cls.from_payload(json.load(fh))


def zero_complex(top_degree=0):
    return ChainComplex([0] * (top_degree + 1), {})


def unit_complex():
    """ℤ concentrated in degree 0."""
    return ChainComplex([1], {})


class ChainMap:
    """A degreewise integer matrix commuting with the differentials."""

    def __init__(self, source, target, mats, check=True):
        self.source = source
        self.target = target
        self.mats = dict(mats)
        top = max(source.top_degree, target.top_degree)
        for n in range(top + 1):
            if n not in self.mats:
                self.mats[n] = la.zeros(target.rank(n), source.rank(n))
        if check:
            self._validate()

    def mat(self, n):
        return self.mats.get(n, la.zeros(self.target.rank(n), self.source.rank(n)))

    def _validate(self):
        top = max(self.source.top_degree, self.target.top_degree)
        for n in range(top + 1):
            if not la.shape_ok(self.mats[n], self.target.rank(n), self.source.rank(n)):
                raise ValueError(f"chain map component {n} has wrong shape")
        for n in range(1, top + 1):
            lhs = la.mat_mul_shaped(
                self.mat(n - 1), (self.target.rank(n - 1), self.source.rank(n - 1)),
                self.source.diff(n), (self.source.rank(n - 1), self.source.rank(n)))
            rhs = la.mat_mul_shaped(
                self.target.diff(n), (self.target.rank(n - 1), self.target.rank(n)),
                self.mat(n), (self.target.rank(n), self.source.rank(n)))
            if lhs != rhs:
                raise ValueError(f"chain map does not commute with d at degree {n}")

    def compose(self, other):
        """self ∘ other."""
        top = max(self.target.top_degree, other.source.top_degree)
        mats = {n: la.mat_mul(self.mat(n), other.mat(n)) for n in range(top + 1)}
        return ChainMap(other.source, self.target, mats, check=False)


def identity_chain_map(C):
    return ChainMap(C, C, {n: la.identity(C.rank(n)) for n in range(C.top_degree + 1)},
                    check=False)


# ---------------------------------------------------------------------------
# homology


def smith_normal_form(M):
    """Re-exported for the public surface of this module."""
    return la.smith_normal_form(M)


def homology_subquotients(C):
    """Per degree, the Subquotient ker d_n / im d_{n+1} (with lifts)."""
    out = []
    for n in range(C.top_degree + 1):
        rn = C.rank(n)
        if n == 0:
            zgens = la.identity(rn)
        else:
            cols = la.kernel_basis(C.diff(n), ncols=rn)
            zgens = la.from_columns(cols, rows=rn)
        bcols = la.image_basis(C.diff(n + 1)) if n < C.top_degree else []
        bgens = la.from_columns(bcols, rows=rn) if bcols else [[] for _ in range(rn)]
        out.append(Subquotient(rn, zgens, bgens))
    return out


def homology(C):
    """H_n(C) in invariant-factor form, for 0 <= n <= top_degree."""
    return [invariants_of_subquotient(sq) for sq in homology_subquotients(C)]


def subquotient_homology(ambient_dim, z_gens, b_gens):
    """Canonical invariants of Z/B for subgroups of ℤ^ambient_dim given by
    generator columns; raises if B is not contained in Z."""
    return invariants_of_subquotient(Subquotient(ambient_dim, z_gens, b_gens))


def induced_homology_matrices(f):
    """Per degree n, the matrix of H_n(f) in the canonical cyclic-generator
    coordinates of source and target homology (columns indexed by source
    generators)."""
    top = max(f.source.top_degree, f.target.top_degree)
    hs = homology_subquotients(f.source)
    ht = homology_subquotients(f.target)
    out = []
    for n in range(top + 1):
        sq_s = hs[n] if n < len(hs) else la.Subquotient(0, [], [])
        sq_t = ht[n] if n < len(ht) else la.Subquotient(0, [], [])
        M = la.zeros(sq_t.ngens, sq_s.ngens)
        for col, lift in enumerate(sq_s.lifts):
            image = la.mat_vec(f.mat(n), lift) if f.target.rank(n) else []
            for row, c in enumerate(sq_t.coords(image)):
                M[row][col] = c
        out.append(M)
    return out


def is_homology_isomorphism(f):
    """True if a chain map induces an isomorphism on every homology group.

    Checks that the invariant factors agree degreewise and that the induced
    map is surjective (for finitely generated abelian groups of the same
    isomorphism type, surjective implies bijective): the cokernel of
    [induced matrix | torsion relations] must vanish."""
    top = max(f.source.top_degree, f.target.top_degree)
    hs = homology_subquotients(f.source)
    ht = homology_subquotients(f.target)
    mats = induced_homology_matrices(f)
    for n in range(top + 1):
        sq_s = hs[n] if n < len(hs) else la.Subquotient(0, [], [])
        sq_t = ht[n] if n < len(ht) else la.Subquotient(0, [], [])
        if sq_s.orders != sq_t.orders:
            return False
        g = sq_t.ngens
        if g == 0:
            continue
        rel = la.zeros(g, 0)
        for i, o in enumerate(sq_t.orders):
            if o:
                col = [0] * g
                col[i] = o
                rel = la.hstack(rel, la.from_columns([col], rows=g))
        aug = la.hstack(mats[n], rel)
        S = la.smith_normal_form(aug)[1]
        diag = [S[i][i] for i in range(min(la.dims(S)))]
        if sum(1 for d in diag if d) < g or any(abs(d) != 1 for d in diag if d):
            return False
    return True


def hom_rank(C, D):
    """Free rank of the group of chain maps C -> D."""
    top = max(C.top_degree, D.top_degree)
    # unknowns: entries of f_n (D.rank(n) x C.rank(n)) for n = 0..top
    offsets = {}
    total = 0
    for n in range(top + 1):
        offsets[n] = total
        total += D.rank(n) * C.rank(n)
    rows = []
    for n in range(1, top + 1):
        # f_{n-1} d^C_n - d^D_n f_n = 0 : one equation per (i, j)
        dc = C.diff(n)
        dd = D.diff(n)
        for i in range(D.rank(n - 1)):
            for j in range(C.rank(n)):
                row = [0] * total
                for k in range(C.rank(n - 1)):
                    row[offsets[n - 1] + i * C.rank(n - 1) + k] += dc[k][j]
                for k in range(D.rank(n)):
                    row[offsets[n] + k * C.rank(n) + j] -= dd[i][k]
                rows.append(row)
    if total == 0:
        return 0
    if not rows:
        return total
    return total - la.rank(rows)


# ---------------------------------------------------------------------------
# tensor products


class TensorBasis:
    """Bookkeeping for the basis of (C ⊗ D): in degree n the basis is the
    list of (p, i, q, j) with p + q = n, ordered with p descending and then
    row-major on (i, j)."""

    def __init__(self, C, D, top_degree=None):
        self.C = C
        self.D = D
        if top_degree is None:
            top_degree = C.top_degree + D.top_degree
        self.top_degree = top_degree
        self.basis = []
        self.position = []
        for n in range(top_degree + 1):
            bn = []
            pos = {}
            for p in range(min(n, C.top_degree), -1, -1):
                q = n - p
                if q > D.top_degree:
                    continue
                for i in range(C.rank(p)):
                    for j in range(D.rank(q)):
                        pos[(p, i, q, j)] = len(bn)
                        bn.append((p, i, q, j))
            self.basis.append(bn)
            self.position.append(pos)

    def index(self, n, p, i, q, j):
        return self.position[n][(p, i, q, j)]


def tensor(C, D, top_degree=None):
    """(C ⊗ D, basis): Koszul-signed tensor product, optionally truncated.

    d(x⊗y) = dx⊗y + (-1)^{|x|} x⊗dy.
    """
    tb = TensorBasis(C, D, top_degree)
    ranks = [len(tb.basis[n]) for n in range(tb.top_degree + 1)]
    diffs = {}
    for n in range(1, tb.top_degree + 1):
        M = la.zeros(ranks[n - 1], ranks[n])
        for col, (p, i, q, j) in enumerate(tb.basis[n]):
            if p >= 1:
                dc = C.diff(p)
                for i2 in range(C.rank(p - 1)):
                    v = dc[i2][i]
                    if v:
                        M[tb.index(n - 1, p - 1, i2, q, j)][col] += v
            if q >= 1:
                dd = D.diff(q)
                sign = -1 if p % 2 else 1
                for j2 in range(D.rank(q - 1)):
                    v = dd[j2][j]
                    if v:
                        M[tb.index(n - 1, p, i, q - 1, j2)][col] += sign * v
        diffs[n] = M
    E = ChainComplex(ranks, diffs)
    return E, tb


def tensor_map(f, g, tb_source, tb_target):
    """(f ⊗ g) between tensor complexes with the given bases."""
    mats = {}
    for n in range(tb_source.top_degree + 1):
        rows = len(tb_target.basis[n]) if n <= tb_target.top_degree else 0
        M = la.zeros(rows, len(tb_source.basis[n]))
        if rows:
            for col, (p, i, q, j) in enumerate(tb_source.basis[n]):
                fm = f.mat(p)
                gm = g.mat(q)
                for i2 in range(len(fm)):
                    a = fm[i2][i]
                    if a:
                        for j2 in range(len(gm)):
                            b = gm[j2][j]
                            if b:
                                M[tb_target.index(n, p, i2, q, j2)][col] += a * b
        mats[n] = M
    return mats


def direct_sum(C, D):
    top = max(C.top_degree, D.top_degree)
    ranks = [C.rank(n) + D.rank(n) for n in range(top + 1)]
    diffs = {}
    for n in range(1, top + 1):
        M = la.zeros(ranks[n - 1], ranks[n])
        a = C.diff(n)
        b = D.diff(n)
        for i in range(C.rank(n - 1)):
            for j in range(C.rank(n)):
                M[i][j] = a[i][j]
        for i in range(D.rank(n - 1)):
            for j in range(D.rank(n)):
                M[C.rank(n - 1) + i][C.rank(n) + j] = b[i][j]
        diffs[n] = M
    return ChainComplex(ranks, diffs)


def suspension_data(C):
    """Total free rank and entry bound, used by tests sizing random inputs."""
    total = sum(C.ranks)
    bound = max((abs(x) for n in range(1, C.top_degree + 1)
                 for row in C.diff(n) for x in row), default=0)
    return total, bound

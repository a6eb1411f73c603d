"""Truncated simplicial sets, bisimplicial sets, simplicial abelian groups,
products, skeleta, and diagonal realization.

Every object is truncated at a stored dim_bound D.  Constructors verify all
simplicial identities; invalid operator data raises SimplicialIdentityError.
Simplex identifiers are arbitrary hashables; serialization replaces them by
level indices.
"""

from __future__ import annotations

import json

from . import intlinalg as la
from .delta import (MonotoneMap, enumerate_monotone, epi_mono_factorize,
                    factor_into_cofaces, factor_into_codegeneracies)


class SimplicialIdentityError(ValueError):
    """Raised when operator data violates a simplicial identity."""


SSIMP_FORMAT = "ssimp"
SSIMP_VERSION = 1


class SimplicialSet:
    """A D-truncated simplicial set.

    levels[k] is the list of k-simplices; faces[(k, i)] and degens[(k, i)]
    are total dicts on levels[k] landing in levels k-1 and k+1.
    """

    def __init__(self, dim_bound, levels, faces, degens, check=True):
        self.dim_bound = dim_bound
        self.levels = [list(lv) for lv in levels]
        if len(self.levels) != dim_bound + 1:
            raise ValueError("levels must have dim_bound + 1 entries")
        self.faces = faces
        self.degens = degens
        self.index = [{x: i for i, x in enumerate(lv)} for lv in self.levels]
        self._degenerate = None
        if check:
            self._validate()
        self.skeletal_bound = self._observed_skeletal_bound()

    # -- basic access -------------------------------------------------------

    def face(self, k, i, x):
        return self.faces[(k, i)][x]

    def degen(self, k, i, x):
        return self.degens[(k, i)][x]

    def level_size(self, k):
        return len(self.levels[k])

    def degenerate_set(self, k):
        """The set of degenerate k-simplices (images of degeneracies)."""
        if self._degenerate is None:
            self._degenerate = [set() for _ in range(self.dim_bound + 1)]
            for k2 in range(1, self.dim_bound + 1):
                for i in range(k2):
                    self._degenerate[k2].update(self.degens[(k2 - 1, i)].values())
        return self._degenerate[k]

    def is_degenerate(self, k, x):
        return x in self.degenerate_set(k)

    def nondegenerate_counts(self):
        return tuple(len(self.levels[k]) - len(self.degenerate_set(k))
                     for k in range(self.dim_bound + 1))

    def _observed_skeletal_bound(self):
        n = 0
        for k in range(self.dim_bound, -1, -1):
            if len(self.levels[k]) > len(self.degenerate_set(k)):
                n = k
                break
        return n

    # -- validation ---------------------------------------------------------

    def _validate(self):
        D = self.dim_bound
        lv_sets = [set(lv) for lv in self.levels]
        for k in range(1, D + 1):
            for i in range(k + 1):
                f = self.faces.get((k, i))
                if f is None or set(f) != lv_sets[k]:
                    raise SimplicialIdentityError(f"face ({k},{i}) not total")
                if not set(f.values()) <= lv_sets[k - 1]:
                    raise SimplicialIdentityError(f"face ({k},{i}) lands outside level {k-1}")
        for k in range(D):
            for i in range(k + 1):
                s = self.degens.get((k, i))
                if s is None or set(s) != lv_sets[k]:
                    raise SimplicialIdentityError(f"degeneracy ({k},{i}) not total")
                if not set(s.values()) <= lv_sets[k + 1]:
                    raise SimplicialIdentityError(f"degeneracy ({k},{i}) lands outside level {k+1}")
        # d_i d_j = d_{j-1} d_i  (i < j)
        for k in range(2, D + 1):
            for j in range(1, k + 1):
                for i in range(j):
                    fa = self.faces[(k, j)]
                    fb = self.faces[(k - 1, i)]
                    fc = self.faces[(k, i)]
                    fd = self.faces[(k - 1, j - 1)]
                    for x in self.levels[k]:
                        if fb[fa[x]] != fd[fc[x]]:
                            raise SimplicialIdentityError(
                                f"d_{i} d_{j} != d_{j-1} d_{i} at level {k}")
        # s_i s_j = s_{j+1} s_i  (i <= j)
        for k in range(D - 1):
            for j in range(k + 1):
                for i in range(j + 1):
                    sa = self.degens[(k, j)]
                    sb = self.degens[(k + 1, i)]
                    sc = self.degens[(k, i)]
                    sd = self.degens[(k + 1, j + 1)]
                    for x in self.levels[k]:
                        if sb[sa[x]] != sd[sc[x]]:
                            raise SimplicialIdentityError(
                                f"s_{i} s_{j} != s_{j+1} s_{i} at level {k}")
        # mixed identities: d_i s_j
        for k in range(D):
            for j in range(k + 1):
                s = self.degens[(k, j)]
                for i in range(k + 2):
                    f = self.faces[(k + 1, i)]
                    if i == j or i == j + 1:
                        for x in self.levels[k]:
                            if f[s[x]] != x:
                                raise SimplicialIdentityError(
                                    f"d_{i} s_{j} != id at level {k}")
                    elif i < j:
                        if k == 0:
                            continue
                        sb = self.degens[(k - 1, j - 1)]
                        fb = self.faces[(k, i)]
                        for x in self.levels[k]:
                            if f[s[x]] != sb[fb[x]]:
                                raise SimplicialIdentityError(
                                    f"d_{i} s_{j} != s_{j-1} d_{i} at level {k}")
                    else:  # i > j + 1
                        if k == 0:
                            continue
                        sb = self.degens[(k - 1, j)]
                        fb = self.faces[(k, i - 1)]
                        for x in self.levels[k]:
                            if f[s[x]] != sb[fb[x]]:
                                raise SimplicialIdentityError(
                                    f"d_{i} s_{j} != s_{j} d_{i-1} at level {k}")

    # -- operators from arbitrary monotone maps -----------------------------

    def apply_map(self, f, x):
        """X(f)(x) for f : [m] -> [k] monotone and x a k-simplex."""
        epi, mono = epi_mono_factorize(f)
        level = f.codomain_top
        for i in factor_into_cofaces(mono):
            x = self.faces[(level, i)][x]
            level -= 1
        word = factor_into_codegeneracies(epi)
        for j in reversed(word):
            x = self.degens[(level, j)][x]
            level += 1
        return x

    # -- serialization ------------------------------------------------------

    def to_payload(self):
        payload = {
            "format": SSIMP_FORMAT,
            "version": SSIMP_VERSION,
            "dim_bound": self.dim_bound,
            "levels": [len(lv) for lv in self.levels],
            "faces": {},
            "degens": {},
        }
        for (k, i), table in sorted(self.faces.items()):
            payload["faces"][f"{k},{i}"] = [
                self.index[k - 1][table[x]] for x in self.levels[k]]
        for (k, i), table in sorted(self.degens.items()):
            payload["degens"][f"{k},{i}"] = [
                self.index[k + 1][table[x]] for x in self.levels[k]]
        return payload

    def save(self, path):
        with open(path, "w") as fh:
            json.dump(self.to_payload(), fh, sort_keys=True, indent=1)
            fh.write("\n")

    @classmethod
    def from_payload(cls, payload):
        if payload.get("format") != SSIMP_FORMAT:
            raise ValueError("not an ssimp payload")
        D = payload["dim_bound"]
        levels = [list(range(n)) for n in payload["levels"]]
        faces = {}
        for key, arr in payload["faces"].items():
            k, i = (int(t) for t in key.split(","))
            faces[(k, i)] = {x: arr[x] for x in levels[k]}
        degens = {}
        for key, arr in payload["degens"].items():
            k, i = (int(t) for t in key.split(","))
            degens[(k, i)] = {x: arr[x] for x in levels[k]}
        return cls(D, levels, faces, degens)

    @classmethod
    def load(cls, path):
        with open(path) as fh:
            return cls.from_payload(json.load(fh))

    def __eq__(self, other):
        return (isinstance(other, SimplicialSet)
                and self.dim_bound == other.dim_bound
                and self.levels == other.levels
                and self.faces == other.faces
                and self.degens == other.degens)


class SimplicialMap:
    """A map of simplicial sets: one dict per level, commuting with all
    operators."""

    def __init__(self, source, target, components, check=True):
        self.source = source
        self.target = target
        self.components = components
        if check:
            self._validate()

    def _validate(self):
        X, Y = self.source, self.target
        if X.dim_bound != Y.dim_bound:
            raise ValueError("dim_bound mismatch")
        for k in range(X.dim_bound + 1):
            comp = self.components[k]
            if set(comp) != set(X.levels[k]):
                raise ValueError(f"component {k} not total")
        for k in range(1, X.dim_bound + 1):
            for i in range(k + 1):
                for x in X.levels[k]:
                    if self.components[k - 1][X.face(k, i, x)] != \
                            Y.face(k, i, self.components[k][x]):
                        raise ValueError(f"map does not commute with d_{i} at level {k}")
        for k in range(X.dim_bound):
            for i in range(k + 1):
                for x in X.levels[k]:
                    if self.components[k + 1][X.degen(k, i, x)] != \
                            Y.degen(k, i, self.components[k][x]):
                        raise ValueError(f"map does not commute with s_{i} at level {k}")

    def __call__(self, k, x):
        return self.components[k][x]

    def compose(self, other):
        """self ∘ other."""
        comps = [{x: self.components[k][other.components[k][x]]
                  for x in other.source.levels[k]}
                 for k in range(other.source.dim_bound + 1)]
        return SimplicialMap(other.source, self.target, comps, check=False)


# ---------------------------------------------------------------------------
# constructions on simplicial sets


def standard_simplex(n, dim_bound):
    """The standard n-simplex truncated at dim_bound; k-simplices are the
    value tuples of monotone maps [k] -> [n]."""
    levels = [[f.values for f in enumerate_monotone(k, n)]
              for k in range(dim_bound + 1)]
    faces = {}
    degens = {}
    for k in range(1, dim_bound + 1):
        for i in range(k + 1):
            faces[(k, i)] = {v: v[:i] + v[i + 1:] for v in levels[k]}
    for k in range(dim_bound):
        for i in range(k + 1):
            degens[(k, i)] = {v: v[:i] + (v[i],) + v[i:] for v in levels[k]}
    return SimplicialSet(dim_bound, levels, faces, degens)


def point(dim_bound):
    return standard_simplex(0, dim_bound)


def circle(dim_bound):
    """The simplicial circle Δ¹ with its boundary collapsed: one vertex, one
    nondegenerate edge.  k-simplices are the nonconstant monotone maps
    [k] -> [1] plus the collapsed basepoint '*'."""
    full = [[f.values for f in enumerate_monotone(k, 1)]
            for k in range(dim_bound + 1)]

    def collapse(v):
        return "*" if len(set(v)) == 1 else v

    levels = [sorted({collapse(v) for v in full[k]}, key=str)
              for k in range(dim_bound + 1)]
    faces = {}
    degens = {}
    for k in range(1, dim_bound + 1):
        table = {}
        for i in range(k + 1):
            table = {}
            for x in levels[k]:
                v = x if x != "*" else tuple([0] * (k + 1))
                table[x] = collapse(v[:i] + v[i + 1:])
            faces[(k, i)] = table
    for k in range(dim_bound):
        for i in range(k + 1):
            table = {}
            for x in levels[k]:
                v = x if x != "*" else tuple([0] * (k + 1))
                table[x] = collapse(v[:i] + (v[i],) + v[i:])
            degens[(k, i)] = table
    return SimplicialSet(dim_bound, levels, faces, degens)


def product(X, Y):
    """Levelwise Cartesian product with diagonal operators."""
    if X.dim_bound != Y.dim_bound:
        raise ValueError("product requires equal dim_bound; truncate first")
    D = X.dim_bound
    levels = [[(x, y) for x in X.levels[k] for y in Y.levels[k]]
              for k in range(D + 1)]
    faces = {}
    degens = {}
    for k in range(1, D + 1):
        for i in range(k + 1):
            fx, fy = X.faces[(k, i)], Y.faces[(k, i)]
            faces[(k, i)] = {(x, y): (fx[x], fy[y]) for x, y in levels[k]}
    for k in range(D):
        for i in range(k + 1):
            sx, sy = X.degens[(k, i)], Y.degens[(k, i)]
            degens[(k, i)] = {(x, y): (sx[x], sy[y]) for x, y in levels[k]}
    return SimplicialSet(D, levels, faces, degens)


def skeleton(X, n):
    """The n-skeleton as a sub-simplicial-set (same simplex identifiers)."""
    if n > X.dim_bound:
        raise ValueError("skeleton degree exceeds dim_bound")
    D = X.dim_bound
    keep = [set(X.levels[k]) for k in range(min(n, D) + 1)]
    for k in range(n + 1, D + 1):
        prev = keep[k - 1]
        cur = set()
        for i in range(k):
            s = X.degens[(k - 1, i)]
            cur.update(s[x] for x in prev)
        keep.append(cur)
    levels = [[x for x in X.levels[k] if x in keep[k]] for k in range(D + 1)]
    faces = {}
    degens = {}
    for k in range(1, D + 1):
        for i in range(k + 1):
            f = X.faces[(k, i)]
            table = {x: f[x] for x in levels[k]}
            if any(v not in keep[k - 1] for v in table.values()):
                raise SimplicialIdentityError("skeleton not closed under faces")
            faces[(k, i)] = table
    for k in range(D):
        for i in range(k + 1):
            s = X.degens[(k, i)]
            degens[(k, i)] = {x: s[x] for x in levels[k]}
    return SimplicialSet(D, levels, faces, degens, check=False)


class CheckCertificate:
    """Outcome of a finite verification: pass flag plus a witness on failure."""

    def __init__(self, ok, witness=None, detail=""):
        self.ok = ok
        self.witness = witness
        self.detail = detail

    def __bool__(self):
        return self.ok

    def to_dict(self):
        return {"pass": self.ok, "witness": repr(self.witness) if self.witness is not None else None,
                "detail": self.detail}


def skeleton_product_check(X, Y, p, q, n):
    """Verify sk_p X × sk_q Y ⊆ sk_n(X×Y) and that sk_p X × sk_q Y is
    n-skeletal (its n-skeleton is itself).  Requires n <= D; for n < p + q
    the containment can fail, in which case the witness is returned in a
    failing certificate."""
    if not (0 <= n <= X.dim_bound):
        raise ValueError("requires 0 <= n <= dim_bound")
    P = product(X, Y)
    A = product(skeleton(X, p), skeleton(Y, q))
    skP = skeleton(P, n)
    sk_sets = [set(skP.levels[k]) for k in range(P.dim_bound + 1)]
    for k in range(P.dim_bound + 1):
        for z in A.levels[k]:
            if z not in sk_sets[k]:
                return CheckCertificate(False, (k, z),
                                        f"simplex at level {k} outside sk_{n}(X×Y)")
    skA = skeleton(A, n)
    for k in range(P.dim_bound + 1):
        if set(skA.levels[k]) != set(A.levels[k]):
            missing = set(A.levels[k]) - set(skA.levels[k])
            return CheckCertificate(False, (k, sorted(missing, key=repr)[0]),
                                    f"sk_p X × sk_q Y not {n}-skeletal at level {k}")
    return CheckCertificate(True)


# ---------------------------------------------------------------------------
# bisimplicial sets


class BiSimplicialSet:
    """A D-truncated bisimplicial set: levels[(k, r)] with horizontal
    operators acting on k and vertical ones on r."""

    def __init__(self, dim_bound, levels, hfaces, hdegens, vfaces, vdegens, check=True):
        self.dim_bound = dim_bound
        self.levels = levels
        self.hfaces = hfaces
        self.hdegens = hdegens
        self.vfaces = vfaces
        self.vdegens = vdegens
        if check:
            self._validate()

    def _row(self, r):
        """Row r as a simplicial set in the horizontal direction."""
        D = self.dim_bound
        levels = [self.levels[(k, r)] for k in range(D + 1)]
        faces = {(k, i): self.hfaces[(k, r, i)] for k in range(1, D + 1)
                 for i in range(k + 1)}
        degens = {(k, i): self.hdegens[(k, r, i)] for k in range(D)
                  for i in range(k + 1)}
        return SimplicialSet(D, levels, faces, degens)

    def _column(self, k):
        D = self.dim_bound
        levels = [self.levels[(k, r)] for r in range(D + 1)]
        faces = {(r, i): self.vfaces[(k, r, i)] for r in range(1, D + 1)
                 for i in range(r + 1)}
        degens = {(r, i): self.vdegens[(k, r, i)] for r in range(D)
                  for i in range(r + 1)}
        return SimplicialSet(D, levels, faces, degens)

    def _validate(self):
        D = self.dim_bound
        for r in range(D + 1):
            self._row(r)
        for k in range(D + 1):
            self._column(k)
        # horizontal and vertical operators commute
        for k in range(D + 1):
            for r in range(D + 1):
                for x in self.levels[(k, r)]:
                    for i in range(k + 1):
                        if k >= 1:
                            for j in range(r + 1):
                                if r >= 1:
                                    a = self.vfaces[(k - 1, r, j)][self.hfaces[(k, r, i)][x]]
                                    b = self.hfaces[(k, r - 1, i)][self.vfaces[(k, r, j)][x]]
                                    if a != b:
                                        raise SimplicialIdentityError(
                                            "horizontal and vertical faces do not commute")
                    for i in range(k + 1):
                        if k < D:
                            for j in range(r + 1):
                                if r < D:
                                    a = self.vdegens[(k + 1, r, j)][self.hdegens[(k, r, i)][x]]
                                    b = self.hdegens[(k, r + 1, i)][self.vdegens[(k, r, j)][x]]
                                    if a != b:
                                        raise SimplicialIdentityError(
                                            "horizontal and vertical degeneracies do not commute")


def external_product(X, Y):
    """The bisimplicial set (k, r) -> X_k × Y_r."""
    if X.dim_bound != Y.dim_bound:
        raise ValueError("dim_bound mismatch")
    D = X.dim_bound
    levels = {(k, r): [(x, y) for x in X.levels[k] for y in Y.levels[r]]
              for k in range(D + 1) for r in range(D + 1)}
    hfaces, hdegens, vfaces, vdegens = {}, {}, {}, {}
    for k in range(D + 1):
        for r in range(D + 1):
            for i in range(k + 1):
                if k >= 1:
                    f = X.faces[(k, i)]
                    hfaces[(k, r, i)] = {(x, y): (f[x], y) for x, y in levels[(k, r)]}
                if k < D:
                    s = X.degens[(k, i)]
                    hdegens[(k, r, i)] = {(x, y): (s[x], y) for x, y in levels[(k, r)]}
            for j in range(r + 1):
                if r >= 1:
                    f = Y.faces[(r, j)]
                    vfaces[(k, r, j)] = {(x, y): (x, f[y]) for x, y in levels[(k, r)]}
                if r < D:
                    s = Y.degens[(r, j)]
                    vdegens[(k, r, j)] = {(x, y): (x, s[y]) for x, y in levels[(k, r)]}
    return BiSimplicialSet(D, levels, hfaces, hdegens, vfaces, vdegens)


def diagonal(B):
    """The diagonal simplicial set of a bisimplicial set: level n is
    B_{n,n}, with operators the horizontal-then-vertical composites."""
    D = B.dim_bound
    levels = [list(B.levels[(n, n)]) for n in range(D + 1)]
    faces = {}
    degens = {}
    for n in range(1, D + 1):
        for i in range(n + 1):
            h = B.hfaces[(n, n, i)]
            v = B.vfaces[(n - 1, n, i)]
            faces[(n, i)] = {x: v[h[x]] for x in levels[n]}
    for n in range(D):
        for i in range(n + 1):
            h = B.hdegens[(n, n, i)]
            v = B.vdegens[(n + 1, n, i)]
            degens[(n, i)] = {x: v[h[x]] for x in levels[n]}
    return SimplicialSet(D, levels, faces, degens)


# ---------------------------------------------------------------------------
# simplicial abelian groups


class SimplicialAbelianGroup:
    """A D-truncated simplicial abelian group: free ℤ-modules per level with
    integer matrices for faces and degeneracies."""

    def __init__(self, dim_bound, ranks, face_mats, degen_mats, check=True):
        self.dim_bound = dim_bound
        self.ranks = list(ranks)
        if len(self.ranks) != dim_bound + 1:
            raise ValueError("ranks must have dim_bound + 1 entries")
        self.face_mats = face_mats
        self.degen_mats = degen_mats
        if check:
            self._validate()

    def face(self, k, i):
        return self.face_mats[(k, i)]

    def degen(self, k, i):
        return self.degen_mats[(k, i)]

    def _validate(self):
        D = self.dim_bound
        for k in range(1, D + 1):
            for i in range(k + 1):
                M = self.face_mats.get((k, i))
                if M is None or not la.shape_ok(M, self.ranks[k - 1], self.ranks[k]):
                    raise SimplicialIdentityError(f"face matrix ({k},{i}) has wrong shape")
        for k in range(D):
            for i in range(k + 1):
                M = self.degen_mats.get((k, i))
                if M is None or not la.shape_ok(M, self.ranks[k + 1], self.ranks[k]):
                    raise SimplicialIdentityError(f"degeneracy matrix ({k},{i}) has wrong shape")
        r = self.ranks

        def fshape(k):
            return (r[k - 1], r[k])

        def sshape(k):
            return (r[k + 1], r[k])

        for k in range(2, D + 1):
            for j in range(1, k + 1):
                for i in range(j):
                    lhs = la.mat_mul_shaped(self.face_mats[(k - 1, i)], fshape(k - 1),
                                            self.face_mats[(k, j)], fshape(k))
                    rhs = la.mat_mul_shaped(self.face_mats[(k - 1, j - 1)], fshape(k - 1),
                                            self.face_mats[(k, i)], fshape(k))
                    if not la.mat_eq(lhs, rhs):
                        raise SimplicialIdentityError(
                            f"d_{i} d_{j} != d_{j-1} d_{i} at level {k}")
        for k in range(D - 1):
            for j in range(k + 1):
                for i in range(j + 1):
                    lhs = la.mat_mul_shaped(self.degen_mats[(k + 1, i)], sshape(k + 1),
                                            self.degen_mats[(k, j)], sshape(k))
                    rhs = la.mat_mul_shaped(self.degen_mats[(k + 1, j + 1)], sshape(k + 1),
                                            self.degen_mats[(k, i)], sshape(k))
                    if not la.mat_eq(lhs, rhs):
                        raise SimplicialIdentityError(
                            f"s_{i} s_{j} != s_{j+1} s_{i} at level {k}")
        for k in range(D):
            for j in range(k + 1):
                S = self.degen_mats[(k, j)]
                for i in range(k + 2):
                    F = self.face_mats[(k + 1, i)]
                    got = la.mat_mul_shaped(F, fshape(k + 1), S, sshape(k))
                    if i == j or i == j + 1:
                        want = la.identity(self.ranks[k])
                    elif i < j:
                        want = (la.mat_mul_shaped(self.degen_mats[(k - 1, j - 1)], sshape(k - 1),
                                                  self.face_mats[(k, i)], fshape(k))
                                if k >= 1 else None)
                    else:
                        want = (la.mat_mul_shaped(self.degen_mats[(k - 1, j)], sshape(k - 1),
                                                  self.face_mats[(k, i - 1)], fshape(k))
                                if k >= 1 else None)
                    if want is not None and not la.mat_eq(got, want):
                        raise SimplicialIdentityError(
                            f"mixed identity d_{i} s_{j} fails at level {k}")

    def operator_matrix(self, f):
        """The matrix of X(f) : X_{f.codomain_top} -> X_{f.domain_top} for an
        arbitrary monotone map f."""
        epi, mono = epi_mono_factorize(f)
        level = f.codomain_top
        cols = self.ranks[level]
        M = la.identity(cols)
        for i in factor_into_cofaces(mono):
            M = la.mat_mul_shaped(self.face_mats[(level, i)],
                                  (self.ranks[level - 1], self.ranks[level]),
                                  M, (self.ranks[level], cols))
            level -= 1
        for j in reversed(factor_into_codegeneracies(epi)):
            M = la.mat_mul_shaped(self.degen_mats[(level, j)],
                                  (self.ranks[level + 1], self.ranks[level]),
                                  M, (self.ranks[level], cols))
            level += 1
        return M


def free_abelian(X):
    """ℤ[X]: rank |X_k| per level, operators as 0/1 matrices in the order of
    X.levels."""
    D = X.dim_bound
    ranks = [len(X.levels[k]) for k in range(D + 1)]
    face_mats = {}
    degen_mats = {}
    for k in range(1, D + 1):
        for i in range(k + 1):
            M = la.zeros(ranks[k - 1], ranks[k])
            f = X.faces[(k, i)]
            for j, x in enumerate(X.levels[k]):
                M[X.index[k - 1][f[x]]][j] = 1
            face_mats[(k, i)] = M
    for k in range(D):
        for i in range(k + 1):
            M = la.zeros(ranks[k + 1], ranks[k])
            s = X.degens[(k, i)]
            for j, x in enumerate(X.levels[k]):
                M[X.index[k + 1][s[x]]][j] = 1
            degen_mats[(k, i)] = M
    return SimplicialAbelianGroup(D, ranks, face_mats, degen_mats, check=False)


def free_abelian_map(f):
    """Matrices of ℤ[f] per level for a simplicial map f."""
    X, Y = f.source, f.target
    out = []
    for k in range(X.dim_bound + 1):
        M = la.zeros(len(Y.levels[k]), len(X.levels[k]))
        for j, x in enumerate(X.levels[k]):
            M[Y.index[k][f.components[k][x]]][j] = 1
        out.append(M)
    return out


def sab_tensor(A, B):
    """Levelwise tensor product of simplicial abelian groups (Kronecker
    operators); the basis at level k is ordered (a-index major)."""
    if A.dim_bound != B.dim_bound:
        raise ValueError("dim_bound mismatch")
    D = A.dim_bound
    ranks = [A.ranks[k] * B.ranks[k] for k in range(D + 1)]
    face_mats = {}
    degen_mats = {}
    for k in range(1, D + 1):
        for i in range(k + 1):
            face_mats[(k, i)] = la.kron(A.face_mats[(k, i)], B.face_mats[(k, i)])
    for k in range(D):
        for i in range(k + 1):
            degen_mats[(k, i)] = la.kron(A.degen_mats[(k, i)], B.degen_mats[(k, i)])
    return SimplicialAbelianGroup(D, ranks, face_mats, degen_mats, check=False)

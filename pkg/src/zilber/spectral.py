"""The spectral sequence of an ℕ-filtered chain complex: pages as explicit
subquotients with ambient lifts, differentials on lifts, page recursion and
convergence checks, pairings induced by filtered pairings, and the Leibniz
rule.

Convention (stated in every report): the E_1 page here is the subquotient
page of the filtered complex, E_1^{p,q} = H_{p+q}(F_p/F_{p-1}); no
reindexing is applied.
"""

from __future__ import annotations

from . import intlinalg as la
from .simplicial import CheckCertificate

CONVENTION = ("E_1^{p,q} = H_{p+q}(F_p/F_{p-1}); pages are the subquotient "
              "pages of the filtered complex, with no reindexing")


def _empty(rows):
    return [[] for _ in range(rows)]


class SpectralSequence:
    """Pages E_r^{p,q} of a FilteredChainComplex as Subquotients of the
    ambient chain groups, with differentials d_r computed on lifts.

    Z_r^{p,q} = {x in F_p, degree p+q : dx in F_{p-r}} and
    B_r^{p,q} = Z_{r-1}^{p-1,q+1} + d(Z_{r-1}^{p+r-1,q-r+2}); the entry is
    Z_r/B_r.  Pages are computed for 1 <= r <= r_top where
    r_top = max(r_max, p_max + 1); the page at p_max + 1 is stable and is
    exposed as the infinity page."""

    def __init__(self, F, r_max=None):
        self.F = F
        amb = F.ambient
        top = amb.top_degree
        p_max = F.p_max
        if r_max is None:
            r_max = p_max + 1
        self.r_max = r_max
        self.r_inf = p_max + 1
        r_top = max(r_max, self.r_inf)
        self.r_top = r_top
        # Z[r][(p, n)]: generator columns of Z_r^{p, n-p} in ambient degree n
        Z = [dict() for _ in range(r_top + 1)]
        p_hi = p_max + r_top
        for p in range(p_hi + 1):
            for n in range(top + 1):
                Z[0][(p, n)] = F.stage(p, n)
        for r in range(1, r_top + 1):
            for p in range(p_hi + 1):
                for n in range(top + 1):
                    Z[r][(p, n)] = self._z_gens(p, n, r)
        self._Z = Z
        self.pages = {}
        self.diffs = {}
        for r in range(1, r_top + 1):
            entries = {}
            for p in range(p_max + 1):
                for n in range(top + 1):
                    q = n - p
                    zg = Z[r][(p, n)]
                    bg = self._b_gens(p, n, r)
                    entries[(p, q)] = la.Subquotient(amb.rank(n), zg, bg)
            self.pages[r] = entries
            self.diffs[r] = self._differentials(r)

    # -- construction helpers ----------------------------------------------

    def _z_gens(self, p, n, r):
        """Generators of {x in F_p, deg n : dx in F_{p-r}}."""
        amb = self.F.ambient
        S = self.F.stage(p, n)
        k = la.dims(S)[1]
        if k == 0:
            return _empty(amb.rank(n))
        if n == 0:
            return S
        dS = la.mat_mul_shaped(amb.diff(n), (amb.rank(n - 1), amb.rank(n)),
                               S, (amb.rank(n), k))
        T = self.F.stage(p - r, n - 1)
        kt = la.dims(T)[1]
        neg = [[-x for x in row] for row in T] if kt else T
        aug = la.hstack(dS, neg) if kt else dS
        ker = la.kernel_basis(aug, ncols=k + kt)
        cols = [la.mat_vec(S, kv[:k]) for kv in ker]
        basis = la.image_basis(la.from_columns(cols, rows=amb.rank(n))
                               if cols else _empty(amb.rank(n)))
        return (la.from_columns(basis, rows=amb.rank(n)) if basis
                else _empty(amb.rank(n)))

    def _b_gens(self, p, n, r):
        amb = self.F.ambient
        parts = []
        if p >= 1:
            parts.append(self._Z[r - 1][(p - 1, n)])
        if n + 1 <= amb.top_degree:
            Zup = self._Z[r - 1][(p + r - 1, n + 1)]
            k = la.dims(Zup)[1]
            if k:
                parts.append(la.mat_mul_shaped(
                    amb.diff(n + 1), (amb.rank(n), amb.rank(n + 1)),
                    Zup, (amb.rank(n + 1), k)))
        parts = [M for M in parts if la.dims(M)[1]]
        return la.hstack(*parts) if parts else _empty(amb.rank(n))

    def _differentials(self, r):
        """d_r on lifts: matrix per entry (p,q) into (p-r, q+r-1) in the
        cyclic-generator coordinates of the target entry."""
        amb = self.F.ambient
        out = {}
        for (p, q), sq in self.pages[r].items():
            n = p + q
            tgt = self.pages[r].get((p - r, q + r - 1))
            rows = tgt.ngens if tgt else 0
            M = la.zeros(rows, sq.ngens)
            if rows and n >= 1:
                for col, lift in enumerate(sq.lifts):
                    dv = la.mat_vec(amb.diff(n), lift)
                    for row, c in enumerate(tgt.coords(dv)):
                        M[row][col] = c
            out[(p, q)] = M
        return out

    def entry(self, r, p, q):
        return self.pages[r][(p, q)]

    def infinity(self):
        return self.pages[self.r_inf]

    # -- invariants --------------------------------------------------------

    def d_squared_check(self, r):
        """d_r composed with d_r vanishes (entrywise, modulo target orders)."""
        for (p, q), M in self.diffs[r].items():
            tgt = self.pages[r].get((p - 2 * r, q + 2 * r - 2))
            mid = self.pages[r].get((p - r, q + r - 1))
            M2 = self.diffs[r].get((p - r, q + r - 1))
            if tgt is None or M2 is None or not tgt.ngens:
                continue
            src_n = self.pages[r][(p, q)].ngens
            prod = la.mat_mul_shaped(M2, (tgt.ngens, mid.ngens),
                                     M, (mid.ngens, src_n))
            for i, row in enumerate(prod):
                o = tgt.orders[i]
                for v in row:
                    if (v % o if o else v) != 0:
                        return CheckCertificate(False, witness=(r, p, q),
                                                detail="d_r ∘ d_r != 0")
        return CheckCertificate(True, detail=f"d_{r}² = 0")

    def page_recursion_check(self, r):
        """E_{r+1}^{p,q} has the invariants of the homology of (E_r, d_r):
        compares Z_{r+1}/B_{r+1} with (Z_{r+1}+B_r)/(d Z_r^{p+r} + B_r) as
        ambient subquotients."""
        amb = self.F.ambient
        for (p, q), sq_next in self.pages[r + 1].items():
            n = p + q
            b_r = self._b_gens(p, n, r)
            z_next = self._Z[r + 1][(p, n)]
            num = la.hstack(z_next, b_r) if la.dims(b_r)[1] else z_next
            parts = [b_r] if la.dims(b_r)[1] else []
            if n + 1 <= amb.top_degree:
                Zin = self._Z[r][(p + r, n + 1)]
                k = la.dims(Zin)[1]
                if k:
                    parts.append(la.mat_mul_shaped(
                        amb.diff(n + 1), (amb.rank(n), amb.rank(n + 1)),
                        Zin, (amb.rank(n + 1), k)))
            den = la.hstack(*parts) if parts else _empty(amb.rank(n))
            hsq = la.Subquotient(amb.rank(n), num, den)
            if hsq.orders != sq_next.orders:
                return CheckCertificate(
                    False, witness=(r, p, q),
                    detail=f"page recursion fails at E_{r+1}^{{{p},{q}}}")
        return CheckCertificate(True, detail=f"E_{r+1} = H(E_{r}, d_{r})")

    def convergence_check(self):
        """E_∞ invariants equal the associated graded of H_*(ambient) with
        respect to the induced filtration F_p H_n = image of
        (ker d ∩ F_p) in H_n."""
        amb = self.F.ambient
        top = amb.top_degree
        einf = self.infinity()
        for n in range(top + 1):
            if n == 0:
                kern = la.identity(amb.rank(0))
            else:
                kern = la.from_columns(
                    la.kernel_basis(amb.diff(n), ncols=amb.rank(n)),
                    rows=amb.rank(n))
            if n < top:
                imcols = la.image_basis(amb.diff(n + 1))
                im = (la.from_columns(imcols, rows=amb.rank(n)) if imcols
                      else _empty(amb.rank(n)))
            else:
                im = _empty(amb.rank(n))
            for p in range(self.F.p_max + 1):
                zp = _intersect_spans(kern, self.F.stage(p, n), amb.rank(n))
                zp1 = _intersect_spans(kern, self.F.stage(p - 1, n),
                                       amb.rank(n))
                num = la.hstack(zp, im) if la.dims(im)[1] else zp
                den_parts = [M for M in (zp1, im) if la.dims(M)[1]]
                den = la.hstack(*den_parts) if den_parts else _empty(amb.rank(n))
                gr = la.Subquotient(amb.rank(n), num, den)
                if gr.orders != einf[(p, n - p)].orders:
                    return CheckCertificate(
                        False, witness=(p, n - p),
                        detail=f"E_∞^{{{p},{n-p}}} differs from the associated "
                               f"graded of H_{n}")
        return CheckCertificate(True,
                                detail="E_∞ matches the associated graded of H_*")

    # -- reporting ---------------------------------------------------------

    def to_report(self):
        pages = {}
        for r in range(1, self.r_top + 1):
            tbl = {}
            for (p, q), sq in sorted(self.pages[r].items()):
                if not sq.ngens and la.is_zero(self.diffs[r][(p, q)]):
                    continue
                tbl[f"{p},{q}"] = {
                    "orders": list(sq.orders),
                    "d": self.diffs[r][(p, q)],
                }
            pages[str(r)] = tbl
        return {
            "format": "ss",
            "version": 1,
            "convention": CONVENTION,
            "p_max": self.F.p_max,
            "r_inf": self.r_inf,
            "pages": pages,
        }


def _intersect_spans(A, B, rows):
    """Generator columns of span(A) ∩ span(B) in ℤ^rows."""
    ka, kb = la.dims(A)[1], la.dims(B)[1]
    if ka == 0 or kb == 0:
        return _empty(rows)
    negB = [[-x for x in row] for row in B]
    aug = la.hstack(A, negB)
    ker = la.kernel_basis(aug, ncols=ka + kb)
    cols = [la.mat_vec(A, kv[:ka]) for kv in ker]
    basis = la.image_basis(la.from_columns(cols, rows=rows) if cols
                           else _empty(rows))
    return la.from_columns(basis, rows=rows) if basis else _empty(rows)


def compute_pages(F, r_max=None):
    """SpectralSequence of a filtered complex with all invariants asserted:
    d_r² = 0 and page recursion for every computed page, and E_∞ equal to
    the associated graded of homology."""
    S = SpectralSequence(F, r_max)
    for r in range(1, S.r_top + 1):
        cert = S.d_squared_check(r)
        if not cert.ok:
            raise AssertionError(cert.detail)
        if r + 1 <= S.r_top:
            cert = S.page_recursion_check(r)
            if not cert.ok:
                raise AssertionError(cert.detail)
    cert = S.convergence_check()
    if not cert.ok:
        raise AssertionError(cert.detail)
    return S


class PairingWitnessError(ValueError):
    """Raised when an induced page pairing is not well defined; carries the
    offending (entry, generator) data as .witness."""

    def __init__(self, detail, witness):
        super().__init__(detail)
        self.witness = witness


class PagePairing:
    """The bilinear maps E_r(F) ⊗ E_r(G) -> E_r(H) induced by a filtered
    pairing, stored as ambient product representatives per generator pair.

    Well-definedness (independence of lifts) is verified on generators at
    construction: pairing any boundary generator with any cycle generator
    must land in the boundary part of the target entry."""

    def __init__(self, P, S_F, S_G, S_H, r):
        self.P = P
        self.S_F = S_F
        self.S_G = S_G
        self.S_H = S_H
        self.r = r
        self.products = {}
        pf = S_F.pages[r]
        pg = S_G.pages[r]
        ph = S_H.pages[r]
        for (p, q), sf in pf.items():
            for (p2, q2), sg in pg.items():
                tgt = ph.get((p + p2, q + q2))
                if tgt is None or not sf.ngens or not sg.ngens:
                    continue
                tbl = [[self._multiply(p + q, lift_x, p2 + q2, lift_y)
                        for lift_y in sg.lifts] for lift_x in sf.lifts]
                self.products[((p, q), (p2, q2))] = tbl
        self._well_defined_check()

    def _multiply(self, n1, x, n2, y):
        """Ambient representative of m(x ⊗ y) in degree n1 + n2."""
        tb = self.P.basis
        n = n1 + n2
        if n > tb.top_degree:
            return [0] * self.P.H.ambient.rank(n)
        vec = [0] * len(tb.basis[n])
        for i, u in enumerate(x):
            if u:
                for j, v in enumerate(y):
                    if v:
                        vec[tb.index(n, n1, i, n2, j)] += u * v
        if not self.P.H.ambient.rank(n):
            return []
        return la.mat_vec(self.P.m.mat(n), vec)

    def product_coords(self, pq1, i, pq2, j):
        """Coordinates of [x_i · y_j] in the target entry of E_r(H)."""
        tgt = self.S_H.pages[self.r][(pq1[0] + pq2[0], pq1[1] + pq2[1])]
        return tgt.coords(self.products[(pq1, pq2)][i][j])

    def _well_defined_check(self):
        r = self.r
        for (pq1, pq2), tbl in self.products.items():
            sf = self.S_F.pages[r][pq1]
            sg = self.S_G.pages[r][pq2]
            tgt = self.S_H.pages[r][(pq1[0] + pq2[0], pq1[1] + pq2[1])]
            n1 = pq1[0] + pq1[1]
            n2 = pq2[0] + pq2[1]
            bf = self.S_F._b_gens(pq1[0], n1, r)
            bg = self.S_G._b_gens(pq2[0], n2, r)
            for b in la.columns(bf):
                for lift_y in sg.lifts:
                    z = self._multiply(n1, b, n2, lift_y)
                    if not tgt.is_zero_class(z):
                        raise PairingWitnessError(
                            "pairing depends on the lift",
                            witness=(pq1, pq2, "left boundary"))
            for lift_x in sf.lifts:
                for b in la.columns(bg):
                    z = self._multiply(n1, lift_x, n2, b)
                    if not tgt.is_zero_class(z):
                        raise PairingWitnessError(
                            "pairing depends on the lift",
                            witness=(pq1, pq2, "right boundary"))

    def corrupted(self, key, i, j):
        """A copy with the sign of one generator product flipped (for
        negative controls)."""
        import copy
        other = copy.copy(self)
        other.products = {k: [[list(v) for v in row] for row in tbl]
                          for k, tbl in self.products.items()}
        other.products[key][i][j] = [-v for v in other.products[key][i][j]]
        return other


def induced_pairing(P, S_F, S_G, S_H, r):
    """PagePairing at page r induced by a FilteredPairing (see PagePairing);
    raises PairingWitnessError if the pairing is not lift-independent."""
    return PagePairing(P, S_F, S_G, S_H, r)


def leibniz_check(pairing, r=None):
    """Verifies d_r(x·y) = d_r(x)·y + (-1)^{p+q} x·d_r(y) on all generator
    pairs of the page, computed entirely from the page data: products come
    from the pairing's generator tables and d_r from the spectral
    sequences, so a corrupted table is detected."""
    if r is None:
        r = pairing.r
    S_F, S_G, S_H = pairing.S_F, pairing.S_G, pairing.S_H

    def coords_of_product(pq1, i, pq2, j):
        key = (pq1, pq2)
        tgt = S_H.pages[r].get((pq1[0] + pq2[0], pq1[1] + pq2[1]))
        if tgt is None or key not in pairing.products:
            return None, []
        return tgt, tgt.coords(pairing.products[key][i][j])

    for (pq1, pq2), tbl in pairing.products.items():
        p, q = pq1
        p2, q2 = pq2
        tgt = S_H.pages[r].get((p + p2 - r, q + q2 + r - 1))
        if tgt is None or not tgt.ngens:
            continue
        sf = S_F.pages[r][pq1]
        sg = S_G.pages[r][pq2]
        src = S_H.pages[r][(p + p2, q + q2)]
        d_h = S_H.diffs[r][(p + p2, q + q2)]
        d_f = S_F.diffs[r][pq1]
        d_g = S_G.diffs[r][pq2]
        f_tgt = (p - r, q + r - 1)
        g_tgt = (p2 - r, q2 + r - 1)
        sign = -1 if (p + q) % 2 else 1
        for i in range(sf.ngens):
            for j in range(sg.ngens):
                c = src.coords(tbl[i][j])
                lhs = la.mat_vec(d_h, c) if tgt.ngens else []
                rhs = [0] * tgt.ngens
                if (f_tgt, pq2) in pairing.products:
                    for k in range(S_F.pages[r][f_tgt].ngens):
                        a = d_f[k][i]
                        if a:
                            _, pc = coords_of_product(f_tgt, k, pq2, j)
                            rhs = [u + a * v for u, v in zip(rhs, pc)]
                if (pq1, g_tgt) in pairing.products:
                    for k in range(S_G.pages[r][g_tgt].ngens):
                        b = d_g[k][j]
                        if b:
                            _, pc = coords_of_product(pq1, i, g_tgt, k)
                            rhs = [u + sign * b * v for u, v in zip(rhs, pc)]
                lhs = tgt.reduce(lhs)
                rhs = tgt.reduce(rhs)
                if lhs != rhs:
                    return CheckCertificate(
                        False, witness=(pq1, i, pq2, j),
                        detail="Leibniz rule fails on a generator pair")
    return CheckCertificate(True, detail=f"Leibniz rule holds on page {r}")


def _invariant_factors(M):
    _, S, _ = la.smith_normal_form(M)
    out = []
    for i in range(min(len(S), len(S[0]) if S else 0)):
        if S[i][i]:
            out.append(abs(S[i][i]))
    return out


def heart_check(A, moore="upper"):
    """The first page of the skeletal filtration of A, with its d_1, is
    isomorphic as a chain complex to the normalized chains of A: the page
    is concentrated in q = 0, each E_1^{p,0} is free of the normalized
    rank, and the d_1 matrices have the same Smith invariant factors as the
    normalized differentials.  (Ranks plus invariant factors of the
    differentials determine a bounded complex of finitely generated free
    abelian groups up to isomorphism.)"""
    from .doldkan import normalize
    from .filtration import skeletal_filtration

    N = normalize(A, moore=moore).normalized
    F = skeletal_filtration(A, moore=moore)
    S = SpectralSequence(F, r_max=1)
    for (p, q), sq in S.pages[1].items():
        if q != 0:
            if sq.ngens:
                return CheckCertificate(False, witness=(p, q),
                                        detail="page not concentrated in q=0")
            continue
        if sq.torsion:
            return CheckCertificate(False, witness=(p, 0),
                                    detail="entry is not free")
        if sq.free_rank != N.rank(p):
            return CheckCertificate(
                False, witness=(p, 0),
                detail=f"rank {sq.free_rank} != normalized rank {N.rank(p)}")
    for p in range(1, F.p_max + 1):
        d1 = S.diffs[1].get((p, 0))
        if d1 is None:
            d1 = _empty(S.pages[1][(p - 1, 0)].ngens)
        if _invariant_factors(d1) != _invariant_factors(N.diff(p)):
            return CheckCertificate(False, witness=p,
                                    detail="d_1 invariant factors differ "
                                           "from the normalized differential")
    return CheckCertificate(True,
                            detail="first page with d_1 is the normalized "
                                   "chain complex")

"""ℕ-filtered chain complexes presented by stage generator columns, Day
convolution, the chain-level skeletal filtration of a simplicial abelian
group, graded pieces, and filtered pairings induced by the shuffle product.
"""

from __future__ import annotations

import json

from . import intlinalg as la
from .chains import ChainComplex, TensorBasis, tensor, unit_complex
from .delta import enumerate_surjections
from .doldkan import normalize, unnormalized_chains
from .ez import shuffle_product
from .simplicial import CheckCertificate


class FilteredChainComplex:
    """An ℕ-filtered chain complex: an ambient free complex together with,
    for each p <= p_max, a subcomplex given by integer generator columns
    per degree.  Stages must be nested, closed under the ambient
    differential, and exhaust the ambient at p = p_max."""

    def __init__(self, ambient, stages, p_max, check=True):
        self.ambient = ambient
        self.p_max = p_max
        # stages[p][n] is an ambient.rank(n)-row matrix of generator columns
        self.stages = [dict(stages[p]) for p in range(p_max + 1)]
        for p in range(p_max + 1):
            for n in range(ambient.top_degree + 1):
                if n not in self.stages[p]:
                    self.stages[p][n] = [[] for _ in range(ambient.rank(n))]
        if check:
            self._validate()

    def stage(self, p, n):
        """Generator columns of F_p in degree n (p is clamped to [−1, p_max];
        p < 0 gives the zero subgroup)."""
        rn = self.ambient.rank(n)
        if p < 0 or n < 0 or n > self.ambient.top_degree:
            return [[] for _ in range(rn)]
        return self.stages[min(p, self.p_max)][n]

    def member(self, p, n, v):
        """Is v (an ambient degree-n vector) in stage p?"""
        return la.in_span(self.stage(p, n), v)

    def _validate(self):
        top = self.ambient.top_degree
        for p in range(self.p_max + 1):
            for n in range(top + 1):
                M = self.stages[p][n]
                if not la.shape_ok(M, self.ambient.rank(n), la.dims(M)[1]):
                    raise ValueError(f"stage ({p},{n}) has wrong row count")
                for v in la.columns(M):
                    if n >= 1:
                        dv = la.mat_vec(self.ambient.diff(n), v)
                        if not la.in_span(self.stage(p, n - 1), dv):
                            raise ValueError(
                                f"stage {p} is not closed under d in degree {n}")
                    if p < self.p_max and not la.in_span(self.stage(p + 1, n), v):
                        raise ValueError(
                            f"stage {p} is not contained in stage {p+1} "
                            f"in degree {n}")
        for n in range(top + 1):
            if not la.spans_equal(self.stage(self.p_max, n),
                                  la.identity(self.ambient.rank(n))):
                raise ValueError(
                    f"top stage does not exhaust the ambient in degree {n}")

    # -- serialization ------------------------------------------------------

    def to_payload(self):
        return {
            "format": "filt",
            "version": 1,
            "ambient": self.ambient.to_payload(),
            "p_max": self.p_max,
            "stages": [{str(n): self.stages[p][n]
                        for n in range(self.ambient.top_degree + 1)}
                       for p in range(self.p_max + 1)],
        }

    def save(self, path):
        with open(path, "w") as fh:
            json.dump(self.to_payload(), fh)

    @classmethod
    def from_payload(cls, payload):
        if payload.get("format") != "filt":
            raise ValueError("not a filt payload")
        ambient = ChainComplex.from_payload(payload["ambient"])
        p_max = payload["p_max"]
        stages = [{int(n): M for n, M in stage.items()}
                  for stage in payload["stages"]]
        return cls(ambient, stages, p_max)

    @classmethod
    def load(cls, path):
        with open(path) as fh:
            return cls.from_payload(json.load(fh))


def constant_filtration(C, p_max=0):
    """Every stage is the full ambient complex."""
    full = {n: la.identity(C.rank(n)) for n in range(C.top_degree + 1)}
    return FilteredChainComplex(C, [full] * (p_max + 1), p_max)


def unit_filtration(p_max=0):
    """The monoidal unit: ℤ in degree 0, constant in p."""
    return constant_filtration(unit_complex(), p_max)


def skeletal_filtration(A, ambient="normalized", moore="upper"):
    """The chain-level skeletal filtration of a simplicial abelian group.

    Stage p in degree k is the span of the images of all operators induced
    by surjections [k] ->> [j] with j <= p (the chains supported on the
    p-skeleton).  With ambient="normalized" (the default) the stages are
    pushed into 𝒩(A) through the normalization projection; with
    ambient="unnormalized" they live in C(A).  Stabilizes at
    p_max = dim_bound."""
    D = A.dim_bound
    C = unnormalized_chains(A)
    nres = normalize(A, moore=moore) if ambient == "normalized" else None
    amb = nres.normalized if nres else C
    stages = []
    for p in range(D + 1):
        stage = {}
        for k in range(D + 1):
            mats = []
            for j in range(min(p, k) + 1):
                for eta in enumerate_surjections(k, j):
                    mats.append(A.operator_matrix(eta))
            cols = la.hstack(*mats) if mats else [[] for _ in range(A.ranks[k])]
            if nres:
                cols = la.mat_mul_shaped(
                    nres.projection.mat(k), (amb.rank(k), A.ranks[k]),
                    cols, (A.ranks[k], la.dims(cols)[1]))
            basis = la.image_basis(cols)
            stage[k] = (la.from_columns(basis, rows=amb.rank(k)) if basis
                        else [[] for _ in range(amb.rank(k))])
        stages.append(stage)
    return FilteredChainComplex(amb, stages, D)


def day_convolution(F, G):
    """F ⊛ G: ambient is the tensor of the ambients; stage n is the span of
    the images of (stage F_p) ⊗ (stage G_q) over p + q = n.  The resulting
    filtration stabilizes at p_max(F) + p_max(G).  The TensorBasis of the
    ambient is stored as .basis."""
    E, tb = tensor(F.ambient, G.ambient)
    p_max = F.p_max + G.p_max
    stages = []
    for n in range(p_max + 1):
        stage = {}
        for k in range(E.top_degree + 1):
            cols = []
            for p in range(n + 1):
                q = n - p
                for a in range(min(k, F.ambient.top_degree) + 1):
                    b = k - a
                    if b > G.ambient.top_degree:
                        continue
                    for x in la.columns(F.stage(p, a)):
                        for y in la.columns(G.stage(q, b)):
                            vec = [0] * E.rank(k)
                            for i, u in enumerate(x):
                                if u:
                                    for j, v in enumerate(y):
                                        if v:
                                            vec[tb.index(k, a, i, b, j)] += u * v
                            cols.append(vec)
            basis = la.image_basis(la.from_columns(cols, rows=E.rank(k))
                                   if cols else [[] for _ in range(E.rank(k))])
            stage[k] = (la.from_columns(basis, rows=E.rank(k)) if basis
                        else [[] for _ in range(E.rank(k))])
        stages.append(stage)
    out = FilteredChainComplex(E, stages, p_max)
    out.basis = tb
    return out


def filtrations_stagewise_equal(F, G):
    """Stagewise equality of spans (same ambient ranks assumed)."""
    if [F.ambient.rank(n) for n in range(F.ambient.top_degree + 1)] != \
            [G.ambient.rank(n) for n in range(G.ambient.top_degree + 1)]:
        return False
    p_top = max(F.p_max, G.p_max)
    for p in range(p_top + 1):
        for n in range(F.ambient.top_degree + 1):
            if not la.spans_equal(F.stage(p, n), G.stage(p, n)):
                return False
    return True


def convolution_symmetry_check(F, G):
    """Certifies F ⊛ G ≅ G ⊛ F stagewise: the signed swap of the ambient
    tensor carries each stage span onto the corresponding stage span."""
    from .ez import _koszul_swap
    FG = day_convolution(F, G)
    GF = day_convolution(G, F)
    mats = _koszul_swap(FG.basis, GF.basis)
    for p in range(FG.p_max + 1):
        for n in range(FG.ambient.top_degree + 1):
            cols = [la.mat_vec(mats[n], v) for v in la.columns(FG.stage(p, n))]
            img = (la.from_columns(cols, rows=GF.ambient.rank(n)) if cols
                   else [[] for _ in range(GF.ambient.rank(n))])
            if not la.spans_equal(img, GF.stage(p, n)):
                return CheckCertificate(False, witness=(p, n),
                                        detail=f"swap image of stage {p} "
                                               f"differs in degree {n}")
    return CheckCertificate(True, detail="⊛ is symmetric stagewise")


def convolution_associativity_check(F, G, H):
    """Certifies (F ⊛ G) ⊛ H ≅ F ⊛ (G ⊛ H) stagewise under the canonical
    associator of the ambient tensor."""
    from .ez import _tensor_associator
    FG = day_convolution(F, G)
    GH = day_convolution(G, H)
    L = day_convolution(FG, H)
    R = day_convolution(F, GH)
    mats = _tensor_associator(L.basis, FG.basis, R.basis, GH.basis)
    for p in range(L.p_max + 1):
        for n in range(L.ambient.top_degree + 1):
            cols = [la.mat_vec(mats[n], v) for v in la.columns(L.stage(p, n))]
            img = (la.from_columns(cols, rows=R.ambient.rank(n)) if cols
                   else [[] for _ in range(R.ambient.rank(n))])
            if not la.spans_equal(img, R.stage(p, n)):
                return CheckCertificate(False, witness=(p, n),
                                        detail=f"associator image of stage {p} "
                                               f"differs in degree {n}")
    return CheckCertificate(True, detail="⊛ is associative stagewise")


def graded_pieces(F):
    """gr_p = F_p / F_{p-1} as chain complexes, with ambient lifts.

    Returns a list of (ChainComplex, lifts) pairs for p = 0..p_max; lifts[n]
    is the list of ambient representatives of the degree-n generators.
    Raises if some graded piece has torsion (it cannot be presented as a
    free complex)."""
    out = []
    top = F.ambient.top_degree
    for p in range(F.p_max + 1):
        sqs = [la.Subquotient(F.ambient.rank(n), _saturate_stage(F, p, n),
                              F.stage(p - 1, n))
               for n in range(top + 1)]
        for sq in sqs:
            if sq.torsion:
                raise ValueError("graded piece has torsion; not a free complex")
        ranks = [sq.ngens for sq in sqs]
        diffs = {}
        for n in range(1, top + 1):
            M = la.zeros(ranks[n - 1], ranks[n])
            for col, lift in enumerate(sqs[n].lifts):
                dv = la.mat_vec(F.ambient.diff(n), lift)
                for row, c in enumerate(sqs[n - 1].coords(dv)):
                    M[row][col] = c
            diffs[n] = M
        out.append((ChainComplex(ranks, diffs),
                    [list(sq.lifts) for sq in sqs]))
    return out


def _saturate_stage(F, p, n):
    """Stage generator columns as a matrix (identity when the stage is the
    whole ambient group, keeping quotient bookkeeping simple)."""
    M = F.stage(p, n)
    rn = F.ambient.rank(n)
    if la.spans_equal(M, la.identity(rn)):
        return la.identity(rn)
    return M


class FilteredPairing:
    """A chain map m : F_ambient ⊗ G_ambient -> H_ambient compatible with
    the filtrations: m(F_p ⊗ G_q) ⊆ H_{p+q} for all p, q.

    The containment certificate is computed at construction; a violation
    raises with a witness (p, q, degree)."""

    def __init__(self, F, G, H, m, basis, check=True):
        self.F = F
        self.G = G
        self.H = H
        self.m = m
        self.basis = basis
        if check:
            cert = self.containment_certificate()
            if not cert.ok:
                raise ValueError(f"filtration compatibility fails: {cert.detail}")

    def containment_certificate(self):
        tb = self.basis
        for p in range(self.F.p_max + 1):
            for q in range(self.G.p_max + 1):
                for n in range(tb.top_degree + 1):
                    for a in range(min(n, self.F.ambient.top_degree) + 1):
                        b = n - a
                        if b > self.G.ambient.top_degree:
                            continue
                        for x in la.columns(self.F.stage(p, a)):
                            for y in la.columns(self.G.stage(q, b)):
                                vec = [0] * len(tb.basis[n])
                                for i, u in enumerate(x):
                                    if u:
                                        for j, v in enumerate(y):
                                            if v:
                                                vec[tb.index(n, a, i, b, j)] += u * v
                                img = la.mat_vec(self.m.mat(n), vec) \
                                    if self.H.ambient.rank(n) else []
                                if not self.H.member(p + q, n, img):
                                    return CheckCertificate(
                                        False, witness=(p, q, n),
                                        detail=f"m(F_{p} ⊗ G_{q}) escapes "
                                               f"H_{p+q} in degree {n}")
        return CheckCertificate(True, detail="m(F_p ⊗ G_q) ⊆ H_{p+q} for all p, q")

    def filtration_zero_certificate(self):
        """Certifies that m maps the stage-0 part of F ⊛ G isomorphically
        onto the stage 0 of H, degreewise."""
        conv = day_convolution(self.F, self.G)
        tb = conv.basis
        for n in range(min(tb.top_degree, self.basis.top_degree) + 1):
            src = conv.stage(0, n)
            cols = [la.mat_vec(self.m.mat(n), v) if self.H.ambient.rank(n) else []
                    for v in la.columns(src)]
            img = (la.from_columns(cols, rows=self.H.ambient.rank(n)) if cols
                   else [[] for _ in range(self.H.ambient.rank(n))])
            if not la.spans_equal(img, self.H.stage(0, n)):
                return CheckCertificate(False, witness=n,
                                        detail=f"stage-0 image differs from "
                                               f"H_0 in degree {n}")
            src_basis = la.image_basis(src)
            img_basis = la.image_basis(img)
            if len(src_basis) != len(img_basis):
                return CheckCertificate(False, witness=n,
                                        detail=f"stage-0 map not injective "
                                               f"in degree {n}")
        return CheckCertificate(True,
                                detail="filtration-0 component is an isomorphism")


def filtered_ez(A, B, moore="upper"):
    """The shuffle product as a filtered pairing between skeletal
    filtrations: sk(A) ⊗ sk(B) -> sk(A⊗B), with the containment certificate
    computed at construction."""
    sp = shuffle_product(A, B, moore=moore)
    F = skeletal_filtration(A, moore=moore)
    G = skeletal_filtration(B, moore=moore)
    H = skeletal_filtration(sp.product, moore=moore)
    return FilteredPairing(F, G, H, sp.map, sp.source_basis)

"""The Eilenberg-Zilber shuffle product and the Alexander-Whitney map on
unnormalized and normalized chains, with certification helpers for the
chain-map law, unitality, AW∘∇ = id, symmetry, and associativity.
"""

from __future__ import annotations

from . import intlinalg as la
from .chains import ChainComplex, ChainMap, TensorBasis, tensor, tensor_map
from .delta import MonotoneMap, shuffles
from .doldkan import normalize, unnormalized_chains
from .simplicial import CheckCertificate, sab_tensor


def front_face(n, p):
    """The injection [p] -> [n] onto {0, ..., p}."""
    return MonotoneMap(p, n, tuple(range(p + 1)))


def back_face(n, q):
    """The injection [q] -> [n] onto {n-q, ..., n}."""
    return MonotoneMap(q, n, tuple(range(n - q, n + 1)))


def unnormalized_shuffle(A, B):
    """∇ : C(A) ⊗ C(B) -> C(A⊗B).

    On bidegree (p, q) the column of x ⊗ y is the signed sum over all
    (p,q)-shuffles of (degenerate image of x) ⊗ (degenerate image of y),
    the two degeneracy composites being induced by the components of the
    shuffle's lattice path.  Returns (chain map, source TensorBasis, A⊗B).
    """
    if A.dim_bound != B.dim_bound:
        raise ValueError("dim_bound mismatch")
    D = A.dim_bound
    AB = sab_tensor(A, B)
    CA = unnormalized_chains(A)
    CB = unnormalized_chains(B)
    CAB = unnormalized_chains(AB)
    T, tb = tensor(CA, CB, top_degree=D)
    mats = {}
    for n in range(D + 1):
        M = la.zeros(CAB.rank(n), T.rank(n))
        ops = {}
        for (p, i, q, j) in tb.basis[n]:
            if (p, q) not in ops:
                ops[(p, q)] = [(sh.sign,
                                A.operator_matrix(sh.components()[0]),
                                B.operator_matrix(sh.components()[1]))
                               for sh in shuffles(p, q)]
        bn = B.ranks[n]
        for col, (p, i, q, j) in enumerate(tb.basis[n]):
            for sign, opA, opB in ops[(p, q)]:
                for a in range(A.ranks[n]):
                    u = opA[a][i]
                    if not u:
                        continue
                    for b in range(bn):
                        v = opB[b][j]
                        if v:
                            M[a * bn + b][col] += sign * u * v
        mats[n] = M
    return ChainMap(T, CAB, mats), tb, AB


def unnormalized_aw(A, B):
    """AW : C(A⊗B) -> C(A) ⊗ C(B), the front-face/back-face formula.

    Returns (chain map, target TensorBasis, A⊗B)."""
    if A.dim_bound != B.dim_bound:
        raise ValueError("dim_bound mismatch")
    D = A.dim_bound
    AB = sab_tensor(A, B)
    CA = unnormalized_chains(A)
    CB = unnormalized_chains(B)
    CAB = unnormalized_chains(AB)
    T, tb = tensor(CA, CB, top_degree=D)
    mats = {}
    for n in range(D + 1):
        M = la.zeros(T.rank(n), CAB.rank(n))
        bn = B.ranks[n]
        for p in range(n + 1):
            q = n - p
            F = A.operator_matrix(front_face(n, p))
            G = B.operator_matrix(back_face(n, q))
            for a in range(A.ranks[n]):
                for b in range(bn):
                    col = a * bn + b
                    for i in range(A.ranks[p]):
                        u = F[i][a]
                        if not u:
                            continue
                        for j in range(B.ranks[q]):
                            v = G[j][b]
                            if v:
                                M[tb.index(n, p, i, q, j)][col] += u * v
        mats[n] = M
    return ChainMap(CAB, T, mats), tb, AB


class LaxStructureMap:
    """The normalized shuffle product ∇ : 𝒩(A)⊗𝒩(B) -> 𝒩(A⊗B).

    Validated at construction: the map is a chain map and its degree-0
    component is the canonical basis identification (the identity matrix).
    Normalization data for A, B, and A⊗B and the unnormalized map are kept
    for downstream use (filtered pairings, symmetry and associativity
    checks).
    """

    def __init__(self, A, B, moore="upper"):
        self.A = A
        self.B = B
        nabla_un, tb_un, AB = unnormalized_shuffle(A, B)
        self.product = AB
        self.unnormalized = nabla_un
        self.unnormalized_basis = tb_un
        self.norm_A = normalize(A, moore=moore)
        self.norm_B = normalize(B, moore=moore)
        self.norm_AB = normalize(AB, moore=moore)
        NT, ntb = tensor(self.norm_A.normalized, self.norm_B.normalized,
                         top_degree=A.dim_bound)
        self.source = NT
        self.source_basis = ntb
        self.target = self.norm_AB.normalized
        secsec = ChainMap(NT, nabla_un.source,
                          tensor_map(self.norm_A.section, self.norm_B.section,
                                     ntb, tb_un),
                          check=False)
        self.map = self.norm_AB.projection.compose(nabla_un.compose(secsec))
        self.map._validate()
        if not la.mat_eq(self.map.mat(0), la.identity(NT.rank(0))):
            raise AssertionError("degree-0 component is not the canonical "
                                 "identification")


def shuffle_product(A, B, moore="upper"):
    """The lax structure map 𝒩(A)⊗𝒩(B) -> 𝒩(A⊗B) (see LaxStructureMap)."""
    return LaxStructureMap(A, B, moore=moore)


def alexander_whitney(A, B, moore="upper"):
    """AW : 𝒩(A⊗B) -> 𝒩(A)⊗𝒩(B) on normalized chains."""
    aw_un, tb_un, AB = unnormalized_aw(A, B)
    nA = normalize(A, moore=moore)
    nB = normalize(B, moore=moore)
    nAB = normalize(AB, moore=moore)
    NT, ntb = tensor(nA.normalized, nB.normalized, top_degree=A.dim_bound)
    projproj = ChainMap(aw_un.target, NT,
                        tensor_map(nA.projection, nB.projection, tb_un, ntb),
                        check=False)
    f = projproj.compose(aw_un.compose(nAB.section))
    f._validate()
    return f


def aw_nabla_identity_check(A, B, moore="upper"):
    """Certifies AW ∘ ∇ = id on 𝒩(A)⊗𝒩(B)."""
    nabla = shuffle_product(A, B, moore=moore)
    aw = alexander_whitney(A, B, moore=moore)
    comp = aw.compose(nabla.map)
    for n in range(A.dim_bound + 1):
        if not la.mat_eq(comp.mat(n), la.identity(nabla.source.rank(n))):
            return CheckCertificate(False, witness=n,
                                    detail=f"AW∘∇ differs from id in degree {n}")
    return CheckCertificate(True, detail="AW∘∇ = id degreewise")


def _koszul_swap(tb_src, tb_tgt):
    """The signed swap (C⊗D) -> (D⊗C), x⊗y -> (-1)^{|x||y|} y⊗x."""
    mats = {}
    for n in range(tb_src.top_degree + 1):
        M = la.zeros(len(tb_tgt.basis[n]), len(tb_src.basis[n]))
        for col, (p, i, q, j) in enumerate(tb_src.basis[n]):
            sign = -1 if (p * q) % 2 else 1
            M[tb_tgt.index(n, q, j, p, i)][col] = sign
        mats[n] = M
    return mats


def _simplicial_swap_chain(A, B, AB, BA):
    """The levelwise transposition C(A⊗B) -> C(B⊗A) as a chain map."""
    CAB = unnormalized_chains(AB)
    CBA = unnormalized_chains(BA)
    mats = {}
    for n in range(A.dim_bound + 1):
        an, bn = A.ranks[n], B.ranks[n]
        M = la.zeros(bn * an, an * bn)
        for a in range(an):
            for b in range(bn):
                M[b * an + a][a * bn + b] = 1
        mats[n] = M
    return ChainMap(CAB, CBA, mats)


def symmetry_check(A, B, moore="upper"):
    """Certifies ∇_{B,A} ∘ (Koszul swap) = 𝒩(swap) ∘ ∇_{A,B}."""
    ez_ab = shuffle_product(A, B, moore=moore)
    ez_ba = shuffle_product(B, A, moore=moore)
    swap_chain = _simplicial_swap_chain(A, B, ez_ab.product, ez_ba.product)
    n_swap = ez_ba.norm_AB.projection.compose(
        swap_chain.compose(ez_ab.norm_AB.section))
    lhs = ez_ba.map.compose(
        ChainMap(ez_ab.source, ez_ba.source,
                 _koszul_swap(ez_ab.source_basis, ez_ba.source_basis),
                 check=False))
    rhs = n_swap.compose(ez_ab.map)
    for n in range(A.dim_bound + 1):
        if not la.mat_eq(lhs.mat(n), rhs.mat(n)):
            return CheckCertificate(False, witness=n,
                                    detail=f"symmetry square fails in degree {n}")
    return CheckCertificate(True, detail="∇ commutes with the signed swap")


def _tensor_associator(tb_left, tb_ab, tb_right, tb_bc):
    """The canonical (sign-free) matrices ((C⊗D)⊗E)_n -> (C⊗(D⊗E))_n.

    tb_left is the basis of (C⊗D)⊗E with inner basis tb_ab; tb_right is
    the basis of C⊗(D⊗E) with inner basis tb_bc."""
    mats = {}
    for n in range(tb_left.top_degree + 1):
        M = la.zeros(len(tb_right.basis[n]), len(tb_left.basis[n]))
        for col, (m, I, r, k) in enumerate(tb_left.basis[n]):
            p, i, q, j = tb_ab.basis[m][I]
            s = q + r
            if s > tb_bc.top_degree or n - p > tb_bc.top_degree:
                continue
            J = tb_bc.index(s, q, j, r, k)
            M[tb_right.index(n, p, i, s, J)][col] = 1
        mats[n] = M
    return mats


def associativity_check(A, B, C, moore="upper"):
    """Certifies ∇ ∘ (∇⊗id) = ∇ ∘ (id⊗∇) ∘ assoc on normalized chains.

    The levelwise tensor of simplicial abelian groups is strictly
    associative (Kronecker products associate on the nose), so both
    composites land in the same normalized complex of A⊗B⊗C."""
    D = A.dim_bound
    ez_ab = shuffle_product(A, B, moore=moore)
    ez_bc = shuffle_product(B, C, moore=moore)
    ez_ab_c = shuffle_product(ez_ab.product, C, moore=moore)
    ez_a_bc = shuffle_product(A, ez_bc.product, moore=moore)
    for n in range(D + 1):
        if ez_ab_c.product.ranks[n] != ez_a_bc.product.ranks[n]:
            raise AssertionError("tensor of simplicial groups not strictly "
                                 "associative")
    NA = ez_ab.norm_A.normalized
    NC = ez_ab_c.norm_B.normalized
    # left: (N_A ⊗ N_B) ⊗ N_C -> N_{A⊗B} ⊗ N_C -> N_{(A⊗B)⊗C}
    T_left, tb_left = tensor(ez_ab.source, NC, top_degree=D)
    nabla_tensor_id = ChainMap(
        T_left, ez_ab_c.source,
        tensor_map(ez_ab.map,
                   ChainMap(NC, NC,
                            {n: la.identity(NC.rank(n)) for n in range(D + 1)},
                            check=False),
                   tb_left, ez_ab_c.source_basis),
        check=False)
    left = ez_ab_c.map.compose(nabla_tensor_id)
    # right: assoc, then N_A ⊗ (N_B ⊗ N_C) -> N_A ⊗ N_{B⊗C} -> N_{A⊗(B⊗C)}
    T_right, tb_right = tensor(NA, ez_bc.source, top_degree=D)
    assoc = ChainMap(T_left, T_right,
                     _tensor_associator(tb_left, ez_ab.source_basis,
                                        tb_right, ez_bc.source_basis),
                     check=False)
    id_tensor_nabla = ChainMap(
        T_right, ez_a_bc.source,
        tensor_map(ChainMap(NA, NA,
                            {n: la.identity(NA.rank(n)) for n in range(D + 1)},
                            check=False),
                   ez_bc.map, tb_right, ez_a_bc.source_basis),
        check=False)
    right = ez_a_bc.map.compose(id_tensor_nabla.compose(assoc))
    for n in range(D + 1):
        if not la.mat_eq(left.mat(n), right.mat(n)):
            return CheckCertificate(False, witness=n,
                                    detail=f"associativity fails in degree {n}")
    return CheckCertificate(True, detail="∇ is associative")


def unitality_check(A, B):
    """Certifies that the unnormalized ∇ on bidegrees (p, 0) and (0, q) is
    the canonical identification x⊗y -> x·(iterated degeneracy of y) (and
    symmetrically), i.e. the single trivial shuffle with sign +1."""
    nabla, tb, AB = unnormalized_shuffle(A, B)
    D = A.dim_bound
    for n in range(D + 1):
        bn = B.ranks[n]
        M = nabla.mat(n)
        for col, (p, i, q, j) in enumerate(tb.basis[n]):
            if p and q:
                continue
            sh = shuffles(p, q)[0]
            opA = A.operator_matrix(sh.components()[0])
            opB = B.operator_matrix(sh.components()[1])
            for a in range(A.ranks[n]):
                for b in range(bn):
                    if M[a * bn + b][col] != opA[a][i] * opB[b][j]:
                        return CheckCertificate(
                            False, witness=(n, p, i, q, j),
                            detail="edge bidegree is not the canonical "
                                   "identification")
    return CheckCertificate(True, detail="∇ is unital on edge bidegrees")

"""Finite-category profunctor calculus: coends by union-find, profunctor
composition, n-ary promonoidal multimorphism spaces, multimorphism spaces
for the simplex category and its ℕ-semidirect variant, the
left-Kan-extension dichotomy, colimit presentations of products of
simplices, and a bounded category-of-operators fragment.
"""

from __future__ import annotations

import itertools

from .delta import (MonotoneMap, StrictMonotoneIntoProduct, codegeneracy,
                    coface, enumerate_monotone, identity_map,
                    product_nondegenerate, product_points)
from .simplicial import CheckCertificate


# ---------------------------------------------------------------------------
# union-find


class UnionFind:
    def __init__(self):
        self.parent = {}

    def add(self, x):
        if x not in self.parent:
            self.parent[x] = x

    def find(self, x):
        self.add(x)
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x, y):
        rx, ry = self.find(x), self.find(y)
        if rx != ry:
            self.parent[rx] = ry

    def classes(self):
        out = {}
        for x in self.parent:
            out.setdefault(self.find(x), []).append(x)
        return list(out.values())


def _key(x):
    return repr(x)


def canonical_classes(uf):
    """Classes with deterministic minimal representatives, sorted."""
    cls = []
    reps = {}
    for group in uf.classes():
        r = min(group, key=_key)
        cls.append(r)
        for x in group:
            reps[x] = r
    cls.sort(key=_key)
    return cls, reps


# ---------------------------------------------------------------------------
# finite categories


class FiniteCategory:
    """A finite category: hashable object and morphism tokens, source and
    target maps, identities, and a full composition table (validated for
    unit and associativity laws)."""

    def __init__(self, objects, morphisms, src, tgt, ident, comp, check=True,
                 gens=None):
        self.objects = list(objects)
        self.morphisms = list(morphisms)
        self.src = dict(src)
        self.tgt = dict(tgt)
        self.ident = dict(ident)
        self.comp = dict(comp)
        self.gens = list(gens) if gens is not None else None
        if check:
            self._validate()

    def compose(self, g, f):
        """g ∘ f (f first)."""
        return self.comp[(g, f)]

    def hom(self, c, d):
        return [f for f in self.morphisms
                if self.src[f] == c and self.tgt[f] == d]

    def generating_morphisms(self):
        """A set of morphisms generating all of them under composition.
        Coend relations indexed by a generating set generate all coend
        relations (the relation for g∘f follows from those for f and g by a
        zigzag), so relation loops may be restricted to this set."""
        return self.gens if self.gens is not None else self.morphisms

    def _validate(self):
        for c in self.objects:
            e = self.ident[c]
            if self.src[e] != c or self.tgt[e] != c:
                raise ValueError("identity has wrong endpoints")
        for f in self.morphisms:
            if self.src[f] not in self.objects or self.tgt[f] not in self.objects:
                raise ValueError("morphism endpoints outside object set")
            if self.comp[(self.ident[self.tgt[f]], f)] != f or \
                    self.comp[(f, self.ident[self.src[f]])] != f:
                raise ValueError("unit law fails")
        composable = [(g, f) for g in self.morphisms for f in self.morphisms
                      if self.src[g] == self.tgt[f]]
        for g, f in composable:
            h = self.comp[(g, f)]
            if self.src[h] != self.src[f] or self.tgt[h] != self.tgt[g]:
                raise ValueError("composite has wrong endpoints")
        for h in self.morphisms:
            for g in self.morphisms:
                if self.src[h] != self.tgt[g]:
                    continue
                hg = self.comp[(h, g)]
                for f in self.morphisms:
                    if self.src[g] != self.tgt[f]:
                        continue
                    if self.comp[(hg, f)] != self.comp[(h, self.comp[(g, f)])]:
                        raise ValueError("associativity fails")

    def to_payload(self):
        oid = {c: f"o{i}" for i, c in enumerate(self.objects)}
        mid = {f: f"m{i}" for i, f in enumerate(self.morphisms)}
        return {
            "format": "cat",
            "version": 1,
            "objects": [str(c) for c in self.objects],
            "morphisms": [{"id": mid[f], "label": str(f),
                           "src": oid[self.src[f]], "tgt": oid[self.tgt[f]]}
                          for f in self.morphisms],
            "identity": {oid[c]: mid[self.ident[c]] for c in self.objects},
            "composition": {f"{mid[g]}|{mid[f]}": mid[h]
                            for (g, f), h in self.comp.items()},
        }

    @classmethod
    def from_payload(cls, payload):
        if payload.get("format") != "cat":
            raise ValueError("not a cat payload")
        objects = [f"o{i}" for i in range(len(payload["objects"]))]
        morphisms = [m["id"] for m in payload["morphisms"]]
        src = {m["id"]: m["src"] for m in payload["morphisms"]}
        tgt = {m["id"]: m["tgt"] for m in payload["morphisms"]}
        ident = dict(payload["identity"])
        comp = {}
        for key, h in payload["composition"].items():
            g, f = key.split("|")
            comp[(g, f)] = h
        return cls(objects, morphisms, src, tgt, ident, comp)


def discrete_category(objects):
    ident = {c: ("id", c) for c in objects}
    morphisms = list(ident.values())
    src = {f: f[1] for f in morphisms}
    tgt = dict(src)
    comp = {(f, f): f for f in morphisms}
    return FiniteCategory(objects, morphisms, src, tgt, ident, comp)


def poset_category(elements, leq):
    """The category of a finite poset: one morphism (a, b) whenever
    leq(a, b)."""
    morphisms = [(a, b) for a in elements for b in elements if leq(a, b)]
    src = {f: f[0] for f in morphisms}
    tgt = {f: f[1] for f in morphisms}
    ident = {a: (a, a) for a in elements}
    comp = {((b, c), (a, b2)): (a, c)
            for (a, b2) in morphisms for (b, c) in morphisms if b2 == b}
    covers = [(a, b) for (a, b) in morphisms if a != b
              and not any(c != a and c != b and leq(a, c) and leq(c, b)
                          for c in elements)]
    return FiniteCategory(list(elements), morphisms, src, tgt, ident, comp,
                          gens=covers)


def delta_leq(b, check=True):
    """The full subcategory of the simplex category on [0], ..., [b];
    objects are the integers n for [n], morphisms are MonotoneMaps."""
    objects = list(range(b + 1))
    morphisms = [f for p in objects for q in objects
                 for f in enumerate_monotone(p, q)]
    src = {f: f.domain_top for f in morphisms}
    tgt = {f: f.codomain_top for f in morphisms}
    ident = {n: identity_map(n) for n in objects}
    comp = {(g, f): g.compose(f) for g in morphisms for f in morphisms
            if f.codomain_top == g.domain_top}
    gens = [coface(n, i) for n in range(1, b + 1) for i in range(n + 1)]
    gens += [codegeneracy(n, i) for n in range(b) for i in range(n + 1)]
    return FiniteCategory(objects, morphisms, src, tgt, ident, comp,
                          check=check, gens=gens)


def opposite(C, check=False):
    """The opposite category on the same tokens (already validated via C)."""
    src = {f: C.tgt[f] for f in C.morphisms}
    tgt = {f: C.src[f] for f in C.morphisms}
    comp = {(g, f): h for (f, g), h in C.comp.items()}
    return FiniteCategory(C.objects, C.morphisms, src, tgt, C.ident, comp,
                          check=check, gens=C.gens)


# ---------------------------------------------------------------------------
# profunctors and coends


class SetProfunctor:
    """P : C^op × D -> Set with finite value sets.

    values : dict (c, d) -> sequence of hashable elements.
    action(f, x, g) : for f : c' -> c in C, x in P(c, d), g : d -> d' in D,
    the image element in P(c', d')."""

    def __init__(self, C, D, values, action, check=True):
        self.C = C
        self.D = D
        self.values = {k: list(v) for k, v in values.items()}
        self.action = action
        if check:
            self._validate()

    def value(self, c, d):
        return self.values.get((c, d), [])

    def _validate(self):
        C, D = self.C, self.D
        for c in C.objects:
            for d in D.objects:
                for x in self.value(c, d):
                    if self.action(C.ident[c], x, D.ident[d]) != x:
                        raise ValueError("identity action is not trivial")
        for f in C.morphisms:
            for g in D.morphisms:
                c, d = C.tgt[f], D.src[g]
                for x in self.value(c, d):
                    y = self.action(f, x, g)
                    if y not in self.value(C.src[f], D.tgt[g]):
                        raise ValueError("action leaves the value set")
                    two_step = self.action(f, self.action(C.ident[c], x, g),
                                           D.ident[D.tgt[g]])
                    if two_step != y:
                        raise ValueError("actions do not commute")
        for f2 in C.morphisms:
            for f1 in C.morphisms:
                if C.src[f1] != C.tgt[f2]:
                    continue
                c = C.tgt[f1]
                for d in D.objects:
                    for x in self.value(c, d):
                        lhs = self.action(C.comp[(f1, f2)], x, D.ident[d])
                        rhs = self.action(f2, self.action(f1, x, D.ident[d]),
                                          D.ident[d])
                        if lhs != rhs:
                            raise ValueError("contravariant action not functorial")
        for g2 in D.morphisms:
            for g1 in D.morphisms:
                if D.src[g2] != D.tgt[g1]:
                    continue
                d = D.src[g1]
                for c in C.objects:
                    for x in self.value(c, d):
                        lhs = self.action(C.ident[c], x, D.comp[(g2, g1)])
                        rhs = self.action(C.ident[c],
                                          self.action(C.ident[c], x, g1), g2)
                        if lhs != rhs:
                            raise ValueError("covariant action not functorial")


def hom_profunctor(C):
    values = {(c, d): C.hom(c, d) for c in C.objects for d in C.objects}

    def action(f, x, g):
        return C.comp[(C.comp[(g, x)], f)]

    return SetProfunctor(C, C, values, action, check=False)


class CoendSet:
    """∫^c P(c, c): canonical class representatives with a section."""

    def __init__(self, classes, reps):
        self.classes = classes
        self._reps = reps

    def rep(self, c, x):
        return self._reps[(c, x)]

    def __len__(self):
        return len(self.classes)


def coend_set(P):
    """Coend of P : C^op × C -> Set via union-find over ⊔_c P(c, c);
    representatives are minimal under a fixed total order, so the result is
    independent of enumeration order."""
    C = P.C
    uf = UnionFind()
    for c in C.objects:
        for x in P.value(c, c):
            uf.add((c, x))
    for f in C.generating_morphisms():
        c, d = C.src[f], C.tgt[f]
        for x in P.value(d, c):
            u = (c, P.action(f, x, C.ident[c]))
            v = (d, P.action(C.ident[d], x, f))
            uf.union(u, v)
    classes, reps = canonical_classes(uf)
    return CoendSet(classes, reps)


def compose_profunctors(P, Q, check=False):
    """P : C ↛ D composed with Q : D ↛ E; the value at (c, e) is
    ∫^d P(c, d) × Q(d, e), with elements stored as canonical (d, x, y)
    representatives."""
    C, D, E = P.C, P.D, Q.D
    values = {}
    reps = {}
    for c in C.objects:
        for e in E.objects:
            uf = UnionFind()
            for d in D.objects:
                for x in P.value(c, d):
                    for y in Q.value(d, e):
                        uf.add((d, x, y))
            for f in D.generating_morphisms():
                d1, d2 = D.src[f], D.tgt[f]
                for x in P.value(c, d1):
                    for y in Q.value(d2, e):
                        push_x = P.action(C.ident[c], x, f)
                        pull_y = Q.action(f, y, E.ident[e])
                        uf.union((d2, push_x, y), (d1, x, pull_y))
            cls, rp = canonical_classes(uf)
            values[(c, e)] = cls
            reps[(c, e)] = rp

    def action(f, elem, g):
        c, e = C.tgt[f], E.src[g]
        d, x, y = elem
        moved = (d, P.action(f, x, D.ident[d]), Q.action(D.ident[d], y, g))
        return reps[(C.src[f], E.tgt[g])][moved]

    return SetProfunctor(C, E, values, action, check=check)


def coyoneda_check(P):
    """Certifies P ∘ Hom_D ≅ P via the canonical map (d, x, g) -> x · g."""
    R = compose_profunctors(P, hom_profunctor(P.D))
    for c in P.C.objects:
        for e in P.D.objects:
            seen = {}
            for elem in R.value(c, e):
                d, x, g = elem
                img = P.action(P.C.ident[c], x, g)
                if img in seen:
                    return CheckCertificate(False, witness=(c, e, elem),
                                            detail="canonical map not injective")
                seen[img] = elem
            if set(seen) != set(P.value(c, e)):
                return CheckCertificate(False, witness=(c, e),
                                        detail="canonical map not surjective")
    return CheckCertificate(True, detail="P ∘ Hom ≅ P")


# ---------------------------------------------------------------------------
# promonoidal data and n-ary multimorphisms


class PromonoidalData:
    """A symmetric promonoidal structure on a finite base category, given by
    callables:

    mu_value(c1, c2, c') : the set μ(c1, c2; c');
    mu_act(f1, f2, x, g) : the action for f1 : a1 -> c1, f2 : a2 -> c2
    (contravariant) and g : c' -> b' (covariant);
    eta_value(c') and eta_act(x, g) : the unit profunctor."""

    def __init__(self, base, mu_value, mu_act, eta_value, eta_act):
        self.base = base
        self.mu_value = mu_value
        self.mu_act = mu_act
        self.eta_value = eta_value
        self.eta_act = eta_act


def delta_op_promonoidal(b, check_base=False):
    """The Eilenberg-Zilber promonoidal structure on the opposite simplex
    category truncated at [b]: μ([p],[q];[n]) is the set of monotone maps
    [n] -> [p] × [q], i.e. pairs of monotone maps out of [n], and the unit
    is the terminal profunctor (every [n] -> [0] is unique)."""
    base = opposite(delta_leq(b, check=check_base))

    cache = {}

    def mu_value(p, q, n):
        if (p, q, n) not in cache:
            cache[(p, q, n)] = [(f, g) for f in enumerate_monotone(n, p)
                                for g in enumerate_monotone(n, q)]
        return cache[(p, q, n)]

    def mu_act(f1, f2, x, g):
        # base morphisms a -> c are Δ-maps [c] -> [a]; g : c' -> b' is a
        # Δ-map [b'] -> [c']
        f, h = x
        return (f1.compose(f).compose(g), f2.compose(h).compose(g))

    def eta_value(n):
        return ["*"]

    def eta_act(x, g):
        return "*"

    return PromonoidalData(base, mu_value, mu_act, eta_value, eta_act)


def trivial_promonoidal():
    base = discrete_category(["*"])
    return PromonoidalData(
        base,
        lambda c1, c2, cp: ["*"],
        lambda f1, f2, x, g: "*",
        lambda c: ["*"],
        lambda x, g: "*")


class NaryMu:
    """Inductive n-ary multimorphism spaces of a PromonoidalData:
    μ⁰ = η, μ¹ = Hom, μ² = μ, and for n > 2
    μⁿ({c_i}; c') = ∫^d μⁿ⁻¹({c_1..c_{n-1}}; d) × μ(d, c_n; c'),
    with coend classes stored as canonical representatives."""

    def __init__(self, data):
        self.data = data
        self._cache = {}

    def space(self, inputs, output):
        return self._get(tuple(inputs), output)[0]

    def canon(self, inputs, output, elem):
        """Canonical representative of a raw element."""
        reps = self._get(tuple(inputs), output)[1]
        return reps[elem] if reps is not None else elem

    def _get(self, inputs, output):
        key = (inputs, output)
        if key in self._cache:
            return self._cache[key]
        data = self.data
        base = data.base
        n = len(inputs)
        if n == 0:
            out = (list(data.eta_value(output)), None)
        elif n == 1:
            out = (base.hom(inputs[0], output), None)
        elif n == 2:
            out = (list(data.mu_value(inputs[0], inputs[1], output)), None)
        else:
            head, last = inputs[:-1], inputs[-1]
            uf = UnionFind()
            for d in base.objects:
                for u in self.space(head, d):
                    for y in data.mu_value(d, last, output):
                        uf.add((d, u, y))
            for h in base.generating_morphisms():
                d1, d2 = base.src[h], base.tgt[h]
                for u in self.space(head, d1):
                    pushed = self.act_out(head, d1, u, h)
                    for y in data.mu_value(d2, last, output):
                        pulled = data.mu_act(h, base.ident[last], y,
                                             base.ident[output])
                        uf.union(((d2, pushed, y)), ((d1, u, pulled)))
            cls, reps = canonical_classes(uf)
            out = (cls, reps)
        self._cache[key] = out
        return out

    def act_out(self, inputs, output, elem, g):
        """Covariant action on the output: g : output -> b' in the base."""
        data = self.data
        base = data.base
        n = len(inputs)
        b_out = base.tgt[g]
        if n == 0:
            return data.eta_act(elem, g)
        if n == 1:
            return base.comp[(g, elem)]
        if n == 2:
            return data.mu_act(base.ident[inputs[0]], base.ident[inputs[1]],
                               elem, g)
        d, u, y = elem
        moved = (d, u, data.mu_act(base.ident[d], base.ident[inputs[-1]],
                                   y, g))
        return self.canon(inputs, b_out, moved)


def delta_mu_unit_check(b):
    """For the Δᵒᵖ data: μ(η, c; c') ≅ Hom(c, c') via the canonical map
    that forgets the unit coordinate, for all c, c' <= b."""
    data = delta_op_promonoidal(b)
    base = data.base
    for c in base.objects:
        for cp in base.objects:
            uf = UnionFind()
            for d in base.objects:
                for e in data.eta_value(d):
                    for y in data.mu_value(d, c, cp):
                        uf.add((d, e, y))
            for h in base.generating_morphisms():
                d1, d2 = base.src[h], base.tgt[h]
                for e in data.eta_value(d1):
                    pushed = data.eta_act(e, h)
                    for y in data.mu_value(d2, c, cp):
                        pulled = data.mu_act(h, base.ident[c], y,
                                             base.ident[cp])
                        uf.union((d2, pushed, y), (d1, e, pulled))
            cls, reps = canonical_classes(uf)
            images = {}
            for elem in cls:
                d, e, (f, g) = elem
                if g in images:
                    return CheckCertificate(False, witness=(c, cp, elem),
                                            detail="unit map not injective")
                images[g] = elem
            if set(images) != set(base.hom(c, cp)):
                return CheckCertificate(False, witness=(c, cp),
                                        detail="unit map not surjective")
    return CheckCertificate(True, detail="μ(η, c; c') ≅ Hom(c, c')")


def delta_mu_associativity_check(p, q, r, b):
    """Three-way bijection for the Δᵒᵖ data: both nestings of the ternary μ
    on ([p],[q],[r]) biject with monotone maps [n] -> [p]×[q]×[r], for every
    output [n] with n <= b."""
    data = delta_op_promonoidal(b)
    base = data.base
    nm = NaryMu(data)
    for n in base.objects:
        target = set((f.values, g.values, h.values)
                     for f in enumerate_monotone(n, p)
                     for g in enumerate_monotone(n, q)
                     for h in enumerate_monotone(n, r))
        # left nesting: ∫^d μ(p,q;d) × μ(d,r;n)
        left = nm.space((p, q, r), n)
        left_images = set()
        for (d, (f1, f2), (h, f3)) in left:
            left_images.add((f1.compose(h).values, f2.compose(h).values,
                             f3.values))
        if len(left_images) != len(left) or left_images != target:
            return CheckCertificate(False, witness=("left", n),
                                    detail="left nesting is not in bijection")
        # right nesting: ∫^d μ(q,r;d) × μ(p,d;n)
        uf = UnionFind()
        for d in base.objects:
            for u in data.mu_value(q, r, d):
                for y in data.mu_value(p, d, n):
                    uf.add((d, u, y))
        for hmor in base.generating_morphisms():
            d1, d2 = base.src[hmor], base.tgt[hmor]
            for u in data.mu_value(q, r, d1):
                pushed = data.mu_act(base.ident[q], base.ident[r], u, hmor)
                for y in data.mu_value(p, d2, n):
                    pulled = data.mu_act(base.ident[p], hmor, y,
                                         base.ident[n])
                    uf.union((d2, pushed, y), (d1, u, pulled))
        cls, _ = canonical_classes(uf)
        right_images = set()
        for (d, (f2, f3), (f1, h)) in cls:
            right_images.add((f1.values, f2.compose(h).values,
                              f3.compose(h).values))
        if len(right_images) != len(cls) or right_images != target:
            return CheckCertificate(False, witness=("right", n),
                                    detail="right nesting is not in bijection")
    return CheckCertificate(True,
                            detail="μ∘(μ×1) ≅ μ∘(1×μ) ≅ Map([n], [p]×[q]×[r])")


# ---------------------------------------------------------------------------
# multimorphism spaces for Δᵒᵖ and ℕ⋉Δᵒᵖ


def mul_delta(ns, m):
    """Mul({[n_i]}; [m]) for the opposite simplex category: monotone maps
    [m] -> ∏_i [n_i], as tuples of componentwise monotone maps."""
    out = [()]
    for n in ns:
        out = [t + (f,) for t in out for f in enumerate_monotone(m, n)]
    return out


def mul_nn_delta(a_list, n_list, b, m):
    """Multimorphisms ((a_i, [n_i]))_i -> (b, [m]) in the semidirect product
    of ℕ with the simplex-category filtration: empty unless Σ a_i <= b, in
    which case the space is Mul_Δᵒᵖ({[n_i]}; [m]).

    Requires n_i <= a_i and m <= b."""
    if len(a_list) != len(n_list):
        raise ValueError("arity mismatch")
    for a, n in zip(a_list, n_list):
        if n > a:
            raise ValueError(f"object constraint violated: [{n}] exceeds "
                             f"filtration stage {a}")
    if m > b:
        raise ValueError(f"object constraint violated: [{m}] exceeds "
                         f"filtration stage {b}")
    if sum(a_list) > b:
        return []
    return mul_delta(n_list, m)


def left_kan_check(ns, b, m_range):
    """For each m, compares the left Kan extension (along the inclusion of
    the simplex subcategory on [k], k <= b) of the restricted functor
    H = ∏_i Hom_Δ(−, [n_i]) against H([m]) itself.

    The Kan extension at [m] is the colimit, over the comma category of
    pairs (k <= b, monotone φ : [m] -> [k]), of H([k]); the canonical map
    sends (k, φ, h) to h ∘ φ.  Passes iff the map is a bijection for every
    m in m_range; the expected dichotomy is pass iff Σ n_i <= b."""
    for m in m_range:
        uf = UnionFind()
        for k in range(b + 1):
            for phi in enumerate_monotone(m, k):
                for h in mul_delta(ns, k):
                    uf.add((k, phi, h))
        gammas = [coface(k, i) for k in range(1, b + 1) for i in range(k + 1)]
        gammas += [codegeneracy(k, i) for k in range(b) for i in range(k + 1)]
        for gamma in gammas:
            kp, k = gamma.domain_top, gamma.codomain_top
            for phip in enumerate_monotone(m, kp):
                phi = gamma.compose(phip)
                for h in mul_delta(ns, k):
                    hk = tuple(hi.compose(gamma) for hi in h)
                    uf.union((k, phi, h), (kp, phip, hk))
        cls, _ = canonical_classes(uf)
        images = {}
        for (k, phi, h) in cls:
            img = tuple(hi.compose(phi) for hi in h)
            if img in images:
                return CheckCertificate(
                    False, witness=(m, (k, phi, h), images[img]),
                    detail=f"canonical map not injective at m={m}")
            images[img] = (k, phi, h)
        missing = [t for t in mul_delta(ns, m) if t not in images]
        if missing:
            return CheckCertificate(
                False, witness=(m, missing[0]),
                detail=f"canonical map not surjective at m={m}")
    return CheckCertificate(True,
                            detail="Kan extension agrees on the given range")


# ---------------------------------------------------------------------------
# products of simplices as colimits


def _monotone_into_product(ns, k):
    """All monotone maps [k] -> ∏_i [n_i], as tuples of PosetPoints."""
    pts = product_points(ns)
    out = []

    def extend(chain):
        if len(chain) == k + 1:
            out.append(tuple(chain))
            return
        last = chain[-1]
        for p in pts:
            if last.leq(p):
                extend(chain + [p])

    for p in pts:
        extend([p])
    return out


def _strict_monotone_maps(d, e):
    """Strictly monotone (injective) maps [d] -> [e]."""
    return [f for f in enumerate_monotone(d, e)
            if len(set(f.values)) == d + 1]


def product_simplices_colimit_check(ns, k_range):
    """Certifies, for each level k, that the set colimit of the simplices
    Δ^σ over the nondegenerate simplices σ of ∏_i Δ^{n_i} maps bijectively
    onto the monotone maps [k] -> ∏_i [n_i], and that the image
    factorization of each such map is an initial object of its comma
    category of presentations."""
    ns = tuple(ns)
    total = sum(ns)
    nondeg = {d: product_nondegenerate(ns, d) for d in range(total + 1)}
    for k in k_range:
        uf = UnionFind()
        presentations = {}
        for d in range(total + 1):
            for sigma in nondeg[d]:
                for alpha in enumerate_monotone(k, d):
                    uf.add((sigma, alpha))
                    img = tuple(sigma.points[alpha(i)] for i in range(k + 1))
                    presentations.setdefault(img, []).append((sigma, alpha))
        # codimension-one faces generate all injections
        for d in range(1, total + 1):
            for iota in _strict_monotone_maps(d - 1, d):
                for sigma in nondeg[d]:
                    sub = StrictMonotoneIntoProduct(
                        ns, tuple(sigma.points[v] for v in iota.values))
                    for beta in enumerate_monotone(k, d - 1):
                        uf.union((sigma, iota.compose(beta)), (sub, beta))
        cls, _ = canonical_classes(uf)
        images = {}
        for (sigma, alpha) in cls:
            img = tuple(sigma.points[alpha(i)] for i in range(k + 1))
            if img in images:
                return CheckCertificate(False, witness=(k, (sigma, alpha)),
                                        detail=f"colimit map not injective "
                                               f"at level {k}")
            images[img] = (sigma, alpha)
        allmaps = _monotone_into_product(ns, k)
        if set(images) != set(allmaps):
            missing = next(t for t in allmaps if t not in images)
            return CheckCertificate(False, witness=(k, missing),
                                    detail=f"colimit map not surjective at "
                                           f"level {k}")
        # cofinality: the image factorization is initial among presentations
        for tau in allmaps:
            distinct = []
            epi_vals = []
            for pt in tau:
                if not distinct or distinct[-1].factors != pt.factors:
                    distinct.append(pt)
                epi_vals.append(len(distinct) - 1)
            d_im = len(distinct) - 1
            sigma_im = None
            for s in nondeg[d_im]:
                if s.points == tuple(distinct):
                    sigma_im = s
                    break
            if sigma_im is None:
                return CheckCertificate(False, witness=(k, tau),
                                        detail="image chain is not a "
                                               "nondegenerate simplex")
            for sigma, alpha in presentations.get(tau, []):
                d = sigma.degree
                arrows = [
                    iota for iota in _strict_monotone_maps(d_im, d)
                    if tuple(sigma.points[v] for v in iota.values)
                    == sigma_im.points
                    and tuple(iota(epi_vals[i]) for i in range(k + 1))
                    == tuple(alpha(i) for i in range(k + 1))]
                if len(arrows) != 1:
                    return CheckCertificate(
                        False, witness=(k, tau, (sigma, alpha)),
                        detail="image factorization is not initial")
    return CheckCertificate(True,
                            detail="products of simplices are colimits of "
                                   "their nondegenerate simplices")


# ---------------------------------------------------------------------------
# category-of-operators fragment


class MulticategoryModel:
    """A concrete symmetric multicategory: finite object set, enumerable
    multimorphism sets mul(cs, c'), unary identities, substitution, and the
    symmetric-group action permute(y, idxs) reindexing the inputs of y so
    that new input t is old input idxs[t]."""

    def __init__(self, objects, mul, ident, subst, permute):
        self.objects = list(objects)
        self.mul = mul
        self.ident = ident
        self.subst = subst
        self.permute = permute


def trivial_multicategory():
    return MulticategoryModel(
        ["*"],
        lambda cs, c: ["*"],
        lambda c: "*",
        lambda y, xs: "*",
        lambda y, idxs: "*")


def delta_op_multicategory(b):
    """Objects [0..b]; mul({[n_i]}; [m]) = monotone [m] -> ∏[n_i];
    substitution composes componentwise."""

    def mul(cs, m):
        return mul_delta(cs, m)

    def ident(c):
        return (identity_map(c),)

    def subst(y, xs):
        out = []
        for g, x in zip(y, xs):
            out.extend(h.compose(g) for h in x)
        return tuple(out)

    def permute(y, idxs):
        return tuple(y[i] for i in idxs)

    return MulticategoryModel(list(range(b + 1)), mul, ident, subst, permute)


class OperatorMorphism:
    """A morphism (c_1..c_n) -> (d_1..d_m): a pointed map α (alpha[i] is the
    image of i+1 in {0..m}, 0 the basepoint) and one multimorphism per
    fiber."""

    def __init__(self, source, target, alpha, mults):
        self.source = tuple(source)
        self.target = tuple(target)
        self.alpha = tuple(alpha)
        self.mults = tuple(mults)

    def __eq__(self, other):
        return (self.source, self.target, self.alpha, self.mults) == \
            (other.source, other.target, other.alpha, other.mults)

    def __hash__(self):
        return hash((self.source, self.target, self.alpha, self.mults))

    def __repr__(self):
        return (f"OperatorMorphism({self.source}->{self.target}, "
                f"alpha={self.alpha})")


class OperatorCategoryFragment:
    """The category of operators of a concrete multicategory, restricted to
    sequences of length <= N: morphisms are pointed maps of index sets with
    a multimorphism for every fiber; composition substitutes fiberwise and
    composes the pointed maps."""

    def __init__(self, model, N):
        self.model = model
        self.N = N
        self.objects = []
        for n in range(N + 1):
            self.objects.extend(itertools.product(model.objects, repeat=n))

    def fiber(self, alpha, j):
        return [i for i, a in enumerate(alpha) if a == j]

    def morphisms_between(self, source, target):
        n, m = len(source), len(target)
        out = []
        for alpha in itertools.product(range(m + 1), repeat=n):
            choices = []
            ok = True
            for j in range(1, m + 1):
                cs = [source[i] for i in self.fiber(alpha, j)]
                ms = self.model.mul(cs, target[j - 1])
                if not ms:
                    ok = False
                    break
                choices.append(ms)
            if not ok:
                continue
            for mults in itertools.product(*choices):
                out.append(OperatorMorphism(source, target, alpha, mults))
        return out

    def identity(self, obj):
        alpha = tuple(range(1, len(obj) + 1))
        mults = tuple(self.model.ident(c) for c in obj)
        return OperatorMorphism(obj, obj, alpha, mults)

    def compose(self, second, first):
        """second ∘ first."""
        if first.target != second.source:
            raise ValueError("not composable")
        n = len(first.source)
        alpha = tuple(0 if first.alpha[i] == 0
                      else second.alpha[first.alpha[i] - 1]
                      for i in range(n))
        mults = []
        for k in range(1, len(second.target) + 1):
            js = self.fiber(second.alpha, k)
            xs = [first.mults[j] for j in js]
            grouped = self.model.subst(second.mults[k - 1], xs)
            # substitution lists inputs fiber-by-fiber; reindex to ascending
            # input order, which is how the composite's fiber is read off
            order = [i for j in js for i in self.fiber(first.alpha, j + 1)]
            idxs = [order.index(i) for i in sorted(order)]
            mults.append(self.model.permute(grouped, idxs))
        return OperatorMorphism(first.source, second.target, alpha,
                                tuple(mults))


def operator_category_fragment(model, N):
    return OperatorCategoryFragment(model, N)


def arrow_fiber_nn(a_list, b):
    """The fiber over b of the additive arrow construction on ℕ^k: the
    poset of tuples x with Σ x_i <= b, ordered componentwise."""
    k = len(a_list)
    objs = [t for t in itertools.product(range(b + 1), repeat=k)
            if sum(t) <= b]
    return poset_category(objs,
                          lambda x, y: all(u <= v for u, v in zip(x, y)))


# ---------------------------------------------------------------------------
# serialization


def profunctor_to_payload(P):
    oc = {c: f"c{i}" for i, c in enumerate(P.C.objects)}
    od = {d: f"d{i}" for i, d in enumerate(P.D.objects)}
    ids = {}
    for (c, d), elems in P.values.items():
        for i, x in enumerate(elems):
            ids[(c, d, x)] = f"x{oc[c]}_{od[d]}_{i}"
    action = {}
    for f in P.C.morphisms:
        for g in P.D.morphisms:
            c, d = P.C.tgt[f], P.D.src[g]
            for x in P.value(c, d):
                y = P.action(f, x, g)
                fk = P.C.morphisms.index(f)
                gk = P.D.morphisms.index(g)
                action[f"m{fk}|{ids[(c, d, x)]}|n{gk}"] = \
                    ids[(P.C.src[f], P.D.tgt[g], y)]
    return {
        "format": "prof",
        "version": 1,
        "source": P.C.to_payload(),
        "target": P.D.to_payload(),
        "values": {f"{oc[c]}|{od[d]}": [ids[(c, d, x)] for x in elems]
                   for (c, d), elems in P.values.items()},
        "action": action,
    }

"""Finite presentations of categories graded by a group homomorphism.

A presentation fixes a homomorphism tau: H -> G, a prime field, objects
carrying G-degrees, a basis for every nonzero hom space Hom^h(X, Y)
(h in H), and composition structure constants.  Composition multiplies
degrees: Hom^{h'}(Y,Z) x Hom^h(X,Y) -> Hom^{h'h}(X,Z).  Nonzero degree-h
morphisms are only allowed between objects whose degrees differ by tau(h);
`verify_axioms` checks that, unit laws and associativity exhaustively over
the stored bases.
"""

from __future__ import annotations

from dataclasses import dataclass
from random import Random

from . import fplinalg
from .fields import PrimeField
from .groups import GroupHom


@dataclass(frozen=True)
class Morphism:
    """A homogeneous morphism: coordinates in the chosen basis of its hom space."""

    src: int
    dst: int
    degree: int
    coords: tuple[int, ...]

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords)


@dataclass
class Verdict:
    violations: list

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self) -> bool:
        return self.ok

    def __repr__(self) -> str:
        return "ok" if self.ok else f"violations={self.violations!r}"


class GradedCatPresentation:
    """Objects with degrees, graded hom bases, and composition tensors.

    hom_rank maps (src, dst, h) to the dimension of Hom^h(src, dst); absent
    keys mean zero.  compose maps (src, mid, dst, h, h2) to a tensor
    c[k][j][i] expressing (basis_j of Hom^{h2}(mid,dst)) o (basis_i of
    Hom^h(src,mid)) = sum_k c[k][j][i] basis_k in Hom^{h2 h}(src,dst);
    absent tensors are zero.  `shifts`, when present, records a canonical
    shift datum (target, iso) per (object, degree); `sums` records declared
    direct-sum structure (part, injection, projection) per object.
    """

    def __init__(self, tau: GroupHom, field: PrimeField, degrees, hom_rank,
                 compose, identities, shifts=None, sums=None):
        self.tau = tau
        self.field = field
        self.degrees = tuple(int(d) for d in degrees)
        self.hom_rank = {k: int(r) for k, r in hom_rank.items() if int(r) > 0}
        self.compose_t = {}
        for key, tensor in compose.items():
            t = tuple(tuple(tuple(int(x) % field.p for x in row) for row in layer)
                      for layer in tensor)
            self.compose_t[key] = t
        self.identities = tuple(tuple(int(c) % field.p for c in cid) for cid in identities)
        self.shifts = dict(shifts) if shifts is not None else None
        self.sums = dict(sums) if sums else {}
        self._validate_shapes()
        n = len(self.degrees)
        self._out = [[] for _ in range(n)]
        for (x, y, h), r in sorted(self.hom_rank.items()):
            self._out[x].append((y, h, r))

    @property
    def n_objects(self) -> int:
        return len(self.degrees)

    def objects(self) -> range:
        return range(len(self.degrees))

    def rank(self, x: int, y: int, h: int) -> int:
        return self.hom_rank.get((x, y, h), 0)

    def tensor(self, x: int, y: int, z: int, h: int, h2: int):
        return self.compose_t.get((x, y, z, h, h2))

    def out_homs(self, x: int):
        return self._out[x]

    def hom_keys(self):
        return sorted(self.hom_rank)

    def __eq__(self, other):
        if not isinstance(other, GradedCatPresentation):
            return NotImplemented
        return (self.tau == other.tau and self.field == other.field
                and self.degrees == other.degrees
                and self.hom_rank == other.hom_rank
                and self.compose_t == other.compose_t
                and self.identities == other.identities)

    def _validate_shapes(self):
        n = len(self.degrees)
        ng = self.tau.target.order
        nh = self.tau.source.order
        if len(self.identities) != n:
            raise ValueError("one identity coordinate vector per object required")
        for d in self.degrees:
            if not 0 <= d < ng:
                raise ValueError("object degree out of range")
        for (x, y, h), r in self.hom_rank.items():
            if not (0 <= x < n and 0 <= y < n and 0 <= h < nh):
                raise ValueError(f"hom key out of range: {(x, y, h)}")
        hmul = self.tau.source.mul
        for (x, y, z, h, h2), t in self.compose_t.items():
            r1 = self.rank(x, y, h)
            r2 = self.rank(y, z, h2)
            r3 = self.rank(x, z, hmul(h2, h))
            if len(t) != r3 or any(len(layer) != r2 for layer in t) or any(
                    len(row) != r1 for layer in t for row in layer):
                raise ValueError(f"ragged composition tensor at {(x, y, z, h, h2)}")
        e = self.tau.source.identity
        for x in range(n):
            if len(self.identities[x]) != self.rank(x, x, e):
                raise ValueError(f"identity coordinates of object {x} have wrong length")


def zero_morphism(cat: GradedCatPresentation, x: int, y: int, h: int) -> Morphism:
    return Morphism(x, y, h, (0,) * cat.rank(x, y, h))


def identity_morphism(cat: GradedCatPresentation, x: int) -> Morphism:
    return Morphism(x, x, cat.tau.source.identity, cat.identities[x])


def basis_morphism(cat: GradedCatPresentation, x: int, y: int, h: int, k: int) -> Morphism:
    r = cat.rank(x, y, h)
    return Morphism(x, y, h, tuple(1 if i == k else 0 for i in range(r)))


def scale_morphism(cat: GradedCatPresentation, c: int, f: Morphism) -> Morphism:
    return Morphism(f.src, f.dst, f.degree,
                    tuple(cat.field.mul(c, v) for v in f.coords))


def add_morphisms(cat: GradedCatPresentation, f: Morphism, g: Morphism) -> Morphism:
    if (f.src, f.dst, f.degree) != (g.src, g.dst, g.degree):
        raise ValueError("can only add morphisms of the same hom space and degree")
    return Morphism(f.src, f.dst, f.degree,
                    tuple(cat.field.add(a, b) for a, b in zip(f.coords, g.coords)))


def compose(cat: GradedCatPresentation, f: Morphism, g: Morphism) -> Morphism:
    """g after f; the result has degree |g| * |f|."""
    if f.dst != g.src:
        raise ValueError("morphisms are not composable")
    h, h2 = f.degree, g.degree
    deg = cat.tau.source.mul(h2, h)
    r3 = cat.rank(f.src, g.dst, deg)
    t = cat.tensor(f.src, f.dst, g.dst, h, h2)
    if r3 == 0 or t is None:
        return Morphism(f.src, g.dst, deg, (0,) * r3)
    p = cat.field.p
    if r3 == 1 and len(f.coords) == 1 and len(g.coords) == 1:
        return Morphism(f.src, g.dst, deg,
                        ((t[0][0][0] * f.coords[0] * g.coords[0]) % p,))
    out = []
    for k in range(r3):
        layer = t[k]
        s = 0
        for j, gj in enumerate(g.coords):
            if gj:
                row = layer[j]
                for i, fi in enumerate(f.coords):
                    if fi:
                        s += gj * fi * row[i]
        out.append(s % p)
    return Morphism(f.src, g.dst, deg, tuple(out))


def verify_axioms(cat: GradedCatPresentation) -> Verdict:
    """Exhaustive check: grading law, identity degree, unit laws, associativity."""
    violations = []
    gH, gG = cat.tau.source, cat.tau.target
    e = gH.identity

    for (x, y, h) in cat.hom_keys():
        if cat.degrees[y] != gG.mul(cat.tau.map[h], cat.degrees[x]):
            violations.append(("grading", x, y, h))

    for x in cat.objects():
        if cat.rank(x, x, e) == 0 or all(c == 0 for c in cat.identities[x]):
            violations.append(("identity-missing", x))

    for (x, y, h) in cat.hom_keys():
        for k in range(cat.rank(x, y, h)):
            f = basis_morphism(cat, x, y, h, k)
            if cat.rank(x, x, e):
                if compose(cat, identity_morphism(cat, x), f) != f:
                    violations.append(("unit-right", x, y, h, k))
            if cat.rank(y, y, e):
                if compose(cat, f, identity_morphism(cat, y)) != f:
                    violations.append(("unit-left", x, y, h, k))

    for w in cat.objects():
        for (x, h1, r1) in cat.out_homs(w):
            for (y, h2, r2) in cat.out_homs(x):
                for (z, h3, r3) in cat.out_homs(y):
                    for i in range(r1):
                        f = basis_morphism(cat, w, x, h1, i)
                        for j in range(r2):
                            g = basis_morphism(cat, x, y, h2, j)
                            gf = compose(cat, f, g)
                            for k in range(r3):
                                hm = basis_morphism(cat, y, z, h3, k)
                                lhs = compose(cat, gf, hm)
                                rhs = compose(cat, f, compose(cat, g, hm))
                                if lhs != rhs:
                                    violations.append(
                                        ("assoc", (w, x, y, z), (h1, h2, h3), (i, j, k)))
    return Verdict(violations)


def invert(cat: GradedCatPresentation, f: Morphism):
    """Two-sided inverse of f (degree |f|^-1), or None."""
    gH = cat.tau.source
    a_inv = gH.inv(f.degree)
    r2 = cat.rank(f.dst, f.src, a_inv)
    e = gH.identity
    r_src = cat.rank(f.src, f.src, e)
    r_dst = cat.rank(f.dst, f.dst, e)
    if r2 == 0 or r_src == 0 or r_dst == 0:
        return None
    cols = []
    for j in range(r2):
        gj = basis_morphism(cat, f.dst, f.src, a_inv, j)
        left = compose(cat, f, gj).coords   # g o f in End(src)
        right = compose(cat, gj, f).coords  # f o g in End(dst)
        cols.append(list(left) + list(right))
    matrix = [[cols[j][i] for j in range(r2)] for i in range(r_src + r_dst)]
    rhs = list(cat.identities[f.src]) + list(cat.identities[f.dst])
    x = fplinalg.solve(matrix, rhs, cat.field.p, ncols=r2)
    if x is None:
        return None
    return Morphism(f.dst, f.src, a_inv, tuple(x))


def _candidate_vectors(p: int, r: int, max_enum: int = 4096, samples: int = 64,
                       seed: int = 0):
    if r == 1:
        yield (1,)
        return
    if p ** r <= max_enum:
        def rec(prefix):
            if len(prefix) == r:
                if any(prefix):
                    yield tuple(prefix)
                return
            for v in range(p):
                yield from rec(prefix + [v])
        yield from rec([])
        return
    rng = Random(seed)
    for _ in range(samples):
        vec = tuple(rng.randrange(p) for _ in range(r))
        if any(vec):
            yield vec


def find_invertible(cat: GradedCatPresentation, x: int, y: int, a: int):
    """(f, f^-1) with f an invertible element of Hom^a(x, y), or None.

    Exhaustive over coordinate vectors while p^rank stays small; beyond
    that a fixed-seed sample is tried, which suffices at this scale.
    """
    r = cat.rank(x, y, a)
    if r == 0:
        return None
    for coords in _candidate_vectors(cat.field.p, r):
        f = Morphism(x, y, a, coords)
        g = invert(cat, f)
        if g is not None:
            return (f, g)
    return None


def find_shift(cat: GradedCatPresentation, x: int, a: int):
    """(target, iso) realising the shift of x by a, or None.

    Scans objects of the forced degree tau(a)|x| in index order and returns
    the first carrying an invertible element of Hom^a(x, -).
    """
    gH, gG = cat.tau.source, cat.tau.target
    if a == gH.identity:
        return (x, identity_morphism(cat, x))
    want = gG.mul(cat.tau.map[a], cat.degrees[x])
    for y in cat.objects():
        if cat.degrees[y] != want:
            continue
        hit = find_invertible(cat, x, y, a)
        if hit is not None:
            return (y, hit[0])
    return None


def is_simple(cat: GradedCatPresentation, x: int) -> bool:
    return cat.rank(x, x, cat.tau.source.identity) == 1


def are_disjoint_deg1(cat: GradedCatPresentation, x: int, y: int) -> bool:
    e = cat.tau.source.identity
    return cat.rank(x, y, e) == 0 and cat.rank(y, x, e) == 0


def direct_sum_cat(cats) -> GradedCatPresentation:
    """Disjoint union of presentations over the same tau and field."""
    cats = list(cats)
    if not cats:
        raise ValueError("need at least one presentation")
    first = cats[0]
    for c in cats[1:]:
        if c.tau != first.tau:
            raise ValueError("presentations graded by different homomorphisms")
        if c.field != first.field:
            raise ValueError("presentations over different fields")
    degrees, identities = [], []
    hom_rank, comp = {}, {}
    shifts = {} if all(c.shifts is not None for c in cats) else None
    sums = {}
    offset = 0
    for c in cats:
        for (x, y, h), r in c.hom_rank.items():
            hom_rank[(x + offset, y + offset, h)] = r
        for (x, y, z, h, h2), t in c.compose_t.items():
            comp[(x + offset, y + offset, z + offset, h, h2)] = t
        degrees.extend(c.degrees)
        identities.extend(c.identities)
        if shifts is not None:
            for (x, a), (y, m) in c.shifts.items():
                shifts[(x + offset, a)] = (
                    y + offset,
                    Morphism(m.src + offset, m.dst + offset, m.degree, m.coords))
        for x, parts in c.sums.items():
            sums[x + offset] = tuple(
                (part + offset,
                 Morphism(i.src + offset, i.dst + offset, i.degree, i.coords),
                 Morphism(q.src + offset, q.dst + offset, q.degree, q.coords))
                for (part, i, q) in parts)
        offset += c.n_objects
    return GradedCatPresentation(first.tau, first.field, degrees, hom_rank,
                                 comp, identities, shifts=shifts, sums=sums)


class FunctorData:
    """Degree-preserving functor between presentations as finite linear data.

    hom_maps[(x, y, h)] is a matrix (target rank x source rank) sending
    source basis coordinates to target coordinates; absent keys are zero.
    """

    def __init__(self, source: GradedCatPresentation, target: GradedCatPresentation,
                 obj_map, hom_maps):
        self.source = source
        self.target = target
        self.obj_map = tuple(int(x) for x in obj_map)
        self.hom_maps = {}
        for key, mat in hom_maps.items():
            self.hom_maps[key] = tuple(tuple(int(v) % target.field.p for v in row)
                                       for row in mat)
        for (x, y, h), mat in self.hom_maps.items():
            rows = target.rank(self.obj_map[x], self.obj_map[y], h)
            cols = source.rank(x, y, h)
            if len(mat) != rows or any(len(r) != cols for r in mat):
                raise ValueError(f"functor matrix at {(x, y, h)} has wrong shape")

    def matrix(self, x: int, y: int, h: int):
        mat = self.hom_maps.get((x, y, h))
        if mat is None:
            rows = self.target.rank(self.obj_map[x], self.obj_map[y], h)
            cols = self.source.rank(x, y, h)
            mat = tuple((0,) * cols for _ in range(rows))
        return mat

    def __eq__(self, other):
        if not isinstance(other, FunctorData):
            return NotImplemented
        if self.obj_map != other.obj_map:
            return False
        keys = set(self.source.hom_rank)
        return all(self.matrix(*k) == other.matrix(*k) for k in keys)


def apply_functor(F: FunctorData, m: Morphism) -> Morphism:
    mat = F.hom_maps.get((m.src, m.dst, m.degree))
    p = F.target.field.p
    if mat is not None and len(mat) == 1 and len(m.coords) == 1:
        return Morphism(F.obj_map[m.src], F.obj_map[m.dst], m.degree,
                        ((mat[0][0] * m.coords[0]) % p,))
    if mat is None:
        mat = F.matrix(m.src, m.dst, m.degree)
    coords = tuple(sum(row[i] * m.coords[i] for i in range(len(m.coords))) % p
                   for row in mat)
    return Morphism(F.obj_map[m.src], F.obj_map[m.dst], m.degree, coords)


def identity_functor(cat: GradedCatPresentation) -> FunctorData:
    maps = {}
    for (x, y, h), r in cat.hom_rank.items():
        maps[(x, y, h)] = tuple(tuple(1 if i == j else 0 for j in range(r))
                                for i in range(r))
    return FunctorData(cat, cat, list(cat.objects()), maps)


def compose_functors(F: FunctorData, G: FunctorData) -> FunctorData:
    """Apply F first, then G."""
    if F.target is not G.source and F.target != G.source:
        raise ValueError("functors are not composable")
    maps = {}
    for (x, y, h) in F.source.hom_rank:
        a = F.matrix(x, y, h)
        b = G.matrix(F.obj_map[x], F.obj_map[y], h)
        maps[(x, y, h)] = tuple(tuple(v for v in row) for row in
                                fplinalg.matmul([list(r) for r in b],
                                                [list(r) for r in a],
                                                G.target.field.p))
    return FunctorData(F.source, G.target,
                       [G.obj_map[F.obj_map[x]] for x in F.source.objects()], maps)


def verify_functor(F: FunctorData) -> Verdict:
    """Identity, composition and degree preservation over all basis data."""
    violations = []
    src, tgt = F.source, F.target
    for x in src.objects():
        if tgt.degrees[F.obj_map[x]] != src.degrees[x]:
            violations.append(("object-degree", x))
    for x in src.objects():
        if apply_functor(F, identity_morphism(src, x)) != identity_morphism(
                tgt, F.obj_map[x]):
            violations.append(("identity", x))
    for x in src.objects():
        for (y, h1, r1) in src.out_homs(x):
            for (z, h2, r2) in src.out_homs(y):
                for i in range(r1):
                    f = basis_morphism(src, x, y, h1, i)
                    Ff = apply_functor(F, f)
                    for j in range(r2):
                        g = basis_morphism(src, y, z, h2, j)
                        lhs = apply_functor(F, compose(src, f, g))
                        rhs = compose(tgt, Ff, apply_functor(F, g))
                        if lhs != rhs:
                            violations.append(("compose", (x, y, z), (h1, h2), (i, j)))
    return Verdict(violations)


class NatTransData:
    """Natural transformation with degree-1 components, F => G."""

    def __init__(self, source: FunctorData, target: FunctorData, components):
        self.source = source
        self.target = target
        self.components = tuple(components)

    def component(self, x: int) -> Morphism:
        return self.components[x]


def verify_nat(nt: NatTransData) -> Verdict:
    violations = []
    F, G = nt.source, nt.target
    src = F.source
    tgt = F.target
    e = tgt.tau.source.identity
    if G.source is not src and G.source != src:
        violations.append(("endpoint-mismatch",))
        return Verdict(violations)
    for x in src.objects():
        c = nt.component(x)
        if c.degree != e or c.src != F.obj_map[x] or c.dst != G.obj_map[x]:
            violations.append(("component-shape", x))
    if violations:
        return Verdict(violations)
    for x in src.objects():
        for (y, h, r) in src.out_homs(x):
            for i in range(r):
                f = basis_morphism(src, x, y, h, i)
                lhs = compose(tgt, nt.component(x), apply_functor(G, f))
                rhs = compose(tgt, apply_functor(F, f), nt.component(y))
                if lhs != rhs:
                    violations.append(("naturality", x, y, h, i))
    return Verdict(violations)

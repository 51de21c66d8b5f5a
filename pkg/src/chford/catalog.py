"""Finite groups as multiplication tables, and the catalog of order <= 24.

A finite group is stored as an n x n table over element indices with the
identity at index 0; associativity is asserted on construction.  The
catalog lists one representative of every isomorphism class of order at
most 24 (74 groups), built from explicit constructions (cyclic, direct
and semidirect products, dihedral and dicyclic families, permutation and
matrix closures, a central quotient) and deduped with an isomorphism
backtrack over generator images.  Homomorphism counts into every member
are a practical invariant for distinguishing finitely presented groups.
"""

from __future__ import annotations

import itertools
from functools import lru_cache

import numpy as np


class FiniteGroup:
    """Multiplication table with identity at index 0."""

    def __init__(self, table, name: str):
        self.table = np.asarray(table, dtype=np.int64)
        self.n = int(self.table.shape[0])
        self.name = name
        T = self.table
        assert np.array_equal(T[T], T[:, T]), f"non-associative table for {name}"
        assert np.array_equal(T[0], np.arange(self.n)), \
            f"identity not at index 0 for {name}"
        self.inv = np.empty(self.n, dtype=np.int64)
        for a in range(self.n):
            self.inv[a] = int(np.where(self.table[a] == 0)[0][0])

    def order_of(self, a: int) -> int:
        k, x = 1, a
        while x != 0:
            x = int(self.table[x, a])
            k += 1
        return k

    def element_orders(self):
        return sorted(self.order_of(a) for a in range(self.n))

    def is_abelian(self) -> bool:
        return bool(np.array_equal(self.table, self.table.T))

    def center_size(self) -> int:
        return sum(1 for a in range(self.n)
                   if np.array_equal(self.table[a], self.table[:, a]))

    def derived_size(self) -> int:
        comms = set()
        for a in range(self.n):
            for b in range(self.n):
                c = self.table[self.table[self.table[self.inv[a],
                                                     self.inv[b]], a], b]
                comms.add(int(c))
        return len(subgroup_closure(self, comms))

    def conjugacy_class_count(self) -> int:
        seen = [False] * self.n
        cnt = 0
        for a in range(self.n):
            if seen[a]:
                continue
            cnt += 1
            for g in range(self.n):
                seen[int(self.table[self.table[self.inv[g], a], g])] = True
        return cnt


def subgroup_closure(G: FiniteGroup, seed) -> set:
    """Smallest subgroup of G containing the seed elements."""
    cur = set(int(s) for s in seed) | {0}
    frontier = list(cur)
    while frontier:
        nxt = []
        for a in frontier:
            for b in list(cur):
                for c in (int(G.table[a, b]), int(G.table[b, a])):
                    if c not in cur:
                        cur.add(c)
                        nxt.append(c)
        frontier = nxt
    return cur


# ---------------------------------------------------------------------------
# constructions
# ---------------------------------------------------------------------------


def cyclic(n: int) -> FiniteGroup:
    idx = np.arange(n)
    return FiniteGroup((idx[:, None] + idx[None, :]) % n, f"C{n}")


def direct_product(G: FiniteGroup, H: FiniteGroup, name=None) -> FiniteGroup:
    n, m = G.n, H.n
    t = np.empty((n * m, n * m), dtype=np.int64)
    for a in range(n):
        for x in range(m):
            t[a * m + x] = (G.table[a][:, None] * m
                            + H.table[x][None, :]).reshape(-1)
    return FiniteGroup(t, name or f"{G.name}x{H.name}")


def semidirect_product(N: FiniteGroup, H: FiniteGroup, phi,
                       name: str) -> FiniteGroup:
    """(n1, h1)(n2, h2) = (n1 * phi[h1](n2), h1 h2); phi maps H-indices to
    automorphisms of N given as permutation arrays on N's elements."""
    n, m = N.n, H.n
    t = np.empty((n * m, n * m), dtype=np.int64)
    for a in range(n):
        for h in range(m):
            for b in range(n):
                nb = int(phi[h][b])
                t[a * m + h, b * m: b * m + m] = N.table[a, nb] * m + H.table[h]
    return FiniteGroup(t, name)


def power_automorphism(N: FiniteGroup, fn):
    """Automorphism of an abelian group given elementwise on indices."""
    return np.array([fn(x) for x in range(N.n)], dtype=np.int64)


def dihedral(n: int) -> FiniteGroup:
    C = cyclic(n)
    inv_perm = power_automorphism(C, lambda x: (-x) % n)
    ident = np.arange(n)
    return semidirect_product(C, cyclic(2), [ident, inv_perm], f"D{2 * n}")


def dicyclic(n: int) -> FiniteGroup:
    """Order 4n: <a,b | a^(2n)=1, b^2=a^n, b a b^-1 = a^-1>."""
    N = 4 * n
    t = np.empty((N, N), dtype=np.int64)

    def enc(i, e):
        return (i % (2 * n)) * 2 + e

    for i in range(2 * n):
        for e in range(2):
            for j in range(2 * n):
                for f in range(2):
                    if e == 0:
                        r = enc(i + j, f)
                    elif f == 0:
                        r = enc(i - j, 1)
                    else:
                        r = enc(i - j + n, 0)
                    t[enc(i, e), enc(j, f)] = r
    return FiniteGroup(t, f"Dic{n}")


def permutation_group(gens, name: str) -> FiniteGroup:
    """Closure of permutation tuples under composition."""
    deg = len(gens[0])
    ident = tuple(range(deg))
    elems = {ident: 0}
    order = [ident]
    frontier = [ident]
    while frontier:
        nxt = []
        for p in frontier:
            for g in gens:
                q = tuple(p[g[i]] for i in range(deg))
                if q not in elems:
                    elems[q] = len(order)
                    order.append(q)
                    nxt.append(q)
        frontier = nxt
    n = len(order)
    t = np.empty((n, n), dtype=np.int64)
    for a, pa in enumerate(order):
        for b, pb in enumerate(order):
            t[a, b] = elems[tuple(pa[pb[i]] for i in range(deg))]
    return FiniteGroup(t, name)


def _table_from_elements(order, elems, mulf, key, name) -> FiniteGroup:
    n = len(order)
    t = np.empty((n, n), dtype=np.int64)
    for a in range(n):
        for b in range(n):
            t[a, b] = elems[key(mulf(order[a], order[b]))]
    e = next(idx for idx in range(n) if all(t[idx, b] == b for b in range(n)))
    if e != 0:
        perm = np.arange(n)
        perm[0], perm[e] = e, 0
        inv = np.argsort(perm)
        t = inv[t[perm][:, perm]]
    return FiniteGroup(t, name)


def matrix_group(gens, mulf, key, name: str) -> FiniteGroup:
    """Closure of matrix-like elements under an explicit product."""
    elems = {}
    order = []
    frontier = []
    for g in gens:
        if key(g) not in elems:
            elems[key(g)] = len(order)
            order.append(g)
            frontier.append(g)
    while frontier:
        nxt = []
        for a in frontier:
            for b in list(order):
                for c in (mulf(a, b), mulf(b, a)):
                    if key(c) not in elems:
                        elems[key(c)] = len(order)
                        order.append(c)
                        nxt.append(c)
        frontier = nxt
    return _table_from_elements(order, elems, mulf, key, name)


def central_quotient(G: FiniteGroup, zsub, name: str) -> FiniteGroup:
    """Quotient by a central subgroup given as a set of element indices."""
    zs = sorted(int(z) for z in zsub)
    cosets = {}
    rep = []
    for a in range(G.n):
        cs = frozenset(int(G.table[a, z]) for z in zs)
        if cs not in cosets:
            cosets[cs] = len(rep)
            rep.append(a)
    n = len(rep)
    t = np.empty((n, n), dtype=np.int64)
    for ia, a in enumerate(rep):
        for ib, b in enumerate(rep):
            c = int(G.table[a, b])
            cs = frozenset(int(G.table[c, z]) for z in zs)
            t[ia, ib] = cosets[cs]
    return FiniteGroup(t, name)


@lru_cache(maxsize=8)
def symmetric_group(m: int) -> FiniteGroup:
    perms = list(itertools.permutations(range(m)))
    index = {p: i for i, p in enumerate(perms)}
    n = len(perms)
    t = np.empty((n, n), dtype=np.int64)
    for a, pa in enumerate(perms):
        for b, pb in enumerate(perms):
            t[a, b] = index[tuple(pa[pb[i]] for i in range(m))]
    return FiniteGroup(t, f"S{m}")


# ---------------------------------------------------------------------------
# isomorphism testing
# ---------------------------------------------------------------------------


def minimal_generating_tuple(G: FiniteGroup):
    """A generating tuple of minimal size <= 4, preferring high orders."""
    byorder = sorted(range(G.n), key=lambda a: -G.order_of(a))
    for k in range(1, 5):
        for tup in itertools.combinations(byorder, k):
            if len(subgroup_closure(G, set(tup))) == G.n:
                return list(tup)
    raise RuntimeError("needs more than 4 generators")


def generator_words(G: FiniteGroup, gens):
    """BFS expression of every element as a word in the given generators."""
    exprs = {0: []}
    frontier = [0]
    while frontier:
        nxt = []
        for a in frontier:
            for gi, g in enumerate(gens):
                b = int(G.table[a, g])
                if b not in exprs:
                    exprs[b] = exprs[a] + [gi]
                    nxt.append(b)
        frontier = nxt
    return exprs


def isomorphism_invariants(G: FiniteGroup):
    return (
        G.n,
        tuple(G.element_orders()),
        G.is_abelian(),
        G.center_size(),
        G.derived_size(),
        G.conjugacy_class_count(),
    )


def isomorphic(G: FiniteGroup, H: FiniteGroup) -> bool:
    """Isomorphism test: invariant screen, then backtrack over images of a
    minimal generating tuple with a full-table homomorphism check."""
    if isomorphism_invariants(G) != isomorphism_invariants(H):
        return False
    gens = minimal_generating_tuple(G)
    exprs = generator_words(G, gens)
    gorders = [G.order_of(g) for g in gens]
    hcands = [[b for b in range(H.n) if H.order_of(b) == o] for o in gorders]
    for imgs in itertools.product(*hcands):
        phi = np.empty(G.n, dtype=np.int64)
        for a in range(G.n):
            v = 0
            for gi in exprs[a]:
                v = int(H.table[v, imgs[gi]])
            phi[a] = v
        if len(set(phi.tolist())) != G.n:
            continue
        okh = True
        for a in range(G.n):
            if not np.array_equal(phi[G.table[a]], H.table[phi[a], phi]):
                okh = False
                break
        if okh:
            return True
    return False


# ---------------------------------------------------------------------------
# the catalog
# ---------------------------------------------------------------------------

# number of isomorphism classes of groups of order 1..24
KNOWN_GROUP_COUNTS = (1, 1, 1, 2, 1, 2, 1, 5, 2, 2, 1, 5,
                      1, 2, 1, 14, 1, 5, 1, 5, 2, 2, 1, 15)


def _candidates():
    C = {n: cyclic(n) for n in range(1, 25)}
    S3 = dihedral(3)
    S3.name = "S3"
    cand = [C[n] for n in range(1, 25)]
    # non-cyclic abelian groups
    cand += [direct_product(C[2], C[2]),
             direct_product(C[4], C[2]),
             direct_product(C[2], direct_product(C[2], C[2])),
             direct_product(C[3], C[3]),
             direct_product(C[6], C[2]),
             direct_product(C[8], C[2]),
             direct_product(C[4], direct_product(C[2], C[2])),
             direct_product(C[2], direct_product(C[2],
                                                 direct_product(C[2], C[2]))),
             direct_product(C[4], C[4]),
             direct_product(C[9], C[2]),
             direct_product(C[3], C[6]),
             direct_product(C[10], C[2]),
             direct_product(C[12], C[2]),
             direct_product(C[6], direct_product(C[2], C[2]))]
    # dihedral and dicyclic families
    cand += [S3] + [dihedral(n) for n in range(4, 13)]
    cand += [dicyclic(n) for n in range(2, 7)]
    # alternating / symmetric
    A4 = permutation_group([(1, 2, 0, 3), (0, 2, 3, 1)], "A4")
    S4 = permutation_group([(1, 0, 2, 3), (1, 2, 3, 0)], "S4")
    cand += [A4, S4, direct_product(C[2], A4)]
    # the remaining order-16 groups
    M16 = semidirect_product(
        C[8], C[2],
        [np.arange(8), power_automorphism(C[8], lambda x: (5 * x) % 8)],
        "M4(2)")
    SD16 = semidirect_product(
        C[8], C[2],
        [np.arange(8), power_automorphism(C[8], lambda x: (3 * x) % 8)],
        "SD16")
    C4sC4 = semidirect_product(
        C[4], C[4],
        [power_automorphism(C[4], lambda x, h=h: ((-x) % 4) if h % 2 else x)
         for h in range(4)],
        "C4:C4")
    V = direct_product(C[2], C[2])
    swap = np.array([0, 2, 1, 3], dtype=np.int64)
    C22sC4 = semidirect_product(
        V, C[4],
        [np.arange(4) if h % 2 == 0 else swap for h in range(4)],
        "C2^2:C4")
    D4 = dihedral(4)
    # central product C4 o D4: kill (2 in C4, the central rotation of D4)
    r2 = next(a for a in range(8)
              if D4.order_of(a) == 2
              and np.array_equal(D4.table[a], D4.table[:, a]))
    pauli = central_quotient(direct_product(C[4], D4), {0, 2 * 8 + r2},
                             "C4oD4")
    cand += [M16, SD16, C4sC4, C22sC4,
             direct_product(D4, C[2]),
             direct_product(dicyclic(2), C[2]),
             pauli]
    # orders 18, 20, 21
    neg9 = np.array([((-(a // 3)) % 3) * 3 + ((-(a % 3)) % 3)
                     for a in range(9)], dtype=np.int64)
    gd9 = semidirect_product(direct_product(C[3], C[3]), C[2],
                             [np.arange(9), neg9], "(C3xC3):C2")
    cand += [gd9, direct_product(C[3], S3)]
    cand += [semidirect_product(
        C[5], C[4],
        [power_automorphism(C[5], lambda x, h=h: (x * pow(2, h, 5)) % 5)
         for h in range(4)],
        "F20")]
    cand += [semidirect_product(
        C[7], C[3],
        [power_automorphism(C[7], lambda x, h=h: (x * pow(2, h, 7)) % 7)
         for h in range(3)],
        "C7:C3")]
    # order 24
    SL23 = matrix_group(
        [((1, 1), (0, 1)), ((0, 2), (1, 0))],
        lambda a, b: tuple(tuple((a[i][0] * b[0][j] + a[i][1] * b[1][j]) % 3
                                 for j in range(2)) for i in range(2)),
        lambda m: m,
        "SL(2,3)")
    C3sC8 = semidirect_product(
        C[3], C[8],
        [power_automorphism(C[3], lambda x, h=h: ((-x) % 3 if h % 2 else x))
         for h in range(8)],
        "C3:C8")
    cand += [SL23, C3sC8,
             direct_product(C[3], dihedral(4)),
             direct_product(C[3], dicyclic(2)),
             direct_product(C[4], S3),
             direct_product(C[2], direct_product(C[2], S3)),
             direct_product(C[2], dicyclic(3))]
    # C3 : D8 for the two index-2 kernels of D8 (reflections act / rotations act)
    c3inv = power_automorphism(C[3], lambda x: (-x) % 3)
    flagA = [a % 2 for a in range(8)]
    flagB = [(a // 2) % 2 for a in range(8)]
    cand += [semidirect_product(
        C[3], D4, [np.arange(3) if flagA[h] == 0 else c3inv for h in range(8)],
        "C3:D8(refl)")]
    cand += [semidirect_product(
        C[3], D4, [np.arange(3) if flagB[h] == 0 else c3inv for h in range(8)],
        "C3:D8(rot)")]
    return cand


_CATALOG = None


def build_catalog():
    """All 74 groups of order <= 24, one per isomorphism class (cached)."""
    global _CATALOG
    if _CATALOG is None:
        cat = []
        for G in _candidates():
            if G.n > 24:
                continue
            if not any(H.n == G.n and isomorphic(G, H) for H in cat):
                cat.append(G)
        counts = [sum(1 for G in cat if G.n == n) for n in range(1, 25)]
        assert tuple(counts) == KNOWN_GROUP_COUNTS, f"catalog counts {counts}"
        _CATALOG = cat
    return _CATALOG

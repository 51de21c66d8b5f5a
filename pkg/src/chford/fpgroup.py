"""Finitely presented groups for the two manifolds at infinity.

Words are sequences of signed 1-based generator indices.  The ridge-cycle
tables of the two quotient 3-balls are stored verbatim as face/pairing
data; composing a cycle's pairing maps in reverse order yields the cycle
relator, which is compared against the stored relator table row by row.

Group invariants are computed with exact integer arithmetic throughout:
abelianization via an integer Smith normal form on the exponent-sum
matrix, homomorphism counting by vectorized enumeration of generator
images into a finite target given by its multiplication table, subgroup
counts by index via the transitive-action sieve applied to homomorphism
counts into symmetric groups, and subgroup indices via HLT-style
Todd-Coxeter coset enumeration with an explicit coset cap.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field

import numpy as np

Word = list[int]


# ---------------------------------------------------------------------------
# words
# ---------------------------------------------------------------------------


def freely_reduce(word) -> Word:
    """Cancel adjacent inverse pairs until none remain."""
    out: Word = []
    for x in word:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(int(x))
    return out


def cyclically_reduce(word) -> Word:
    w = freely_reduce(word)
    while len(w) >= 2 and w[0] == -w[-1]:
        w = w[1:-1]
    return w


def inverse_word(word) -> Word:
    return [-x for x in reversed(word)]


def parse_word(text: str, gens) -> Word:
    """Parse a word over named generators.

    Two encodings are accepted: space-separated tokens with a leading
    ``-`` for inverses (works for any generator names), and, when every
    generator name is a single lowercase letter, a compact string where
    an uppercase letter denotes the inverse.
    """
    gens = list(gens)
    if " " in text.strip() or text.strip() in gens:
        out = []
        for tk in text.split():
            if tk.startswith("-"):
                out.append(-(gens.index(tk[1:]) + 1))
            else:
                out.append(gens.index(tk) + 1)
        return out
    if not all(len(g) == 1 and g.islower() for g in gens):
        raise ValueError("compact encoding needs single-letter generators")
    out = []
    for ch in text:
        if ch.isspace():
            continue
        if ch.islower():
            out.append(gens.index(ch) + 1)
        else:
            out.append(-(gens.index(ch.lower()) + 1))
    return out


def format_word(word, gens, compact: bool = False) -> str:
    if compact:
        if not all(len(g) == 1 and g.islower() for g in gens):
            raise ValueError("compact encoding needs single-letter generators")
        return "".join(gens[x - 1] if x > 0 else gens[-x - 1].upper()
                       for x in word)
    return " ".join(gens[x - 1] if x > 0 else "-" + gens[-x - 1]
                    for x in word)


# ---------------------------------------------------------------------------
# presentations
# ---------------------------------------------------------------------------


@dataclass
class Presentation:
    """Generator names plus freely reduced relator words."""

    gens: tuple
    rels: list = field(default_factory=list)

    def __post_init__(self):
        self.gens = tuple(self.gens)
        rels = []
        for r in self.rels:
            w = parse_word(r, self.gens) if isinstance(r, str) else list(r)
            rels.append(freely_reduce(w))
        self.rels = rels

    def show(self) -> list:
        return [format_word(r, self.gens) for r in self.rels]

    def exponent_matrix(self) -> list:
        """Integer matrix of generator exponent sums, one row per relator."""
        rows = []
        for r in self.rels:
            row = [0] * len(self.gens)
            for x in r:
                row[abs(x) - 1] += 1 if x > 0 else -1
            rows.append(row)
        return rows

    def to_text(self) -> str:
        compact = all(len(g) == 1 and g.islower() for g in self.gens)
        rels = ", ".join(format_word(r, self.gens, compact=compact)
                         for r in self.rels)
        return f"gens: {','.join(self.gens)} ; rels: {rels}"

    @classmethod
    def from_text(cls, text: str) -> "Presentation":
        head, _, tail = text.partition(";")
        gens = [g.strip() for g in head.split(":", 1)[1].split(",") if g.strip()]
        relpart = tail.split(":", 1)[1].strip() if ":" in tail else ""
        rels = [r.strip() for r in relpart.split(",") if r.strip()]
        return cls(tuple(gens), rels)


# ---------------------------------------------------------------------------
# integer Smith normal form and abelianization
# ---------------------------------------------------------------------------


def smith_diagonal(mat) -> list:
    """Diagonal of the Smith normal form of an integer matrix.

    Exact over Python ints; successive entries divide.  Returns the
    nonnegative diagonal, one entry per pivot position.
    """
    a = [[int(v) for v in row] for row in mat]
    m = len(a)
    n = len(a[0]) if m else 0
    t = 0
    while t < min(m, n):
        # locate the smallest-magnitude nonzero entry in the trailing block
        best = None
        for i in range(t, m):
            for j in range(t, n):
                if a[i][j] != 0 and (best is None
                                     or abs(a[i][j]) < abs(a[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        bi, bj = best
        a[t], a[bi] = a[bi], a[t]
        for row in a:
            row[t], row[bj] = row[bj], row[t]
        # clear the pivot row and column by division steps
        dirty = False
        for i in range(t + 1, m):
            if a[i][t] != 0:
                q = a[i][t] // a[t][t]
                for j in range(t, n):
                    a[i][j] -= q * a[t][j]
                if a[i][t] != 0:
                    dirty = True
        for j in range(t + 1, n):
            if a[t][j] != 0:
                q = a[t][j] // a[t][t]
                for i in range(t, m):
                    a[i][j] -= q * a[i][t]
                if a[t][j] != 0:
                    dirty = True
        if dirty:
            continue
        # pivot must divide every remaining entry
    # (re-run with the offending row folded in otherwise)
        p = a[t][t]
        offender = None
        for i in range(t + 1, m):
            for j in range(t + 1, n):
                if a[i][j] % p != 0:
                    offender = i
                    break
            if offender is not None:
                break
        if offender is not None:
            for j in range(t, n):
                a[t][j] += a[offender][j]
            continue
        t += 1
    return [abs(a[i][i]) for i in range(min(m, n))]


@dataclass(frozen=True)
class AbelianInvariants:
    """Free rank plus torsion coefficients with successive divisibility."""

    free_rank: int
    torsion: tuple

    def __post_init__(self):
        for d1, d2 in zip(self.torsion, self.torsion[1:]):
            assert d2 % d1 == 0, "torsion coefficients must divide successively"


def abelianization(pres: Presentation) -> AbelianInvariants:
    """Invariants of the exponent-sum matrix under Smith normal form."""
    ngen = len(pres.gens)
    if not pres.rels:
        return AbelianInvariants(ngen, ())
    diag = smith_diagonal(pres.exponent_matrix())
    nonzero = [d for d in diag if d != 0]
    torsion = tuple(sorted(d for d in nonzero if d > 1))
    return AbelianInvariants(ngen - len(nonzero), torsion)


# ---------------------------------------------------------------------------
# Tietze simplification
# ---------------------------------------------------------------------------


def simplify(pres: Presentation, only_trivial: bool = False) -> Presentation:
    """Eliminate generators via Tietze moves.

    Repeatedly finds a relator in which some generator occurs exactly
    once, solves for that generator and substitutes everywhere, dropping
    the generator and the relator.  With ``only_trivial`` the move is
    restricted to length-1 relators (killing generators set to the
    identity).  Abelianization, homomorphism counts and subgroup counts
    are invariant under these moves.
    """
    gens = list(pres.gens)
    rels = [list(r) for r in pres.rels]
    changed = True
    while changed:
        changed = False
        rels = [cyclically_reduce(r) for r in rels]
        rels = [r for r in rels if r]
        for ri, r in enumerate(rels):
            if only_trivial and len(r) != 1:
                continue
            counts = {}
            for x in r:
                counts[abs(x)] = counts.get(abs(x), 0) + 1
            cand = [g for g, c in counts.items() if c == 1]
            if not cand:
                continue
            g = min(cand)
            pos = next(i for i, x in enumerate(r) if abs(x) == g)
            r2 = r[pos:] + r[:pos]
            if r2[0] == g:
                repl = inverse_word(r2[1:])
            else:
                repl = r2[1:]
            new_rels = []
            for rj, rr in enumerate(rels):
                if rj == ri:
                    continue
                out = []
                for x in rr:
                    if abs(x) == g:
                        out.extend(repl if x > 0 else inverse_word(repl))
                    else:
                        out.append(x)
                new_rels.append(freely_reduce(out))
            gmap = {}
            new_gens = []
            for idx, nm in enumerate(gens, start=1):
                if idx == g:
                    continue
                gmap[idx] = len(new_gens) + 1
                new_gens.append(nm)
            rels = [[gmap[abs(x)] * (1 if x > 0 else -1) for x in rr]
                    for rr in new_rels]
            gens = new_gens
            changed = True
            break
    out = Presentation(tuple(gens), [])
    out.rels = [r for r in (cyclically_reduce(r) for r in rels) if r]
    return out


# ---------------------------------------------------------------------------
# ridge-cycle tables
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CycleTable:
    """Verbatim side-pairing combinatorics of one quotient 3-ball.

    ``pairings`` maps each generator token to its (source, target) face.
    Each cycle stores the ordered ridges it visits (as unordered face
    pairs, first ridge repeated at the end) and the pairing maps applied
    between consecutive ridges (signed tokens, ``-`` prefix = inverse).
    """

    name: str
    gens: tuple
    faces: tuple
    pairings: dict
    cycles: dict       # cycle_id -> (ridges: tuple of 2-tuples, maps: tuple of str)
    printed_relators: dict  # cycle_id -> relator string over gens

    def validate(self) -> None:
        """Closure and incidence checks for every cycle.

        Each cycle must return to its starting ridge; every applied map's
        base pairing must touch the ridge it is applied to (its source or
        target face lies on that ridge); ridge faces must be known.
        """
        for fam, (src, dst) in self.pairings.items():
            assert fam in self.gens and src in self.faces and dst in self.faces
        for cid, (ridges, maps) in self.cycles.items():
            assert len(ridges) == len(maps) + 1, f"{cid}: step count mismatch"
            assert frozenset(ridges[0]) == frozenset(ridges[-1]), \
                f"{cid}: cycle does not close"
            for ridge, mp in zip(ridges, maps):
                for face in ridge:
                    assert face in self.faces, f"{cid}: unknown face {face}"
                base = mp[1:] if mp.startswith("-") else mp
                src, dst = self.pairings[base]
                assert src in ridge or dst in ridge, \
                    f"{cid}: map {mp} does not touch ridge {ridge}"


def cycle_to_relator(table: CycleTable, cycle_id: str) -> Word:
    """Relator of a ridge cycle: its pairing maps composed in reverse order."""
    ridges, maps = table.cycles[cycle_id]
    assert frozenset(ridges[0]) == frozenset(ridges[-1]), "cycle must close"
    word = []
    for mp in reversed(maps):
        if mp.startswith("-"):
            word.append(-(table.gens.index(mp[1:]) + 1))
        else:
            word.append(table.gens.index(mp) + 1)
    return freely_reduce(word)


def cycle_relator_report(table: CycleTable) -> dict:
    """Derived-vs-printed relator comparison for every cycle row."""
    rows = {}
    for cid in table.cycles:
        derived = cycle_to_relator(table, cid)
        printed = freely_reduce(parse_word(table.printed_relators[cid],
                                           table.gens))
        rows[cid] = {
            "derived": format_word(derived, table.gens),
            "printed": format_word(printed, table.gens),
            "match": derived == printed,
        }
    return {"rows": rows, "all_match": all(r["match"] for r in rows.values())}


_GENS_3PP = ("a1", "a2", "d1", "d2", "d3", "b4", "b5")
_FACES_3PP = ("E1+", "E1-", "E2+", "E2-", "D1+", "D1-", "D2+", "D2-",
              "D3+", "D3-", "B4", "B4'", "B5", "B5'")
_PAIRINGS_3PP = {
    "a1": ("E1-", "E2+"),
    "a2": ("E2-", "E1+"),
    "d1": ("D1-", "D1+"),
    "d2": ("D2-", "D2+"),
    "d3": ("D3-", "D3+"),
    "b4": ("B4", "B4'"),
    "b5": ("B5", "B5'"),
}
_CYCLES_3PP = {
    "e1": ((("B4", "B5'"), ("B4'", "B5"), ("B5'", "B5"), ("B5'", "B4")),
           ("b4", "b5", "b5")),
    "e2": ((("B4", "B5"), ("B5'", "D3-"), ("D3+", "B4'"), ("B4", "B5")),
           ("b5", "d3", "-b4")),
    "e3": ((("B4'", "B5'"), ("B5", "D3+"), ("D3-", "B4"), ("B4'", "B5'")),
           ("-b5", "-d3", "b4")),
    "e4": ((("D1+", "E1+"), ("E2-", "D2-"), ("D2+", "E2+"), ("E1-", "D1-"),
            ("D1+", "E1+")),
           ("-a2", "d2", "-a1", "d1")),
    "e5": ((("E2+", "D1+"), ("D1-", "E2-"), ("E1+", "D2+"), ("D2-", "E1-"),
            ("E2+", "D1+")),
           ("-d1", "a2", "-d2", "a1")),
    "e6": ((("E1+", "E1-"), ("E2+", "D3+"), ("D3-", "E2-"), ("E1+", "E1-")),
           ("a1", "-d3", "a2")),
    "e7": ((("B4'", "D1+"), ("D1-", "B5'"), ("B5", "D2+"), ("D2-", "B4"),
            ("B4'", "D1+")),
           ("-d1", "-b5", "-d2", "b4")),
}
_RELATORS_3PP = {
    "e1": "b5 b5 b4",
    "e2": "-b4 d3 b5",
    "e3": "b4 -d3 -b5",
    "e4": "d1 -a1 d2 -a2",
    "e5": "a1 -d2 a2 -d1",
    "e6": "a2 -d3 a1",
    "e7": "b4 -d2 -b5 -d1",
}

_GENS_34P = ("g1", "g2", "a", "d1", "d2", "d3", "b4", "b9")
_FACES_34P = ("F1+", "F1-", "F2+", "F2-", "E1", "E2", "D1+", "D1-",
              "D2+", "D2-", "D3+", "D3-", "B4", "B4'", "B9", "B9'")
_PAIRINGS_34P = {
    "g1": ("F1-", "F1+"),
    "g2": ("F2-", "F2+"),
    "a": ("E1", "E2"),
    "d1": ("D1-", "D1+"),
    "d2": ("D2-", "D2+"),
    "d3": ("D3-", "D3+"),
    "b4": ("B4", "B4'"),
    "b9": ("B9", "B9'"),
}
_CYCLES_34P = {
    "e1": ((("E1", "F1-"), ("F1+", "B9"), ("B9'", "E2"), ("E1", "D3-"),
            ("D3+", "B9"), ("B9'", "F2-"), ("F2+", "E2"), ("E1", "B4"),
            ("B4'", "E2"), ("E1", "B9"), ("B9'", "D3-"), ("D3+", "E2"),
            ("E1", "F1-")),
           ("g1", "b9", "-a", "d3", "b9", "g2", "-a", "b4", "-a", "b9",
            "d3", "-a")),
    "e2": ((("B9", "B4'"), ("B4", "B9"), ("B9", "B9'"), ("B9", "B4'")),
           ("-b9", "-b4", "-b9")),
    "e3": ((("D1+", "B9"), ("B9'", "D3-"), ("D3+", "B4'"), ("B4", "D1-"),
            ("D1+", "B9")),
           ("d1", "b9", "d3", "-b4")),
    "e4": ((("D1+", "E1"), ("E2", "D2+"), ("D2-", "E2"), ("E1", "D1-"),
            ("D1+", "E1")),
           ("d1", "a", "-d2", "-a")),
    "e5": ((("D3+", "E1"), ("E2", "D3+"), ("D3-", "E2"), ("E1", "D3-"),
            ("D3+", "E1")),
           ("d3", "a", "-d3", "-a")),
    "e6": ((("B9'", "D1+"), ("D1-", "B9'"), ("B9", "D2-"), ("D2+", "B9"),
            ("B9'", "D1+")),
           ("-d1", "-b9", "d2", "b9")),
    "e7": ((("B9", "D3+"), ("D3-", "B4"), ("B4'", "D2+"), ("D2-", "B9'"),
            ("B9", "D3+")),
           ("-b9", "-d3", "b4", "-d2")),
    "e8": ((("F1-", "F1+"), ("F1-", "F1+")), ("g1",)),
    "e9": ((("F2-", "F2+"), ("F2-", "F2+")), ("g2",)),
}
_RELATORS_34P = {
    "e1": "-a d3 b9 -a b4 -a g2 b9 d3 -a b9 g1",
    "e2": "-b9 -b4 -b9",
    "e3": "-b4 d3 b9 d1",
    "e4": "-a -d2 a d1",
    "e5": "-a -d3 a d3",
    "e6": "b9 d2 -b9 -d1",
    "e7": "-d2 b4 -d3 -b9",
    "e8": "g1",
    "e9": "g2",
}


def cycle_tables() -> dict:
    """The two stored ridge-cycle tables, validated."""
    t3 = CycleTable("3pp", _GENS_3PP, _FACES_3PP, _PAIRINGS_3PP,
                    _CYCLES_3PP, _RELATORS_3PP)
    t4 = CycleTable("34p", _GENS_34P, _FACES_34P, _PAIRINGS_34P,
                    _CYCLES_34P, _RELATORS_34P)
    t3.validate()
    t4.validate()
    return {"3pp": t3, "34p": t4}


def reference_presentations() -> dict:
    """The four stored presentations.

    The two manifold groups come from the relator tables (in the pinned
    generator order); the two comparison targets are the census
    presentations of the magic manifold 6_1^3 and of m295.
    """
    return {
        "3pp-manifold": Presentation(_GENS_3PP,
                                     [_RELATORS_3PP[k] for k in sorted(_RELATORS_3PP)]),
        "34p-manifold": Presentation(_GENS_34P,
                                     [_RELATORS_34P[k] for k in sorted(_RELATORS_34P)]),
        "6_1^3": Presentation(("s", "t", "w"),
                              ["s s -w s t -s -s w -s -t", "t -w -t w"]),
        "m295": Presentation(("s", "t"),
                             ["s -t -t -t -t s s -t -s t t t t -s -s t"]),
    }


# ---------------------------------------------------------------------------
# homomorphism counting and the subgroup-count sieve
# ---------------------------------------------------------------------------


def count_homs(pres: Presentation, group, chunk: int = 1 << 21) -> int:
    """Number of homomorphisms into a finite group given by its table.

    Enumerates all generator-image tuples (vectorized in chunks) and
    keeps those under which every relator evaluates to the identity.
    """
    k = len(pres.gens)
    n = int(group.table.shape[0])
    total = n ** k
    if k == 0:
        return 1
    tab = group.table
    inv = group.inv
    count = 0
    for start in range(0, total, chunk):
        stop = min(start + chunk, total)
        idx = np.arange(start, stop, dtype=np.int64)
        imgs = [(idx // (n ** (k - 1 - j))) % n for j in range(k)]
        alive = np.ones(stop - start, dtype=bool)
        for r in pres.rels:
            cur = np.zeros(stop - start, dtype=np.int64)
            for x in r:
                gi = abs(x) - 1
                im = imgs[gi] if x > 0 else inv[imgs[gi]]
                cur = tab[cur, im]
            alive &= cur == 0
            if not alive.any():
                break
        count += int(alive.sum())
    return count


def subgroup_counts(pres: Presentation, max_index: int = 5,
                    sym_groups=None) -> list:
    """Number of subgroups of each index 1..max_index.

    Uses the transitive-action sieve: homomorphisms to the symmetric
    group S_m split by the orbit of one point, giving the number T_m of
    transitive actions on m points by inclusion-exclusion, and each
    index-m subgroup corresponds to exactly (m-1)! transitive actions.
    """
    if sym_groups is None:
        from .catalog import symmetric_group
        sym_groups = [symmetric_group(m) for m in range(1, max_index + 1)]
    h = [1] + [count_homs(pres, g) for g in sym_groups]
    T = [0] * (max_index + 1)
    a = [0] * (max_index + 1)
    for m in range(1, max_index + 1):
        s = 0
        for k in range(1, m):
            s += math.comb(m - 1, k - 1) * T[k] * h[m - k]
        T[m] = h[m] - s
        assert T[m] % math.factorial(m - 1) == 0, "sieve divisibility failed"
        a[m] = T[m] // math.factorial(m - 1)
    return a[1:]


# ---------------------------------------------------------------------------
# Todd-Coxeter coset enumeration (HLT)
# ---------------------------------------------------------------------------


@dataclass
class CosetTableResult:
    """Complete coset table: rows over columns (g1, g1^-1, g2, ...)."""

    gens: tuple
    rows: list

    @property
    def index(self) -> int:
        return len(self.rows)

    def action(self, coset: int, word) -> int:
        for x in word:
            col = 2 * (abs(x) - 1) + (0 if x > 0 else 1)
            coset = self.rows[coset][col]
        return coset


class _Enumerator:
    def __init__(self, ngens: int, max_cosets: int):
        self.ncols = 2 * ngens
        self.max_cosets = max_cosets
        self.table = [[None] * self.ncols]
        self.parent = [0]
        self.queue = deque()

    @staticmethod
    def _col(x: int) -> int:
        return 2 * (abs(x) - 1) + (0 if x > 0 else 1)

    @staticmethod
    def _inv_col(x: int) -> int:
        return 2 * (abs(x) - 1) + (1 if x > 0 else 0)

    def rep(self, a: int) -> int:
        while self.parent[a] != a:
            self.parent[a] = self.parent[self.parent[a]]
            a = self.parent[a]
        return a

    def define(self, a: int, x: int) -> int:
        if len(self.table) >= self.max_cosets:
            raise OverflowError
        b = len(self.table)
        self.table.append([None] * self.ncols)
        self.parent.append(b)
        self.table[a][self._col(x)] = b
        self.table[b][self._inv_col(x)] = a
        return b

    def _merge(self, a: int, b: int) -> None:
        a, b = self.rep(a), self.rep(b)
        if a == b:
            return
        if a > b:
            a, b = b, a
        self.parent[b] = a
        self.queue.append(b)

    def _process_coincidences(self) -> None:
        # transfer each table entry of a dead coset to its representative
        while self.queue:
            g = self.queue.popleft()
            row = self.table[g]
            for col in range(self.ncols):
                d = row[col]
                if d is None:
                    continue
                row[col] = None
                self.table[d][col ^ 1] = None
                mu = self.rep(g)
                nu = self.rep(d)
                ex = self.table[mu][col]
                if ex is not None:
                    self._merge(nu, ex)
                else:
                    back = self.table[nu][col ^ 1]
                    if back is not None:
                        self._merge(mu, back)
                    else:
                        self.table[mu][col] = nu
                        self.table[nu][col ^ 1] = mu

    def scan_and_fill(self, a: int, word) -> None:
        a = self.rep(a)
        f, b = a, a
        i, j = 0, len(word) - 1
        while True:
            # scan forward as far as defined
            while i <= j:
                nxt = self.table[f][self._col(word[i])]
                if nxt is None:
                    break
                f = self.rep(nxt)
                i += 1
            if i > j:
                if f != b:
                    self._merge(f, b)
                    self._process_coincidences()
                return
            # scan backward as far as defined
            while j >= i:
                prv = self.table[b][self._inv_col(word[j])]
                if prv is None:
                    break
                b = self.rep(prv)
                j -= 1
            if j < i:
                self._merge(f, b)
                self._process_coincidences()
                return
            if j == i:
                # deduction: f . word[i] = b
                self.table[f][self._col(word[i])] = b
                self.table[b][self._inv_col(word[i])] = f
                return
            # define a new coset at the forward front and continue
            f = self.define(f, word[i])
            i += 1

    def live(self):
        return [a for a in range(len(self.table)) if self.rep(a) == a]


def coset_enumerate(pres: Presentation, subgroup_gens=(),
                    max_cosets: int = 1_000_000):
    """HLT-style Todd-Coxeter enumeration of the cosets of a subgroup.

    Returns a complete ``CosetTableResult`` (index = row count) or None
    when the coset cap is exceeded, in which case the index is undecided.
    Deterministic for a fixed presentation and scanning order.
    """
    enum = _Enumerator(len(pres.gens), max_cosets)
    sub = [parse_word(w, pres.gens) if isinstance(w, str) else list(w)
           for w in subgroup_gens]
    try:
        for w in sub:
            enum.scan_and_fill(0, freely_reduce(w))
        cursor = 0
        while cursor < len(enum.table):
            if enum.rep(cursor) != cursor:
                cursor += 1
                continue
            for r in pres.rels:
                enum.scan_and_fill(cursor, r)
                if enum.rep(cursor) != cursor:
                    break
            if enum.rep(cursor) != cursor:
                cursor += 1
                continue
            for col in range(enum.ncols):
                if enum.rep(cursor) != cursor:
                    break
                if enum.table[cursor][col] is None:
                    x = (col // 2 + 1) * (1 if col % 2 == 0 else -1)
                    enum.define(cursor, x)
            cursor += 1
    except OverflowError:
        return None
    live = enum.live()
    renum = {a: i for i, a in enumerate(live)}
    rows = []
    for a in live:
        row = []
        for col in range(enum.ncols):
            v = enum.table[a][col]
            assert v is not None, "incomplete table after enumeration"
            row.append(renum[enum.rep(v)])
        rows.append(row)
    return CosetTableResult(pres.gens, rows)

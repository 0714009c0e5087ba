"""Explicit rooted planar maps, for brute-force cross-checks at small sizes.

A map with E edges has half-edges 0..2E-1; half-edges 2e and 2e+1 form
edge e (so the opposite of h is h ^ 1).  ``nxt[h]`` is the next half-edge
counterclockwise around the vertex of h.  ``root`` is the first half-edge
after the root corner (``None`` for the atomic map).  For oriented maps
``orient[e] = 1`` means edge e leaves the vertex of half-edge 2e.

All maps are built by the two operations of the Tutte decomposition:

* merge(M1, M2, a): a root loop enclosing M1, followed by M2; around the
  new root vertex the order is x, (root half-edges of M1), y, (those of M2)
  where x, y are the loop's half-edges and a is the letter of x;
* split(M, i): the root vertex of M, with root half-edges h_1..h_2d, is
  split in two.  The new root vertex keeps h_{2d-2i+2}..h_2d after the new
  root half-edge x; the other end y of the root edge gets h_1..h_{2d-2i+1}
  (preceded, for prime splits, by the root half-edges of an attached map).

Each construction is inverted by deleting the root loop or contracting the
root edge, so generated objects are distinct; the canonical code is used
to assert it.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .words import Word, is_quasi_balanced


@dataclass(frozen=True)
class RotationMap:
    nxt: Tuple[int, ...]
    root: Optional[int]
    orient: Optional[Tuple[int, ...]] = None

    @property
    def n_edges(self) -> int:
        return len(self.nxt) // 2

    @property
    def opposite(self) -> Tuple[int, ...]:
        return tuple(h ^ 1 for h in range(len(self.nxt)))

    def is_atomic(self) -> bool:
        return self.root is None

    def root_half_edges(self) -> List[int]:
        if self.root is None:
            return []
        out = [self.root]
        h = self.nxt[self.root]
        while h != self.root:
            out.append(h)
            h = self.nxt[h]
        return out

    def root_degree(self) -> int:
        return len(self.root_half_edges())

    def outgoing(self, h: int) -> int:
        o = self.orient[h >> 1]
        return o if h % 2 == 0 else 1 - o

    def root_word(self) -> Word:
        hs = self.root_half_edges()
        return Word(len(hs), sum(self.outgoing(h) << i for i, h in enumerate(hs)))

    def vertices(self) -> List[List[int]]:
        seen = [False] * len(self.nxt)
        out = []
        for h0 in range(len(self.nxt)):
            if not seen[h0]:
                cyc = []
                h = h0
                while not seen[h]:
                    seen[h] = True
                    cyc.append(h)
                    h = self.nxt[h]
                out.append(cyc)
        return out or [[]]

    def faces(self) -> int:
        if not self.nxt:
            return 1
        seen = [False] * len(self.nxt)
        count = 0
        for h0 in range(len(self.nxt)):
            if not seen[h0]:
                count += 1
                h = h0
                while not seen[h]:
                    seen[h] = True
                    h = self.nxt[h ^ 1]
        return count

    def check(self):
        """Assert the structural invariants of a rooted planar map."""
        H = len(self.nxt)
        assert sorted(self.nxt) == list(range(H)), "nxt is not a permutation"
        if H == 0:
            assert self.root is None
            return
        assert self.root is not None and 0 <= self.root < H
        # connectivity through vertices and edges
        seen = {self.root}
        stack = [self.root]
        while stack:
            h = stack.pop()
            for g in (self.nxt[h], h ^ 1):
                if g not in seen:
                    seen.add(g)
                    stack.append(g)
        assert len(seen) == H, "map is not connected"
        V = len(self.vertices())
        assert V - self.n_edges + self.faces() == 2, "not planar"

    def is_eulerian_map(self) -> bool:
        return all(len(c) % 2 == 0 for c in self.vertices())

    def is_eulerian_orientation(self) -> bool:
        if self.orient is None:
            return False
        return all(2 * sum(self.outgoing(h) for h in c) == len(c) for c in self.vertices())

    def code(self) -> Tuple[int, ...]:
        """Breadth-first canonical code from the root half-edge."""
        if self.root is None:
            return ()
        label = {self.root: 0}
        order = [self.root]
        for h in order:
            for g in (self.nxt[h], h ^ 1):
                if g not in label:
                    label[g] = len(order)
                    order.append(g)
        out = []
        for h in order:
            out += [label[self.nxt[h]], label[h ^ 1]]
            if self.orient is not None:
                out.append(self.outgoing(h))
        return tuple(out)

    def code_hex(self) -> str:
        return bytes(self.code()).hex() if self.n_edges < 128 else ",".join(map(str, self.code()))

    def to_json(self):
        return {"opposite": list(self.opposite), "next": list(self.nxt), "root": self.root,
                "orient": None if self.orient is None else list(self.orient)}

    @classmethod
    def from_json(cls, d) -> "RotationMap":
        return cls(tuple(d["next"]), d["root"], None if d.get("orient") is None else tuple(d["orient"]))


ATOMIC = RotationMap((), None, None)
ATOMIC_ORIENTED = RotationMap((), None, ())


# -- constructions -----------------------------------------------------------

def _shift(m: RotationMap, off: int):
    return [h + off for h in m.nxt]


def _set_cycle(nxt: List[int], cyc: Sequence[int]):
    for a, b in zip(cyc, list(cyc[1:]) + [cyc[0]]):
        nxt[a] = b


def _orient_cat(*parts) -> Optional[Tuple[int, ...]]:
    if any(p is None for p in parts):
        return None
    out: Tuple[int, ...] = ()
    for p in parts:
        out += tuple(p)
    return out


def concat(a: RotationMap, b: RotationMap) -> RotationMap:
    """Identify the root vertices: root half-edges of a, then those of b."""
    if a.is_atomic():
        return b
    if b.is_atomic():
        return a
    off = len(a.nxt)
    nxt = list(a.nxt) + _shift(b, off)
    ra = a.root_half_edges()
    rb = [h + off for h in b.root_half_edges()]
    _set_cycle(nxt, ra + rb)
    return RotationMap(tuple(nxt), a.root, _orient_cat(a.orient, b.orient))


def loop_around(m: RotationMap, a: Optional[int] = None) -> RotationMap:
    """A new root loop enclosing m; ``a`` is the letter of its first half-edge."""
    nxt = [0, 0] + _shift(m, 2)
    inner = [h + 2 for h in m.root_half_edges()]
    _set_cycle(nxt, [0] + inner + [1])
    orient = None if m.orient is None or a is None else (a,) + m.orient
    return RotationMap(tuple(nxt), 0, orient)


def merge(m1: RotationMap, m2: RotationMap, a: Optional[int] = None) -> RotationMap:
    return concat(loop_around(m1, a), m2)


def split(m: RotationMap, i: int, a: Optional[int] = None,
          attach: RotationMap = ATOMIC) -> RotationMap:
    """i-split of the root vertex of m; ``attach`` goes at the far end of the new root edge."""
    hs = m.root_half_edges()
    d2 = len(hs)
    if not 1 <= i <= d2 // 2:
        raise ValueError(f"{i}-split of a root vertex of degree {d2}")
    off_m = 2
    off_a = 2 + len(m.nxt)
    nxt = [0, 0] + _shift(m, off_m) + _shift(attach, off_a)
    hs = [h + off_m for h in hs]
    cut = d2 - 2 * i + 1
    _set_cycle(nxt, [0] + hs[cut:])
    _set_cycle(nxt, [1] + [h + off_a for h in attach.root_half_edges()] + hs[:cut])
    orient = None
    if m.orient is not None and a is not None:
        extra = () if attach.is_atomic() else attach.orient
        orient = _orient_cat((a,), m.orient, extra)
    return RotationMap(tuple(nxt), 0, orient)


def forced_letter(tail: Word) -> int:
    """The letter a making a + tail balanced (tail quasi-balanced)."""
    return 1 if tail.zeros > tail.ones else 0


# -- Eulerian maps ------------------------------------------------------------

def eulerian_maps_count(n: int) -> int:
    if n < 0:
        raise ValueError("n must be non-negative")
    if n == 0:
        return 1
    return 3 * 2 ** (n - 1) * comb(2 * n, n) // ((n + 1) * (n + 2))


def _dedup(objs: Iterable[RotationMap], what: str) -> List[RotationMap]:
    seen = set()
    out = []
    for m in objs:
        c = m.code()
        if c in seen:
            raise AssertionError(f"duplicate {what} produced: {m}")
        seen.add(c)
        out.append(m)
    return out


@lru_cache(maxsize=None)
def generate_eulerian_maps(n: int) -> Tuple[RotationMap, ...]:
    if n == 0:
        return (ATOMIC,)

    def gen():
        for n1 in range(n):
            for m1 in generate_eulerian_maps(n1):
                for m2 in generate_eulerian_maps(n - 1 - n1):
                    yield merge(m1, m2)
        for m in generate_eulerian_maps(n - 1):
            for i in range(1, m.root_degree() // 2 + 1):
                yield split(m, i)
    return tuple(_dedup(gen(), "map"))


def orientations_of(m: RotationMap) -> Iterable[RotationMap]:
    """All Eulerian orientations of the map, by backtracking on edges."""
    E = m.n_edges
    verts = m.vertices()
    vid = [0] * len(m.nxt)
    for v, cyc in enumerate(verts):
        for h in cyc:
            vid[h] = v
    need = [len(c) // 2 for c in verts]
    out_cnt = [0] * len(verts)
    free = [len(c) for c in verts]
    orient = [0] * E

    def rec(e):
        if e == E:
            yield RotationMap(m.nxt, m.root, tuple(orient))
            return
        t, h = vid[2 * e], vid[2 * e + 1]
        for o in (0, 1):
            src = t if o == 1 else h
            free[t] -= 1
            free[h] -= 1
            out_cnt[src] += 1
            ok = all(out_cnt[v] <= need[v] <= out_cnt[v] + free[v] for v in (t, h))
            if ok:
                orient[e] = o
                yield from rec(e + 1)
            out_cnt[src] -= 1
            free[t] += 1
            free[h] += 1

    yield from rec(0)


def brute_orientations(n: int, profile: bool = False):
    """Number of Eulerian orientations with n edges (and counts by root word)."""
    total = 0
    prof: Dict[str, int] = {}
    for m in generate_eulerian_maps(n):
        if m.is_atomic():
            total += 1
            prof[""] = prof.get("", 0) + 1
            continue
        for o in orientations_of(m):
            total += 1
            if profile:
                w = str(o.root_word())
                prof[w] = prof.get(w, 0) + 1
    return (total, prof) if profile else total


# -- the four families ------------------------------------------------------

FAMILY_ALIASES = {
    "L": "L", "subset": "L",
    "LL": "LL", "prime_subset": "LL", "prime-subset": "LL",
    "U": "U", "superset": "U",
    "UU": "UU", "prime_superset": "UU", "prime-superset": "UU",
}


def _split_choices(m: RotationMap, k: int, rule: str):
    """Allowed (i, letter) pairs for splitting m under the family rule."""
    w = m.root_word()
    d = w.length // 2
    for i in range(1, d + 1):
        tail = w.suffix(2 * i - 1)
        legal = is_quasi_balanced(tail)
        if rule == "lower":
            if legal and (i <= k or i == d):
                yield i, forced_letter(tail)
        else:
            if i <= k:
                if legal:
                    yield i, forced_letter(tail)
            else:
                yield i, forced_letter(tail) if legal else 1


class FamilyGenerator:
    """Size-by-size generation of one family, memoized."""

    def __init__(self, family: str, k: int):
        fam = FAMILY_ALIASES.get(family)
        if fam is None:
            raise ValueError(f"unknown family {family!r}")
        if k < 1:
            raise ValueError("k must be >= 1")
        self.family = fam
        self.k = k
        self.rule = "lower" if fam in ("L", "LL") else "upper"
        self.prime = fam in ("LL", "UU")
        self._all: List[List[RotationMap]] = [[ATOMIC_ORIENTED]]
        self._primes: List[List[RotationMap]] = [[]]

    def all(self, n: int) -> List[RotationMap]:
        while len(self._all) <= n:
            self._grow()
        return self._all[n]

    def _grow(self):
        n = len(self._all)
        if self.prime:
            primes = []
            for o1 in self._all[n - 1]:
                for a in (0, 1):
                    primes.append(loop_around(o1, a))
            for n1 in range(1, n):
                for p in self._primes[n1]:
                    choices = list(_split_choices(p, self.k, self.rule))
                    for o2 in self._all[n - 1 - n1]:
                        for i, a in choices:
                            primes.append(split(p, i, a, o2))
            self._primes.append(_dedup(primes, "prime orientation"))
            objs = []
            for n2 in range(1, n + 1):
                for a_ in self._all[n - n2]:
                    for p in self._primes[n2]:
                        objs.append(concat(a_, p))
        else:
            objs = []
            for n1 in range(n):
                for o1 in self._all[n1]:
                    for o2 in self._all[n - 1 - n1]:
                        for a in (0, 1):
                            objs.append(merge(o1, o2, a))
            for o in self._all[n - 1]:
                for i, a in _split_choices(o, self.k, self.rule):
                    objs.append(split(o, i, a))
        self._all.append(_dedup(objs, "orientation"))

    def codes(self, n: int) -> set:
        return {m.code() for m in self.all(n)}


@lru_cache(maxsize=None)
def family_generator(family: str, k: int) -> FamilyGenerator:
    return FamilyGenerator(family, k)


def brute_family(family: str, k: int, n: int) -> int:
    return len(family_generator(family, k).all(n))


def brute_family_counts(family: str, k: int, n_max: int) -> List[int]:
    g = family_generator(family, k)
    return [len(g.all(n)) for n in range(n_max + 1)]


# -- generating series of Eulerian maps -------------------------------------

def maps_series(N: int, method: str = "closed_form"):
    """M(t;1) to order N; the equation methods also return M(t;x)."""
    from .series import TruncSeries
    if method == "closed_form":
        return TruncSeries([eulerian_maps_count(n) for n in range(N + 1)])
    from .solver import solve
    from .systems import Correction, DivDiff, EquationSystem, Monomial, SeriesId
    from .words import EMPTY
    M, Mp = SeriesId("U", EMPTY), SeriesId("U'", EMPTY)
    if method == "standard_eq":
        eqs = {M: (Monomial(1, 0, 0), Monomial(1, 1, 1, ((M, False), (M, False))),
                   DivDiff(1, 1, 1, (), M, 0))}
    elif method == "prime_eq":
        eqs = {M: (Monomial(1, 0, 0), Monomial(1, 0, 0, ((M, False), (Mp, False)))),
               Mp: (Monomial(1, 1, 1, ((M, False),)), DivDiff(1, 1, 1, ((M, True),), Mp, 0))}
    else:
        raise ValueError(f"unknown method {method!r}")
    sol = solve(EquationSystem(0, "maps", eqs), N)
    return sol.at_one(M), sol.values[M]


def maps_to_json(maps: Iterable[RotationMap]) -> str:
    return json.dumps([m.to_json() for m in maps])

"""Exact counts o_n of rooted planar Eulerian orientations.

Both recurrences are evaluated degree by degree on dense tables: for each
degree n and even length L, ``O[n][L]`` is an array of size 2^L whose entry
``m`` is [t^n] O_w for the word w with bit i of m equal to letter i.  So a
word ``u v`` (u of length j) has index ``u | v << j`` and every
factorization becomes an outer product.  Suffix aggregates
F_s = sum over balanced words x ending in s of O_x are reductions along the
low bits of reshaped arrays.

The last requested degree is never materialized: o_N only needs sums of
the tables of degree < N, because summing an outer product over all its
entries gives the product of the sums.
"""
from __future__ import annotations

import logging
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from math import comb
from typing import Dict, List, Optional

import numpy as np

log = logging.getLogger(__name__)

CHECKPOINT_VERSION = 1
INT64_SAFE = 2 ** 62


class MemoryBudgetExceeded(RuntimeError):
    def __init__(self, msg: str, completed: List[int]):
        super().__init__(msg)
        self.completed = completed

    @property
    def largest_n(self) -> int:
        return len(self.completed) - 1


def _orientation_bound(n: int) -> int:
    """2^n m_n bounds every coefficient that the recurrences produce at degree n."""
    if n == 0:
        return 1
    return 2 ** n * 3 * 2 ** (n - 1) * comb(2 * n, n) // ((n + 1) * (n + 2))


def pick_dtype(N: int):
    return np.int64 if _orientation_bound(N) < INT64_SAFE else object


_masks: Dict[int, np.ndarray] = {}


def popcounts(L: int) -> np.ndarray:
    if L not in _masks:
        _masks[L] = np.bitwise_count(np.arange(1 << L, dtype=np.uint64)).astype(np.int64)
    return _masks[L]


def balanced_mask(L: int) -> np.ndarray:
    return popcounts(L) * 2 == L


def quasi_balanced_mask(L: int) -> np.ndarray:
    return np.abs(popcounts(L) * 2 - L) == 1


def word_str(mask: int, L: int) -> str:
    return "".join("1" if (mask >> i) & 1 else "0" for i in range(L))


@dataclass
class WordTable:
    """[t^n] O_w for all words of even length up to 2n, one array per length."""
    degree: int
    arrays: Dict[int, np.ndarray] = field(default_factory=dict)

    def coefficient(self, word: str) -> int:
        a = self.arrays.get(len(word))
        if a is None:
            return 0
        m = sum(1 << i for i, c in enumerate(word) if c == "1")
        return int(a[m])

    def total(self) -> int:
        return sum(int(a.sum()) for a in self.arrays.values())

    def as_dict(self) -> Dict[str, int]:
        out = {}
        for L, a in sorted(self.arrays.items()):
            for m in np.nonzero(a)[0]:
                out[word_str(int(m), L)] = int(a[m])
        return out

    def nbytes(self) -> int:
        return sum(a.nbytes if a.dtype != object else 8 * a.size for a in self.arrays.values())


def suffix_aggregates(table: WordTable, prune: bool = False) -> Dict[int, np.ndarray]:
    """Aggregates F_s for suffixes s of odd length (the only ones used).

    Without ``prune`` they are built by the recursion
    F[l] = O[l] + (F[l+1] summed over its first letter) over all suffixes;
    with ``prune`` each odd length is reduced directly from the tables and
    entries of suffixes that are not quasi-balanced are zeroed.
    """
    n = table.degree
    top = 2 * n
    out: Dict[int, np.ndarray] = {}
    if prune:
        for ell in range(1, top, 2):
            acc = None
            for L in range(ell + 1, top + 1, 2):
                a = table.arrays.get(L)
                if a is None:
                    continue
                s = a.reshape(1 << ell, -1).sum(axis=1)
                acc = s if acc is None else acc + s
            if acc is not None:
                acc[~quasi_balanced_mask(ell)] = 0
                out[ell] = acc
        return out
    F = table.arrays.get(top)
    for ell in range(top - 1, 0, -1):
        F = F.reshape(1 << ell, 2).sum(axis=1)
        if ell % 2 == 0 and ell in table.arrays:
            F = F + table.arrays[ell]
        else:
            out[ell] = F
    return out


class _Counter:
    """Shared machinery for the two recurrences."""

    method = ""

    def __init__(self, N: int, threads: int = 1, mem_gb: Optional[float] = None,
                 checkpoint: Optional[str] = None, prune: bool = False):
        if N < 0:
            raise ValueError("N must be non-negative")
        self.N = N
        self.threads = max(1, int(threads))
        self.mem_bytes = None if mem_gb is None else int(mem_gb * 2 ** 30)
        self.checkpoint = checkpoint
        self.prune = prune
        self.dtype = pick_dtype(N)
        self.o: List[int] = [1]
        self.tables: List[Dict[str, WordTable]] = []
        self.sums: List[Dict[str, Dict[int, int]]] = []
        eps = WordTable(0, {0: np.ones(1, dtype=self.dtype)})
        self._init_degree0(eps)

    # -- bookkeeping ---------------------------------------------------
    def _store(self, tabs: Dict[str, WordTable]):
        self.tables.append(tabs)
        self.sums.append({name: {L: int(a.sum()) for L, a in t.arrays.items()}
                          for name, t in tabs.items()})

    def stored_bytes(self) -> int:
        return sum(t.nbytes() for tabs in self.tables for t in tabs.values())

    def _check_budget(self, n: int):
        if self.mem_bytes is None:
            return
        need = self.stored_bytes() + self.estimate_degree_bytes(n)
        if need > self.mem_bytes:
            raise MemoryBudgetExceeded(
                f"degree {n} needs about {need / 2 ** 30:.2f} GiB "
                f"(budget {self.mem_bytes / 2 ** 30:.2f} GiB); completed through n={len(self.o) - 1}",
                list(self.o))

    def _map(self, fn, items):
        if self.threads == 1:
            return [fn(x) for x in items]
        with ThreadPoolExecutor(self.threads) as pool:
            return list(pool.map(fn, items))

    def run(self) -> List[int]:
        start = len(self.o)
        if self.checkpoint and os.path.exists(self.checkpoint):
            start = self._load_checkpoint()
        for n in range(start, self.N + 1):
            if n < self.N:
                self._check_budget(n)
                tabs = self.build_degree(n)
                self._store(tabs)
                self.o.append(tabs["O"].total())
                total = self.degree_total(n)
                if total != self.o[-1]:
                    raise AssertionError(f"degree {n}: table total {self.o[-1]} != aggregate {total}")
                if self.checkpoint:
                    self._save_checkpoint()
            else:
                self.o.append(self.degree_total(n))
            log.info("%s: o_%d = %d", self.method, n, self.o[-1])
        return list(self.o[: self.N + 1])

    # -- checkpoints ---------------------------------------------------
    def _save_checkpoint(self):
        arrays = {"version": np.array(CHECKPOINT_VERSION), "method": np.array(self.method),
                  "degree": np.array(len(self.tables) - 1),
                  "o": np.array([str(v) for v in self.o])}
        for n, tabs in enumerate(self.tables):
            for name, t in tabs.items():
                for L, a in t.arrays.items():
                    arrays[f"{name}_{n}_{L}"] = a if a.dtype != object else a.astype(str)
        tmp = self.checkpoint + ".tmp.npz"
        np.savez(tmp, **arrays)
        os.replace(tmp, self.checkpoint)

    def _load_checkpoint(self) -> int:
        with np.load(self.checkpoint, allow_pickle=False) as z:
            if int(z["version"]) != CHECKPOINT_VERSION or str(z["method"]) != self.method:
                raise ValueError(f"checkpoint {self.checkpoint} is incompatible")
            deg = int(z["degree"])
            deg = min(deg, self.N - 1)
            tables = []
            for n in range(deg + 1):
                tabs = {}
                for name in self.table_names:
                    arrs = {}
                    for L in range(0, 2 * n + 1, 2):
                        key = f"{name}_{n}_{L}"
                        if key in z.files:
                            a = z[key]
                            if a.dtype.kind == "U":
                                a = np.array([int(v) for v in a], dtype=object)
                            arrs[L] = a.astype(self.dtype) if self.dtype is not object else a
                    tabs[name] = WordTable(n, arrs)
                tables.append(tabs)
            o = [int(v) for v in z["o"]][: deg + 1]
        self.tables, self.sums, self.o = [], [], o
        for tabs in tables:
            self._store(tabs)
        self._after_load()
        return deg + 1

    def _after_load(self):
        pass


class StandardCounter(_Counter):
    """O_w = t sum_{w = a u ā v} O_u O_v + t sum_u O_{u w_s}."""

    method = "standard"
    table_names = ("O",)

    def _init_degree0(self, eps):
        self._store({"O": eps})
        self.F: List[Dict[int, np.ndarray]] = [{}]

    def _after_load(self):
        self.F = [suffix_aggregates(t["O"], self.prune) for t in self.tables]

    def estimate_degree_bytes(self, n: int) -> int:
        # new table, its aggregates and two temporaries of the largest length
        return 8 * (1 << 2 * n) * 4

    def O(self, i: int, L: int):
        return self.tables[i]["O"].arrays.get(L)

    def build_length(self, n: int, L: int) -> np.ndarray:
        res = np.zeros(1 << L, dtype=self.dtype)
        for p in range(0, (L - 2) // 2 + 1):
            lv = L - 2 - 2 * p
            us, vs = [], []
            for i in range(p, n):
                j = n - 1 - i
                if lv > 2 * j:
                    continue
                u, v = self.O(i, 2 * p), self.O(j, lv)
                if u is not None and v is not None:
                    us.append(u)
                    vs.append(v)
            if not us:
                continue
            U = np.stack(us)
            V = np.stack(vs)
            ar = np.arange(1 << 2 * p) << 1
            P = np.zeros((len(us), 1 << (2 * p + 2)), dtype=self.dtype)
            P[:, ar | 1] = U
            P[:, ar | (1 << (2 * p + 1))] = U
            res += (V.T @ P).reshape(-1)
        F = self.F[n - 1].get(L - 1)
        if F is not None:
            res += np.where(balanced_mask(L), np.repeat(F, 2), 0).astype(self.dtype)
        return res

    def build_degree(self, n: int):
        lengths = list(range(2, 2 * n + 1, 2))
        arrays = dict(zip(lengths, self._map(lambda L: self.build_length(n, L), lengths)))
        tab = WordTable(n, arrays)
        self.F.append(suffix_aggregates(tab, self.prune))
        return {"O": tab}

    def degree_total(self, n: int) -> int:
        S = [s["O"] for s in self.sums]
        total = 0
        for L in range(2, 2 * n + 1, 2):
            for p in range(0, (L - 2) // 2 + 1):
                lv = L - 2 - 2 * p
                for i in range(p, n):
                    total += 2 * S[i].get(2 * p, 0) * S[n - 1 - i].get(lv, 0)
            F = self.F[n - 1].get(L - 1)
            if F is not None:
                total += int(F[quasi_balanced_mask(L - 1)].sum())
        return total


class PrimeCounter(_Counter):
    """O_w = sum_{w = u v} O_u O'_v and O'_w = t O_{w_c} + t O sum_u O'_{u w_s}."""

    method = "prime"
    table_names = ("O", "P")

    def _init_degree0(self, eps):
        self._store({"O": eps, "P": WordTable(0, {0: np.zeros(1, dtype=self.dtype)})})
        self.F: List[Dict[int, np.ndarray]] = [{}]

    def _after_load(self):
        self.F = [suffix_aggregates(t["P"], self.prune) for t in self.tables]

    def estimate_degree_bytes(self, n: int) -> int:
        return 8 * (1 << 2 * n) * 5

    def arr(self, name: str, i: int, L: int):
        return self.tables[i][name].arrays.get(L)

    def split_aggregate(self, n: int, ell: int):
        """sum_{i+j=n-1} o_i F'_j on suffixes of length ell."""
        acc = None
        for j in range(n):
            F = self.F[j].get(ell)
            if F is None:
                continue
            term = F * self.o[n - 1 - j]
            acc = term if acc is None else acc + term
        return acc

    def build_prime_length(self, n: int, L: int) -> np.ndarray:
        res = np.zeros(1 << L, dtype=self.dtype)
        inner = self.arr("O", n - 1, L - 2)
        if inner is not None:
            idx = np.arange(1 << (L - 2)) << 1
            res[idx | 1] += inner
            res[idx | (1 << (L - 1))] += inner
        G = self.split_aggregate(n, L - 1)
        if G is not None:
            res += np.where(balanced_mask(L), np.repeat(G, 2), 0).astype(self.dtype)
        return res

    def build_seq_length(self, n: int, L: int, prime_now: np.ndarray) -> np.ndarray:
        res = prime_now.copy()
        for j in range(2, L - 1, 2):          # |u| = j, |v| = L - j
            us, vs = [], []
            for i in range(1, n):             # O'_v at degree i, O_u at n - i
                if L - j > 2 * i or j > 2 * (n - i):
                    continue
                u, v = self.arr("O", n - i, j), self.arr("P", i, L - j)
                if u is not None and v is not None:
                    us.append(u)
                    vs.append(v)
            if us:
                res += (np.stack(vs).T @ np.stack(us)).reshape(-1)
        return res

    def build_degree(self, n: int):
        lengths = list(range(2, 2 * n + 1, 2))
        P = dict(zip(lengths, self._map(lambda L: self.build_prime_length(n, L), lengths)))
        O = dict(zip(lengths, self._map(lambda L: self.build_seq_length(n, L, P[L]), lengths)))
        ptab = WordTable(n, P)
        self.F.append(suffix_aggregates(ptab, self.prune))
        return {"O": WordTable(n, O), "P": ptab}

    def degree_total(self, n: int) -> int:
        SO = [s["O"] for s in self.sums]
        SP = [s["P"] for s in self.sums]
        prime_sums = {}
        for L in range(2, 2 * n + 1, 2):
            v = 2 * SO[n - 1].get(L - 2, 0)
            G = self.split_aggregate(n, L - 1)
            if G is not None:
                v += int(G[quasi_balanced_mask(L - 1)].sum())
            prime_sums[L] = v
        total = 0
        for L, v in prime_sums.items():
            total += v
            for j in range(2, L - 1, 2):
                for i in range(1, n):
                    total += SP[i].get(L - j, 0) * SO[n - i].get(j, 0)
        return total


def count_standard(N: int, **kw) -> List[int]:
    return StandardCounter(N, **kw).run()


def count_prime(N: int, **kw) -> List[int]:
    return PrimeCounter(N, **kw).run()


def count(N: int, method: str = "prime", **kw) -> List[int]:
    if method == "standard":
        return count_standard(N, **kw)
    if method == "prime":
        return count_prime(N, **kw)
    raise ValueError(f"unknown method {method!r}")


def word_tables(n: int, method: str = "standard") -> WordTable:
    """The full table [t^n] O_w (built, not shortcut) for degree n."""
    cls = StandardCounter if method == "standard" else PrimeCounter
    c = cls(n + 1)
    for m in range(1, n + 1):
        tabs = c.build_degree(m)
        c._store(tabs)
        c.o.append(tabs["O"].total())
    return c.tables[n]["O"]


def root_word_profile(n: int, method: str = "standard") -> Dict[str, int]:
    """Counts of degree-n orientations by root word (balanced words only)."""
    return word_tables(n, method).as_dict()

"""Coefficient extraction for generated equation systems.

The staged solver fills one t-degree at a time.  Every right-hand-side term
either carries a factor t (so it only reads lower degrees) or is a product
in which a factor's degree-n coefficient is multiplied by the constant
terms of the other factors.  That gives a dependency graph between series
at a fixed degree n >= 1; it is the same for every such n, and the solver
evaluates the series in a topological order of it.  Degree 0 is found by
Gauss-Seidel sweeps.

``mode="picard"`` instead iterates the whole truncated system to a fixed
point (Jacobi sweeps); it is slow and only meant for cross-checking.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from graphlib import CycleError, TopologicalSorter
from typing import Dict, List, Optional

from .series import (TruncSeries, XPoly, XSeries, divided_difference_poly,
                     poly_add, poly_mul, poly_shift, poly_trim)
from .systems import DivDiff, EquationSystem, Monomial, SeriesId, term_refs

log = logging.getLogger(__name__)


class SolverError(RuntimeError):
    pass


@dataclass
class Solution:
    system: EquationSystem
    order: int
    values: Dict[SeriesId, object] = field(default_factory=dict)

    def __getitem__(self, sid: SeriesId):
        return self.values[self.system.representative(sid)]

    def get(self, name: str, word="") -> object:
        from .words import Word
        if isinstance(word, str):
            word = Word.from_str(word)
        return self[SeriesId(name, word)]

    def at_one(self, sid: SeriesId) -> TruncSeries:
        v = self[sid]
        if isinstance(v, XSeries):
            return TruncSeries(sum(p.coeffs) for p in v)
        return v

    def root_counts(self) -> List[int]:
        """Coefficients of the series counting the whole family."""
        return list(self.at_one(self.system.root()))

    def to_json(self):
        return {
            "family": self.system.family,
            "k": self.system.k,
            "order": self.order,
            "series": {str(s): v.to_json() for s, v in self.values.items()},
        }


# -- degree-wise evaluation on raw coefficient lists -----------------------
#
# A univariate series is a list of ints (index = t-degree); a bivariate one
# is a list of coefficient lists in x.  ``one`` caches the x = 1 values.

def _is_poly(v) -> bool:
    return isinstance(v, list)


def _pack(polys, nbytes: int) -> List[int]:
    out = []
    for p in polys:
        if not p:
            out.append(0)
        else:
            out.append(int.from_bytes(b"".join(c.to_bytes(nbytes, "little") for c in p), "little"))
    return out


def _unpack(v: int, nbytes: int) -> List[int]:
    raw = v.to_bytes((v.bit_length() + 7) // 8, "little")
    return poly_trim([int.from_bytes(raw[i:i + nbytes], "little")
                      for i in range(0, len(raw), nbytes)])


class _Evaluator:
    def __init__(self, system: EquationSystem, order: int, cache: bool):
        self.sys = system
        self.N = order
        self.cache = cache
        self.val: Dict[SeriesId, list] = {}
        self.one: Dict[SeriesId, list] = {}
        self._dd_cache: Dict[tuple, list] = {}

    def init_zero(self):
        for sid in self.sys.equations:
            self.val[sid] = [[] if sid.bivariate else 0 for _ in range(self.N + 1)]
            self.one[sid] = [0] * (self.N + 1)

    def set(self, sid: SeriesId, n: int, v):
        self.val[sid][n] = v
        self.one[sid][n] = sum(v) if sid.bivariate else v

    def factor_seq(self, f):
        sid, at_one = f
        return self.one[sid] if (at_one or not sid.bivariate) else self.val[sid]

    # product of factor sequences, coefficient of t^d
    def conv(self, seqs, d: int):
        if not seqs:
            return 1 if d == 0 else 0
        if len(seqs) == 1:
            return seqs[0][d]
        if len(seqs) == 2:
            return self._conv2(seqs[0], seqs[1], d)
        # general case: fold the first factor against the rest
        acc = 0
        rest = seqs[1:]
        for i in range(d + 1):
            a = seqs[0][i]
            if a:
                acc = _add(acc, _mul(a, self.conv(rest, d - i)))
        return acc

    def _conv2(self, a, b, d: int):
        pa = _is_poly(a[0])
        pb = _is_poly(b[0])
        if not pa and not pb:
            return sum(a[i] * b[d - i] for i in range(d + 1) if a[i])
        if pa and pb:
            return self._conv_poly_poly(a, b, d)
        if pa:
            a, b = b, a
        # a: ints, b: polys
        acc: list = []
        for i in range(d + 1):
            c = a[i]
            q = b[d - i]
            if c and q:
                if not acc:
                    acc = [c * x for x in q]
                else:
                    if len(acc) < len(q):
                        acc.extend([0] * (len(q) - len(acc)))
                    for j, x in enumerate(q):
                        acc[j] += c * x
        return poly_trim(acc)

    def _conv_poly_poly(self, a, b, d: int):
        pairs = [(a[i], b[d - i]) for i in range(d + 1) if a[i] and b[d - i]]
        if not pairs:
            return []
        if any(c < 0 for p, q in pairs for c in p) or any(c < 0 for p, q in pairs for c in q):
            acc: list = []
            for p, q in pairs:
                acc = poly_add(acc, poly_mul(p, q))
            return acc
        # Kronecker substitution; every slot of the sum is bounded by the
        # sum of the products of the values at x = 1.
        bound = sum(sum(p) * sum(q) for p, q in pairs)
        nbytes = (bound.bit_length() + 8) // 8
        pa = _pack([p for p, _ in pairs], nbytes)
        pb = _pack([q for _, q in pairs], nbytes)
        return _unpack(sum(x * y for x, y in zip(pa, pb)), nbytes)

    def term_value(self, term, n: int):
        d = n - term.t_pow
        if d < 0:
            return 0
        if isinstance(term, Monomial):
            v = self.conv([self.factor_seq(f) for f in term.factors], d)
        else:
            dd = [self.dd_value(term, i) for i in range(d + 1)]
            v = self.conv([self.factor_seq(f) for f in term.prefactors] + [dd], d)
        if term.coeff != 1:
            v = _mul(term.coeff, v)
        if term.x_pow and _is_poly(v):
            v = poly_shift(v, term.x_pow)
        elif term.x_pow and v:
            v = poly_shift([v], term.x_pow)
        return v

    def dd_value(self, term: DivDiff, i: int):
        key = (id(term), i)
        if self.cache and key in self._dd_cache:
            return self._dd_cache[key]
        p = list(self.val[term.series][i])
        for c in term.corrections:
            cv = (1 if i == 0 else 0) if c.series is None else self.one[c.series][i]
            if cv:
                p = poly_add(p, poly_shift([-c.coeff * cv], c.x_pow))
        try:
            q = divided_difference_poly(p, term.shift)
        except ArithmeticError as e:
            raise SolverError(f"{term.series}: non-exact divided difference at degree {i}") from e
        if self.cache:
            self._dd_cache[key] = q
        return q

    def rhs(self, sid: SeriesId, n: int):
        acc = [] if sid.bivariate else 0
        for term in self.sys.equations[sid]:
            v = self.term_value(term, n)
            if _is_poly(v) and not sid.bivariate:
                if len(v) > 1:
                    raise SolverError(f"x-dependent term in univariate equation for {sid}")
                v = v[0] if v else 0
            acc = _add(acc, v)
        if sid.bivariate and not _is_poly(acc):
            acc = [acc] if acc else []
        return acc


def _add(a, b):
    if _is_poly(a) or _is_poly(b):
        a = a if _is_poly(a) else ([a] if a else [])
        b = b if _is_poly(b) else ([b] if b else [])
        return poly_add(a, b)
    return a + b


def _mul(c, v):
    """Product where at least one side is an int."""
    if _is_poly(c):
        c, v = v, c
    if _is_poly(v):
        return poly_trim([c * x for x in v]) if c else []
    return c * v


def _nonzero(v) -> bool:
    return bool(v)


def same_degree_dependencies(ev: _Evaluator) -> Dict[SeriesId, set]:
    """Series whose degree-n value enters each equation at the same degree n >= 1."""
    deps: Dict[SeriesId, set] = {}
    for sid, terms in ev.sys.equations.items():
        ds = set()
        for term in terms:
            if term.t_pow > 0:
                continue
            if isinstance(term, DivDiff):
                ds.update(term_refs(term))
                continue
            consts = [ev.factor_seq(f)[0] for f in term.factors]
            for j, (fs, _) in enumerate(term.factors):
                others = consts[:j] + consts[j + 1:]
                if all(_nonzero(c) for c in others):
                    ds.add(fs)
        deps[sid] = ds
    return deps


def _solve_degree0(ev: _Evaluator, max_sweeps: int):
    for sweep in range(max_sweeps):
        changed = False
        for sid in ev.sys.equations:
            v = ev.rhs(sid, 0)
            if v != ev.val[sid][0]:
                ev.set(sid, 0, v)
                changed = True
        if not changed:
            return sweep
    raise SolverError(f"constant terms did not settle after {max_sweeps} sweeps")


def solve(system: EquationSystem, N: int, mode: str = "staged",
          max_sweeps: Optional[int] = None) -> Solution:
    """Coefficients of every series of ``system`` up to t^N."""
    if N < 0:
        raise ValueError("order must be non-negative")
    system.check_closed()
    if mode == "staged":
        vals = _solve_staged(system, N)
    elif mode == "picard":
        vals = _solve_picard(system, N, max_sweeps)
    else:
        raise ValueError(f"unknown mode {mode!r}")
    return _wrap(system, N, vals)


def _wrap(system, N, ev: _Evaluator) -> Solution:
    out = {}
    for sid, seq in ev.val.items():
        if sid.bivariate:
            out[sid] = XSeries([XPoly(p) for p in seq])
        else:
            out[sid] = TruncSeries(seq)
    return Solution(system, N, out)


def _solve_staged(system: EquationSystem, N: int) -> _Evaluator:
    ev = _Evaluator(system, N, cache=True)
    ev.init_zero()
    _solve_degree0(ev, len(system.equations) + 2)
    deps = same_degree_dependencies(ev)
    try:
        order = list(TopologicalSorter(deps).static_order())
    except CycleError as e:
        raise SolverError(f"same-degree dependency cycle: {[str(s) for s in e.args[1]]}") from e
    for n in range(1, N + 1):
        for sid in order:
            ev.set(sid, n, ev.rhs(sid, n))
    return ev


def _solve_picard(system: EquationSystem, N: int, max_sweeps: Optional[int]) -> _Evaluator:
    ev = _Evaluator(system, N, cache=False)
    ev.init_zero()
    if max_sweeps is None:
        max_sweeps = (N + 2) * (len(system.equations) + 2)
    for sweep in range(max_sweeps):
        new = {sid: [ev.rhs(sid, n) for n in range(N + 1)] for sid in system.equations}
        changed = False
        for sid, seq in new.items():
            if seq != ev.val[sid]:
                changed = True
                for n, v in enumerate(seq):
                    ev.set(sid, n, v)
        if not changed:
            log.debug("picard fixed point after %d sweeps", sweep)
            return ev
    raise SolverError(f"Picard iteration not settled after {max_sweeps} sweeps")


def root_series(family: str, k: int, N: int, **flags) -> List[int]:
    """Counting sequence of a family, via the symmetry-reduced forward system."""
    from .systems import build_system
    sys_ = build_system(family, k, symmetry=flags.pop("symmetry", True),
                        forward=flags.pop("forward", True), **flags)
    return solve(sys_, N).root_counts()


# -- verification through the public series classes ------------------------

def _series_of(sol: Solution, sid: SeriesId, at_one: bool):
    v = sol.values[sid]
    if isinstance(v, XSeries) and at_one:
        return TruncSeries(sum(p.coeffs) for p in v)
    return v


def _lift(v, N):
    if isinstance(v, XSeries):
        return v
    return XSeries([XPoly([c]) for c in v])


def verify_solution(sol: Solution) -> bool:
    """Re-substitute ``sol`` into every equation with whole-series arithmetic."""
    N = sol.order
    sys_ = sol.system
    try:
        for sid, terms in sys_.equations.items():
            lhs = sol.values[sid]
            if isinstance(lhs, XSeries):
                for n, p in enumerate(lhs):
                    if p.degree > n:
                        return False
            total = XSeries([XPoly()] * (N + 1))
            for term in terms:
                if isinstance(term, Monomial):
                    v = XSeries([1], N)
                    for f in term.factors:
                        v = v * _lift(_series_of(sol, f[0], f[1]), N)
                else:
                    inner = _lift(sol.values[term.series], N)
                    for c in term.corrections:
                        cs = (TruncSeries.one(N) if c.series is None
                              else _series_of(sol, c.series, True))
                        inner = inner - _lift(cs, N).xshift(c.x_pow) * c.coeff
                    v = inner.divided_difference(term.shift)
                    for f in term.prefactors:
                        v = v * _lift(_series_of(sol, f[0], f[1]), N)
                total = total + v.shift(term.t_pow).xshift(term.x_pow) * term.coeff
            if total != _lift(lhs, N):
                return False
    except ArithmeticError:
        return False
    return True

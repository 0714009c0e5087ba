"""Word-indexed equation systems for the four families, generated as data.

Series names: ``K``/``L`` (subset family, all orientations), ``K'``/``L'``
(prime subset family: ``K``/``L`` count all its orientations, the primed
ones count prime orientations), ``T``/``U`` (superset family) and
``T'``/``U'`` with the same convention for the prime superset family.
``U`` and ``U'`` are bivariate: x records the root half-degree.

A right-hand side is a list of terms:

* ``Monomial``: ``coeff * t^t_pow * x^x_pow * prod(factors)``, where a
  factor may be a bivariate series evaluated at x = 1.  An empty factor
  list is a constant.
* ``DivDiff``: ``coeff * t^t_pow * x^x_pow * prod(prefactors) *
  D_shift(S - sum_j c_j C_j x^e_j)`` with ``D_k F = (F(x) - x^k F(1))/(x-1)``.
  A correction with ``series=None`` stands for the constant 1.

Trivial exact-word series (unbalanced words, the empty word) are replaced
by their values while generating, so they never appear as unknowns.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field, replace
from math import comb
from typing import Dict, Iterable, List, Optional, Tuple, Union

from .words import (EMPTY, Word, ek, enumerate_words, is_balanced,
                    is_quasi_balanced, is_valid)

FAMILIES = ("subset", "prime_subset", "superset", "prime_superset")
BIVARIATE = frozenset({"U", "U'"})
SERIES_NAMES = ("K", "L", "K'", "L'", "T", "U", "T'", "U'")


@dataclass(frozen=True, order=True)
class SeriesId:
    name: str
    word: Word

    def __post_init__(self):
        if self.name not in SERIES_NAMES:
            raise ValueError(f"unknown series name {self.name!r}")

    @property
    def kind(self) -> str:
        return "bivariate" if self.name in BIVARIATE else "univariate"

    @property
    def bivariate(self) -> bool:
        return self.name in BIVARIATE

    def complement(self) -> "SeriesId":
        return SeriesId(self.name, self.word.complement())

    def __str__(self):
        return f"{self.name}_{str(self.word) or 'ε'}"

    def to_json(self):
        return {"name": self.name, "word": str(self.word)}

    @classmethod
    def from_json(cls, d) -> "SeriesId":
        return cls(d["name"], Word.from_str(d["word"]))


# (series, evaluated at x=1)
Factor = Tuple[SeriesId, bool]


@dataclass(frozen=True)
class Monomial:
    coeff: int
    t_pow: int
    x_pow: int
    factors: Tuple[Factor, ...] = ()

    def key(self):
        return ("m", self.t_pow, self.x_pow, self.factors)

    def series(self):
        return [s for s, _ in self.factors]


@dataclass(frozen=True)
class Correction:
    coeff: int
    series: Optional[SeriesId]
    x_pow: int


@dataclass(frozen=True)
class DivDiff:
    coeff: int
    t_pow: int
    x_pow: int
    prefactors: Tuple[Factor, ...]
    series: SeriesId
    shift: int
    corrections: Tuple[Correction, ...] = ()

    def key(self):
        return ("d", self.t_pow, self.x_pow, self.prefactors, self.series,
                self.shift, self.corrections)

    def series_refs(self):
        out = [s for s, _ in self.prefactors] + [self.series]
        out += [c.series for c in self.corrections if c.series is not None]
        return out


Term = Union[Monomial, DivDiff]


def term_refs(term: Term) -> List[SeriesId]:
    return term.series() if isinstance(term, Monomial) else term.series_refs()


def _canon_factors(factors: Iterable[Factor]) -> Tuple[Factor, ...]:
    return tuple(sorted(factors))


def merge_terms(terms: Iterable[Term]) -> Tuple[Term, ...]:
    """Collect like terms, dropping the ones that cancel."""
    acc: Dict[tuple, int] = {}
    proto: Dict[tuple, Term] = {}
    for term in terms:
        if isinstance(term, Monomial):
            term = replace(term, factors=_canon_factors(term.factors))
        else:
            term = replace(term, prefactors=_canon_factors(term.prefactors))
        k = term.key()
        acc[k] = acc.get(k, 0) + term.coeff
        proto.setdefault(k, term)
    return tuple(replace(proto[k], coeff=c) for k, c in acc.items() if c != 0)


@dataclass
class EquationSystem:
    k: int
    family: str
    equations: Dict[SeriesId, Tuple[Term, ...]]
    symmetry_reduced: bool = False
    forward: bool = False
    heavy: bool = False

    def __len__(self):
        return len(self.equations)

    @property
    def bivariate(self) -> bool:
        return any(s.bivariate for s in self.equations)

    def root(self) -> SeriesId:
        """The series counting every orientation of the family."""
        name = {"subset": "L", "prime_subset": "L", "superset": "U",
                "prime_superset": "U"}[self.family]
        return SeriesId(name, EMPTY)

    def dangling(self) -> List[SeriesId]:
        seen = set()
        for terms in self.equations.values():
            for t in terms:
                seen.update(term_refs(t))
        return sorted(s for s in seen if s not in self.equations)

    def check_closed(self):
        bad = self.dangling()
        if bad:
            raise ValueError("undefined series: " + ", ".join(map(str, bad)))

    def representative(self, sid: SeriesId) -> SeriesId:
        return representative(sid) if self.symmetry_reduced else sid

    # -- serialization --------------------------------------------------
    def to_json(self):
        return {
            "family": self.family,
            "k": self.k,
            "symmetry_reduced": self.symmetry_reduced,
            "forward": self.forward,
            "heavy": self.heavy,
            "equations": [
                {"lhs": sid.to_json(), "terms": [_term_to_json(t) for t in terms]}
                for sid, terms in self.equations.items()
            ],
        }

    @classmethod
    def from_json(cls, d) -> "EquationSystem":
        eqs = {SeriesId.from_json(e["lhs"]): tuple(_term_from_json(t) for t in e["terms"])
               for e in d["equations"]}
        return cls(d["k"], d["family"], eqs, d.get("symmetry_reduced", False),
                   d.get("forward", False), d.get("heavy", False))

    def pretty(self) -> str:
        return "\n".join(f"{sid} = {format_rhs(terms)}" for sid, terms in self.equations.items())


# -- JSON / text helpers ---------------------------------------------------

def _factor_json(f: Factor):
    return {**f[0].to_json(), "at_one": f[1]}


def _factor_from(d) -> Factor:
    return (SeriesId(d["name"], Word.from_str(d["word"])), bool(d["at_one"]))


def _term_to_json(t: Term):
    if isinstance(t, Monomial):
        return {"type": "monomial", "coeff": str(t.coeff), "t": t.t_pow, "x": t.x_pow,
                "factors": [_factor_json(f) for f in t.factors]}
    return {"type": "divdiff", "coeff": str(t.coeff), "t": t.t_pow, "x": t.x_pow,
            "prefactors": [_factor_json(f) for f in t.prefactors],
            "series": t.series.to_json(), "shift": t.shift,
            "corrections": [{"coeff": str(c.coeff),
                             "series": None if c.series is None else c.series.to_json(),
                             "x": c.x_pow} for c in t.corrections]}


def _term_from_json(d) -> Term:
    if d["type"] == "monomial":
        return Monomial(int(d["coeff"]), d["t"], d["x"], tuple(_factor_from(f) for f in d["factors"]))
    corr = tuple(Correction(int(c["coeff"]),
                            None if c["series"] is None else SeriesId.from_json(c["series"]),
                            c["x"]) for c in d["corrections"])
    return DivDiff(int(d["coeff"]), d["t"], d["x"], tuple(_factor_from(f) for f in d["prefactors"]),
                   SeriesId.from_json(d["series"]), d["shift"], corr)


def _fmt_factor(f: Factor) -> str:
    return f"{f[0]}(1)" if f[1] else str(f[0])


def _fmt_scalar(coeff: int, t_pow: int, x_pow: int, rest: List[str]) -> str:
    parts = []
    if coeff != 1 or not (t_pow or x_pow or rest):
        parts.append(str(coeff))
    if t_pow:
        parts.append("t" if t_pow == 1 else f"t^{t_pow}")
    if x_pow:
        parts.append("x" if x_pow == 1 else f"x^{x_pow}")
    return "·".join(parts + rest)


def format_rhs(terms: Iterable[Term]) -> str:
    out = []
    for t in terms:
        if isinstance(t, Monomial):
            out.append(_fmt_scalar(t.coeff, t.t_pow, t.x_pow, [_fmt_factor(f) for f in t.factors]))
        else:
            inner = str(t.series)
            for c in t.corrections:
                s = "1" if c.series is None else str(c.series)
                xs = "" if c.x_pow == 0 else (f"·x^{c.x_pow}" if c.x_pow > 1 else "·x")
                inner += f" - {c.coeff}·{s}{xs}" if c.coeff != 1 else f" - {s}{xs}"
            dd = f"D{t.shift}[{inner}]"
            out.append(_fmt_scalar(t.coeff, t.t_pow, t.x_pow,
                                   [_fmt_factor(f) for f in t.prefactors] + [dd]))
    return " + ".join(out) if out else "0"


# -- generation ------------------------------------------------------------

_ZERO = object()
_ONE = object()


class _Builder:
    """Accumulates right-hand sides, substituting trivial exact-word series."""

    def __init__(self, k: int, family: str):
        self.k = k
        self.family = family
        self.equations: Dict[SeriesId, List[Term]] = {}
        self.current: Optional[List[Term]] = None

    def eq(self, name: str, w: Word):
        self.current = self.equations.setdefault(SeriesId(name, w), [])

    # exact-word series: zero off balanced words; 1 or 0 on the empty word
    def exact(self, name: str, w: Word, empty_value):
        if not is_balanced(w):
            return _ZERO
        if w.length == 0:
            return _ONE if empty_value else _ZERO
        return (SeriesId(name, w), False)

    def K(self, w):
        return self.exact("K", w, 1)

    def Kp(self, w):
        return self.exact("K'", w, 0)

    def T(self, w):
        return self.exact("T", w, 1)

    def Tp(self, w):
        return self.exact("T'", w, 0)

    @staticmethod
    def s(name: str, w: Word, at_one: bool = False) -> Factor:
        return (SeriesId(name, w), at_one)

    def add(self, coeff: int, t_pow: int, x_pow: int, *syms):
        factors = []
        for s in syms:
            if s is _ZERO:
                return
            if s is not _ONE:
                factors.append(s)
        self.current.append(Monomial(coeff, t_pow, x_pow, tuple(factors)))

    def add_dd(self, t_pow, x_pow, prefactors, series: SeriesId, shift, corrections):
        corr = []
        for c, s, e in corrections:
            if s is _ZERO:
                continue
            corr.append(Correction(c, None if s is _ONE else s[0], e))
        self.current.append(DivDiff(1, t_pow, x_pow, tuple(prefactors), series, shift, tuple(corr)))

    def build(self, **flags) -> EquationSystem:
        eqs = {sid: merge_terms(terms) for sid, terms in self.equations.items()}
        sys_ = EquationSystem(self.k, self.family, eqs, **flags)
        sys_.check_closed()
        return sys_


def _arches(w: Word):
    """Decompositions w = a u ā v, yielding (u, v)."""
    if w.length < 2:
        return
    a = w[0]
    for j in range(1, w.length):
        if w[j] != a:
            yield w.prefix(j).suffix(j - 1), w.suffix(w.length - j - 1)


def _cuts(w: Word):
    """Decompositions w = u v, yielding (u, v), u from empty to w."""
    for j in range(w.length + 1):
        yield w.prefix(j), w.suffix(w.length - j)


def _letter_cuts(w: Word):
    """Decompositions w = u a v, yielding (u, v)."""
    for j in range(w.length):
        yield w.prefix(j), w.suffix(w.length - j - 1)


def _extensions(w: Word, max_len: int, min_len: int = 0):
    """Words u = v w with min_len <= |u| <= max_len, shortest first."""
    for n in range(max(min_len, w.length), max_len + 1):
        m = n - w.length
        for bits in range(1 << m):
            yield Word(m, bits) + w


def _check_k(k: int):
    if not isinstance(k, int) or k < 1:
        raise ValueError(f"k must be a positive integer, got {k!r}")


def build_subset_system(k: int) -> EquationSystem:
    _check_k(k)
    b = _Builder(k, "subset")
    for w in enumerate_words(2 * k, "balanced"):
        if w.length < 2:
            continue
        b.eq("K", w)
        for u, v in _arches(w):
            b.add(1, 1, 0, b.K(u), b.K(v))
        b.add(1, 1, 0, b.s("L", w.suffix(w.length - 1)))
    for w in enumerate_words(2 * k - 1, "valid", k):
        b.eq("L", w)
        L_e, L_w = b.s("L", EMPTY), b.s("L", w)
        if w.length == 0:
            b.add(1, 0, 0)
        b.add(2, 1, 0, L_e, L_w)
        for u, v in _letter_cuts(w):
            b.add(1, 1, 0, b.s("L", u), b.K(v))
        for u, v in _arches(w):
            b.add(1, 1, 0, b.K(u), b.K(v))
        b.add(1, 1, 0, L_w)
        if w.length == 0:
            b.add(-1, 1, 0)
        for u in _extensions(w, 2 * k, 2):
            if is_balanced(u):
                b.add(1, 1, 0, b.s("L", u.suffix(u.length - 1)))
                b.add(-1, 1, 0, b.K(u))
    return b.build()


def build_prime_subset_system(k: int) -> EquationSystem:
    _check_k(k)
    b = _Builder(k, "prime_subset")
    for w in enumerate_words(2 * k - 2, "balanced"):
        if w.length < 2:
            continue
        b.eq("K", w)
        for u, v in _cuts(w):
            b.add(1, 0, 0, b.K(u), b.Kp(v))
    for w in enumerate_words(2 * k, "balanced"):
        if w.length < 2:
            continue
        b.eq("K'", w)
        b.add(1, 1, 0, b.K(w.suffix(w.length - 1).prefix(w.length - 2)))
        b.add(1, 1, 0, b.s("L", EMPTY), b.s("L'", w.suffix(w.length - 1)))
    for w in enumerate_words(2 * k - 2, "valid", k):
        b.eq("L", w)
        if w.length == 0:
            b.add(1, 0, 0)
        b.add(1, 0, 0, b.s("L", EMPTY), b.s("L'", w))
        for u, v in _cuts(w):
            if u.length > 0:
                b.add(1, 0, 0, b.s("L", u), b.Kp(v))
    for w in enumerate_words(2 * k - 1, "valid", k):
        b.eq("L'", w)
        L_e = b.s("L", EMPTY)
        if w.length == 0:
            b.add(2, 1, 0, L_e)
        else:
            b.add(1, 1, 0, b.s("L", w.prefix(w.length - 1)))
            if is_balanced(w):
                b.add(1, 1, 0, b.K(w.suffix(w.length - 1).prefix(w.length - 2)))
        b.add(1, 1, 0, L_e, b.s("L'", w))
        for u in _extensions(w, 2 * k, 1):
            if is_balanced(u):
                b.add(1, 1, 0, L_e, b.s("L'", u.suffix(u.length - 1)))
                b.add(-1, 1, 0, L_e, b.Kp(u))
    return b.build()


def build_superset_system(k: int, heavy: bool = False) -> EquationSystem:
    """Superset system; ``heavy`` selects the unsimplified U-equation."""
    _check_k(k)
    b = _Builder(k, "superset")
    for w in enumerate_words(2 * k - 2, "balanced"):
        if w.length < 2:
            continue
        b.eq("T", w)
        for u, v in _arches(w):
            b.add(1, 1, 0, b.T(u), b.T(v))
        b.add(1, 1, 0, b.s("U", w.suffix(w.length - 1), True))
    for w in enumerate_words(2 * k - 1, "valid", k):
        b.eq("U", w)
        U_e, U_w = b.s("U", EMPTY), b.s("U", w)
        if heavy:
            if w.length == 0:
                b.add(1, 0, 0)
            for u, v in _arches(w):
                b.add(1, 1, w.length // 2, b.T(u), b.T(v))
        elif is_balanced(w):
            b.add(1, 0, w.length // 2, b.T(w))
        b.add(2, 1, 1, U_e, U_w)
        for u, v in _letter_cuts(w):
            if is_balanced(v):
                b.add(1, 1, 1 + v.length // 2, b.s("U", u), b.T(v))
        if heavy:
            for u in _extensions(w, 2 * k, 2):
                if is_balanced(u):
                    b.add(1, 1, u.length // 2, b.s("U", u.suffix(u.length - 1), True))
        else:
            for u in _extensions(w, 2 * k - 1):
                if is_quasi_balanced(u):
                    b.add(1, 1, (1 + u.length) // 2, b.s("U", u, True))
        corr = [(1, b.T(u), u.length // 2) for u in _extensions(w, 2 * k - 2)
                if is_balanced(u)]
        b.add_dd(1, 1, (), SeriesId("U", w), k, corr)
    return b.build(heavy=heavy)


def build_prime_superset_system(k: int, heavy: bool = False) -> EquationSystem:
    """Prime superset system; ``heavy`` selects the unsimplified U'-equation."""
    _check_k(k)
    b = _Builder(k, "prime_superset")
    for w in enumerate_words(2 * k - 4, "balanced"):
        if w.length < 2:
            continue
        b.eq("T", w)
        for u, v in _cuts(w):
            b.add(1, 0, 0, b.T(u), b.Tp(v))
    for w in enumerate_words(2 * k - 2, "balanced"):
        if w.length < 2:
            continue
        b.eq("T'", w)
        b.add(1, 1, 0, b.T(w.suffix(w.length - 1).prefix(w.length - 2)))
        b.add(1, 1, 0, b.s("U", EMPTY, True), b.s("U'", w.suffix(w.length - 1), True))
    for w in enumerate_words(2 * k - 2, "valid", k):
        b.eq("U", w)
        if w.length == 0:
            b.add(1, 0, 0)
        b.add(1, 0, 0, b.s("U", EMPTY), b.s("U'", w))
        for u, v in _cuts(w):
            if u.length > 0 and is_balanced(v):
                b.add(1, 0, v.length // 2, b.s("U", u), b.Tp(v))
    for w in enumerate_words(2 * k - 1, "valid", k):
        b.eq("U'", w)
        U1_e = b.s("U", EMPTY, True)
        if not heavy and is_balanced(w):
            b.add(1, 0, w.length // 2, b.Tp(w))
        if w.length == 0:
            b.add(2, 1, 1, b.s("U", EMPTY))
        else:
            b.add(1, 1, 1, b.s("U", w.prefix(w.length - 1)))
            if heavy and is_balanced(w):
                b.add(1, 1, w.length // 2, b.T(w.suffix(w.length - 1).prefix(w.length - 2)))
        if heavy:
            for u in _extensions(w, 2 * k, 2):
                if is_balanced(u):
                    b.add(1, 1, u.length // 2, U1_e, b.s("U'", u.suffix(u.length - 1), True))
        else:
            for u in _extensions(w, 2 * k - 1):
                if is_quasi_balanced(u):
                    b.add(1, 1, (1 + u.length) // 2, U1_e, b.s("U'", u, True))
        corr = [(1, b.Tp(u), u.length // 2) for u in _extensions(w, 2 * k - 2)
                if is_balanced(u)]
        b.add_dd(1, 1, (U1_e,), SeriesId("U'", w), k, corr)
    return b.build(heavy=heavy)


BUILDERS = {
    "subset": build_subset_system,
    "prime_subset": build_prime_subset_system,
    "superset": build_superset_system,
    "prime_superset": build_prime_superset_system,
}


def build_system(family: str, k: int, *, symmetry: bool = False, forward: bool = False,
                 heavy: bool = False) -> EquationSystem:
    family = family.replace("-", "_")
    if family not in BUILDERS:
        raise ValueError(f"unknown family {family!r}")
    if heavy and family in ("superset", "prime_superset"):
        sys_ = BUILDERS[family](k, heavy=True)
    else:
        sys_ = BUILDERS[family](k)
    if forward:
        sys_ = apply_forward_equations(sys_)
    if symmetry:
        sys_ = apply_symmetry(sys_)
    return sys_


def expected_size(family: str, k: int) -> int:
    f = ek(k)
    c = comb(2 * k, k)
    return {
        "subset": f,
        "prime_subset": 2 * f - 2 * c,
        "superset": f - c,
        "prime_superset": 2 * f - 3 * c - (comb(2 * k - 2, k - 1) if k > 1 else 0),
    }[family.replace("-", "_")]


# -- transformations -------------------------------------------------------

def representative(sid: SeriesId) -> SeriesId:
    """The member of {w, complement(w)} with the smaller bit pattern."""
    c = sid.word.complement()
    return sid if sid.word.bits <= c.bits else SeriesId(sid.name, c)


def _map_term(term: Term, f) -> Term:
    if isinstance(term, Monomial):
        return replace(term, factors=tuple((f(s), a) for s, a in term.factors))
    return replace(term, prefactors=tuple((f(s), a) for s, a in term.prefactors),
                   series=f(term.series),
                   corrections=tuple(replace(c, series=None if c.series is None else f(c.series))
                                     for c in term.corrections))


def apply_symmetry(sys_: EquationSystem) -> EquationSystem:
    """Identify every series with its complement-word twin."""
    if sys_.symmetry_reduced:
        return sys_
    eqs = {}
    for sid, terms in sys_.equations.items():
        if representative(sid) != sid:
            continue
        eqs[sid] = merge_terms(_map_term(t, representative) for t in terms)
    out = replace(sys_, equations=eqs, symmetry_reduced=True)
    out.check_closed()
    return out


def forward_limits(sys_: EquationSystem) -> Dict[str, int]:
    """Longest word carried by each cumulative series of the family."""
    k = sys_.k
    return {
        "subset": {"L": 2 * k - 1},
        "prime_subset": {"L": 2 * k - 2, "L'": 2 * k - 1},
        "superset": {"U": 2 * k - 1},
        "prime_superset": {"U": 2 * k - 2, "U'": 2 * k - 1},
    }[sys_.family]


_EXACT_OF = {"L": "K", "L'": "K'", "U": "T", "U'": "T'"}


def apply_forward_equations(sys_: EquationSystem) -> EquationSystem:
    """Replace X_w by the forward form X_w = [exact w] + X_0w + X_1w where allowed.

    Allowed when both 0w and 1w are valid and no longer than the longest
    word the family carries for X.
    """
    if sys_.symmetry_reduced:
        raise ValueError("apply forward equations before the symmetry reduction")
    k = sys_.k
    limits = forward_limits(sys_)
    b = _Builder(k, sys_.family)
    eqs = dict(sys_.equations)
    changed = False
    for sid in list(eqs):
        lim = limits.get(sid.name)
        w = sid.word
        if lim is None or w.length + 1 > lim:
            continue
        w0, w1 = w.prepend(0), w.prepend(1)
        if not (is_valid(w0, k) and is_valid(w1, k)):
            continue
        exact_name = _EXACT_OF[sid.name]
        b.current = []
        xp = w.length // 2 if sid.name in BIVARIATE else 0
        b.add(1, 0, xp, b.exact(exact_name, w, exact_name in ("K", "T")))
        b.add(1, 0, 0, (SeriesId(sid.name, w0), False))
        b.add(1, 0, 0, (SeriesId(sid.name, w1), False))
        eqs[sid] = merge_terms(b.current)
        changed = True
    out = replace(sys_, equations=eqs, forward=sys_.forward or changed)
    out.check_closed()
    return out


def stats(sys_: EquationSystem) -> Dict[str, int]:
    return dict(Counter(s.name for s in sys_.equations))

"""Exact and numerical analysis of the computed sequences.

* a catalogue of integer polynomials P(t, y) satisfied by generating
  functions, and ``verify_algebraic`` to check a truncated series against one;
* discriminants in y through a fraction-free (Bareiss) Sylvester determinant;
* real root isolation by Sturm sequences with exact rational arithmetic;
* Fekete lower bounds and (non-rigorous) growth extrapolation;
* ``bounds_report`` assembling the table of family counts.

Univariate polynomials are integer coefficient lists, lowest degree first,
as in ``peo.series``.
"""
from __future__ import annotations

import ast
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .series import TruncSeries, poly_add, poly_mul, poly_scale, poly_sub, poly_trim


# -- polynomial types ------------------------------------------------------

@dataclass(frozen=True)
class PolyT:
    """Integer polynomial in t with a provenance label."""

    coeffs: Tuple[int, ...]
    label: str = ""

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(poly_trim(list(self.coeffs))))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, t):
        return _horner(self.coeffs, t)

    def __str__(self):
        return format_poly(self.coeffs, "t") or "0"


@dataclass(frozen=True)
class PolyTY:
    """Integer polynomial in (t, y): {(t-degree, y-degree): coefficient}."""

    coeffs: Dict[Tuple[int, int], int]
    label: str = ""

    @property
    def y_degree(self) -> int:
        return max(j for (_, j) in self.coeffs)

    @property
    def t_degree(self) -> int:
        return max(i for (i, _) in self.coeffs)

    def y_coefficients(self) -> List[List[int]]:
        """[a_0(t), ..., a_m(t)] with P = sum a_j(t) y^j."""
        out: List[List[int]] = [[] for _ in range(self.y_degree + 1)]
        for (i, j), c in self.coeffs.items():
            out[j] = poly_add(out[j], [0] * i + [c])
        return out

    def derivative_y(self) -> "PolyTY":
        return PolyTY({(i, j - 1): j * c for (i, j), c in self.coeffs.items() if j > 0},
                      label=f"d/dy {self.label}")

    def __call__(self, t, y):
        return sum(c * t ** i * y ** j for (i, j), c in self.coeffs.items())


class _Bivariate:
    """Scratch arithmetic used only by ``parse_poly``."""

    def __init__(self, terms):
        self.terms = {k: v for k, v in terms.items() if v}

    @staticmethod
    def const(c):
        return _Bivariate({(0, 0): c})

    def __add__(self, o):
        r = dict(self.terms)
        for k, v in o.terms.items():
            r[k] = r.get(k, 0) + v
        return _Bivariate(r)

    def __neg__(self):
        return _Bivariate({k: -v for k, v in self.terms.items()})

    def __sub__(self, o):
        return self + (-o)

    def __mul__(self, o):
        r: Dict[Tuple[int, int], int] = {}
        for (a, b), u in self.terms.items():
            for (c, d), v in o.terms.items():
                r[(a + c, b + d)] = r.get((a + c, b + d), 0) + u * v
        return _Bivariate(r)

    def __pow__(self, e):
        r = _Bivariate.const(1)
        for _ in range(e):
            r = r * self
        return r


def parse_poly(expr: str, label: str = "") -> PolyTY:
    """Parse an integer polynomial in ``t`` and ``y`` written in Python syntax."""
    tree = ast.parse(expr, mode="eval")

    def ev(node):
        if isinstance(node, ast.Expression):
            return ev(node.body)
        if isinstance(node, ast.Constant) and isinstance(node.value, int):
            return _Bivariate.const(node.value)
        if isinstance(node, ast.Name) and node.id in ("t", "y"):
            return _Bivariate({(1, 0) if node.id == "t" else (0, 1): 1})
        if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
            v = ev(node.operand)
            return -v if isinstance(node.op, ast.USub) else v
        if isinstance(node, ast.BinOp):
            if isinstance(node.op, ast.Pow):
                if not (isinstance(node.right, ast.Constant) and isinstance(node.right.value, int)):
                    raise ValueError("exponents must be integer literals")
                return ev(node.left) ** node.right.value
            a, b = ev(node.left), ev(node.right)
            if isinstance(node.op, ast.Add):
                return a + b
            if isinstance(node.op, ast.Sub):
                return a - b
            if isinstance(node.op, ast.Mult):
                return a * b
        raise ValueError(f"unsupported syntax in polynomial: {ast.dump(node)}")

    return PolyTY(ev(tree).terms, label=label)


def parse_poly_t(expr: str, label: str = "") -> PolyT:
    p = parse_poly(expr, label)
    if any(j for (_, j) in p.coeffs):
        raise ValueError("expected a polynomial in t only")
    coeffs = [0] * (p.t_degree + 1)
    for (i, _), c in p.coeffs.items():
        coeffs[i] = c
    return PolyT(tuple(coeffs), label)


def format_poly(coeffs: Sequence[int], var: str = "t") -> str:
    parts = []
    for i in range(len(coeffs) - 1, -1, -1):
        c = coeffs[i]
        if not c:
            continue
        sign = "-" if c < 0 else "+"
        a = abs(c)
        mono = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
        body = str(a) if (a != 1 or not mono) else ""
        parts.append(f"{sign} {body}{mono}")
    s = " ".join(parts)
    if s.startswith("+ "):
        return s[2:]
    return "-" + s[2:] if s else ""


# -- catalogue -------------------------------------------------------------
# Transcribed as printed, with the generating function renamed to y.

CATALOGUE: Dict[str, PolyTY] = {
    "subset1": parse_poly(
        "2*t*y**2 - y*(1-t)**2 - t**2 - 2*t + 1",
        "quadratic for the subset family, k=1"),
    "subset2": parse_poly(
        "8*t**3*y**4 - 4*t**2*(3*t**3 + 4*t**2 - 6*t + 3)*y**3"
        " + 2*t*(3*t**5 - 12*t**4 - 10*t**3 + 14*t**2 - 10*t + 3)*y**2"
        " + (t-1)*(11*t**5 - 10*t**4 - 6*t**3 - 3*t**2 - t + 1)*y"
        " + (t-1)*(5*t**5 - 4*t**4 + 6*t**3 - 7*t**2 + 5*t - 1)",
        "quartic for the subset family, k=2"),
    "prime_subset1": parse_poly(
        "t**2*y**3 + t*(t-4)*y**2 + (2*t+1)*y - 1",
        "cubic for the prime subset family, k=1"),
    "prime_subset2": parse_poly(
        "2*t**5*y**6 - t**4*(t+8)*y**5 - t**3*(3*t**2-16)*y**4"
        " + t**2*(2*t+3)*(2*t-5)*y**3 - t*(2*t**2-7*t-7)*y**2 - (5*t+1)*y + 1",
        "sextic for the prime subset family, k=2"),
    "superset1": parse_poly(
        "64*t**3*y**3 + 2*t*(24*t**2 - 36*t + 1)*y**2"
        " + (-15*t**3 + 9*t**2 + 19*t - 1)*y + t**3 + 27*t**2 - 19*t + 1",
        "cubic for the superset families, k=1, at x=1"),
    "maps": parse_poly(
        "t**2 + 11*t - 1 - (8*t**2 + 12*t - 1)*y + 16*t**2*y**2",
        "quadratic for rooted Eulerian maps"),
}

# Short names accepted on the command line (``peo verify --eq eq3``).
ALIASES = {
    "eq3": "subset1",
    "eq4": "subset2",
    "eq10": "prime_subset1",
    "eq11": "prime_subset2",
    "cubic": "superset1",
}

DELTA1 = parse_poly_t("t**4 + 4*t**3 + 22*t**2 - 12*t + 1",
                      "discriminant of the subset k=1 quadratic")
DELTA2_FACTOR = parse_poly_t(
    "81*t**21 + 1863*t**20 + 11322*t**19 + 38592*t**18 + 101105*t**17"
    " + 226631*t**16 + 393423*t**15 + 532907*t**14 + 665167*t**13 + 719797*t**12"
    " + 454804*t**11 + 355710*t**10 + 360159*t**9 - 262135*t**8 - 239969*t**7"
    " + 723151*t**6 - 1106764*t**5 + 820832*t**4 - 316644*t**3 + 65424*t**2"
    " - 6780*t + 268",
    "degree-21 factor of the subset k=2 discriminant")
TAU1 = parse_poly_t("216*t**3 - 81*t**2 + 18*t - 1",
                    "singularity polynomial for the superset k=1 series")

UNIVARIATE: Dict[str, PolyT] = {
    "delta1": DELTA1,
    "delta2_factor": DELTA2_FACTOR,
    "tau1": TAU1,
}

# Which catalogued equation each family series should satisfy, at x = 1.
SERIES_EQUATIONS = [
    ("subset", 1, "subset1"),
    ("subset", 2, "subset2"),
    ("prime_subset", 1, "prime_subset1"),
    ("prime_subset", 2, "prime_subset2"),
    ("superset", 1, "superset1"),
    ("prime_superset", 1, "superset1"),
]


def get_equation(name: str) -> PolyTY:
    key = ALIASES.get(name.lower(), name.lower())
    if key not in CATALOGUE:
        raise KeyError(f"unknown equation {name!r}; known: {sorted(CATALOGUE) + sorted(ALIASES)}")
    return CATALOGUE[key]


# -- algebraic membership --------------------------------------------------

@dataclass(frozen=True)
class AlgebraicCheck:
    order: int
    first_failure: Optional[int]

    @property
    def holds(self) -> bool:
        return self.first_failure is None

    def __str__(self):
        if self.holds:
            return f"holds through {self.order}"
        return f"fails at n={self.first_failure}"


def verify_algebraic(s, p: PolyTY) -> AlgebraicCheck:
    """Substitute the series s(t) for y in p and find the first non-zero coefficient."""
    if not isinstance(s, TruncSeries):
        s = TruncSeries(s)
    N = s.order
    powers = [TruncSeries.one(N)]
    for _ in range(p.y_degree):
        powers.append(powers[-1] * s)
    total = [0] * (N + 1)
    for (i, j), c in p.coeffs.items():
        pw = powers[j].coeffs
        for n in range(i, N + 1):
            total[n] += c * pw[n - i]
    bad = next((n for n, v in enumerate(total) if v), None)
    return AlgebraicCheck(N, bad)


# -- univariate polynomial arithmetic over Z and Q -------------------------

def poly_divmod(a: Sequence, b: Sequence) -> Tuple[List[Fraction], List[Fraction]]:
    """Division with remainder over the rationals."""
    a = [Fraction(c) for c in poly_trim(a)]
    b = [Fraction(c) for c in poly_trim(b)]
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    while len(a) >= len(b) and a:
        c = a[-1] / b[-1]
        d = len(a) - len(b)
        q[d] = c
        for i, bc in enumerate(b):
            a[i + d] -= c * bc
        a = poly_trim(a)
    return poly_trim(q), a


def exact_divide(a: Sequence[int], b: Sequence[int]) -> List[int]:
    """a / b over Z; raises ArithmeticError unless the division is exact."""
    q, r = poly_divmod(a, b)
    if r or any(c.denominator != 1 for c in q):
        raise ArithmeticError("polynomial division is not exact")
    return [int(c) for c in q]


def poly_derivative(p: Sequence) -> list:
    return poly_trim([i * p[i] for i in range(1, len(p))])


def poly_gcd(a: Sequence, b: Sequence) -> List[int]:
    """Primitive integer gcd with positive leading coefficient."""
    a = [Fraction(c) for c in poly_trim(a)]
    b = [Fraction(c) for c in poly_trim(b)]
    while b:
        a, b = b, poly_divmod(a, b)[1]
    return _primitive(a)


def _primitive(p: Sequence[Fraction]) -> List[int]:
    if not p:
        return []
    den = math.lcm(*(Fraction(c).denominator for c in p))
    ints = [int(Fraction(c) * den) for c in p]
    g = math.gcd(*ints)
    ints = [c // g for c in ints]
    return ints if ints[-1] > 0 else [-c for c in ints]


def content(p: Sequence[int]) -> int:
    return math.gcd(*p) if p else 0


# -- resultant and discriminant --------------------------------------------

def _bareiss_det(m: List[List[List[int]]]) -> List[int]:
    """Determinant of a square matrix with Z[t] entries (fraction-free elimination)."""
    m = [[list(e) for e in row] for row in m]
    n = len(m)
    sign = 1
    prev: List[int] = [1]
    for k in range(n - 1):
        if not m[k][k]:
            swap = next((i for i in range(k + 1, n) if m[i][k]), None)
            if swap is None:
                return []
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        piv = m[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = poly_sub(poly_mul(m[i][j], piv), poly_mul(m[i][k], m[k][j]))
                m[i][j] = exact_divide(num, prev) if num else []
            m[i][k] = []
        prev = piv
    return poly_scale(m[n - 1][n - 1], sign)


def sylvester_matrix(f: List[List[int]], g: List[List[int]]) -> List[List[List[int]]]:
    """Sylvester matrix of f, g given as y-coefficient lists (lowest first)."""
    m, n = len(f) - 1, len(g) - 1
    size = m + n
    rows = []
    for i in range(n):
        row = [[] for _ in range(size)]
        for j, c in enumerate(reversed(f)):
            row[i + j] = list(c)
        rows.append(row)
    for i in range(m):
        row = [[] for _ in range(size)]
        for j, c in enumerate(reversed(g)):
            row[i + j] = list(c)
        rows.append(row)
    return rows


def resultant_y(p: PolyTY, q: PolyTY) -> List[int]:
    return _bareiss_det(sylvester_matrix(p.y_coefficients(), q.y_coefficients()))


def discriminant_y(p: PolyTY) -> PolyT:
    """(-1)^(m(m-1)/2) Res_y(p, dp/dy) / lc_y(p), with m the y-degree.

    With this normalisation y^2 - t has discriminant 4t, the usual b^2 - 4ac.
    """
    m = p.y_degree
    if m < 2:
        raise ValueError("discriminant needs y-degree at least 2")
    res = resultant_y(p, p.derivative_y())
    lc = p.y_coefficients()[m]
    disc = exact_divide(res, lc)
    if (m * (m - 1) // 2) % 2:
        disc = [-c for c in disc]
    return PolyT(tuple(disc), label=f"discriminant of {p.label}")


def constant_multiple(a: Sequence[int], b: Sequence[int]) -> Optional[Fraction]:
    """c with a = c*b, or None if a is not a constant multiple of b."""
    a, b = poly_trim(a), poly_trim(b)
    if len(a) != len(b) or not b:
        return None
    c = Fraction(a[-1], b[-1])
    return c if all(Fraction(x) == c * y for x, y in zip(a, b)) else None


# -- real root isolation ---------------------------------------------------

def sturm_sequence(p: Sequence[int]) -> List[List[Fraction]]:
    seq = [[Fraction(c) for c in poly_trim(p)]]
    d = poly_derivative(seq[0])
    while d:
        seq.append(d)
        r = poly_divmod(seq[-2], seq[-1])[1]
        d = [-c for c in r]
    return seq


def _horner(p: Sequence, x):
    acc = 0
    for c in reversed(p):
        acc = acc * x + c
    return acc


def _sign_changes(seq, x: Fraction) -> int:
    signs = [v > 0 for v in (_horner(q, x) for q in seq) if v]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def count_roots(p: Sequence[int], lo, hi, seq=None) -> int:
    """Number of distinct real roots in the half-open interval (lo, hi]."""
    seq = seq or sturm_sequence(p)
    return _sign_changes(seq, Fraction(lo)) - _sign_changes(seq, Fraction(hi))


@dataclass(frozen=True)
class RootInterval:
    lo: Fraction
    hi: Fraction

    @property
    def mid(self) -> float:
        return float((self.lo + self.hi) / 2)

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    def reciprocal(self) -> Tuple[float, float]:
        """Enclosure of 1/root (assumes 0 < lo)."""
        return (float(1 / self.hi), float(1 / self.lo))

    def to_json(self):
        return {"lo": str(self.lo), "hi": str(self.hi), "approx": self.mid}


def root_isolate(p, lo=0, hi=1, tol=1e-9) -> List[RootInterval]:
    """Enclose every real root of p in (lo, hi] in an interval of width <= tol.

    Signs are evaluated exactly over the rationals.  A repeated factor with a
    root in the interval is rejected, since Sturm counting then only sees
    distinct roots and the sign alternation at the endpoints is lost.
    """
    coeffs = list(p.coeffs if isinstance(p, PolyT) else p)
    lo, hi, tol = Fraction(lo), Fraction(hi), Fraction(str(tol))
    g = poly_gcd(coeffs, poly_derivative(coeffs))
    if len(g) > 1 and count_roots(g, lo, hi):
        raise ValueError(f"polynomial is not square-free on the interval; repeated factor {format_poly(g)}")
    seq = sturm_sequence(coeffs)
    f = PolyT(tuple(coeffs))
    out: List[RootInterval] = []
    stack = [(lo, hi)]
    while stack:
        a, b = stack.pop()
        n = count_roots(coeffs, a, b, seq)
        if n == 0:
            continue
        if n > 1:
            m = (a + b) / 2
            stack += [(m, b), (a, m)]
            continue
        # exactly one root in (a, b]; shrink by sign bisection
        if f(b) == 0:
            out.append(RootInterval(b, b))
            continue
        while b - a > tol:
            m = (a + b) / 2
            fm = f(m)
            if fm == 0:
                a = b = m
                break
            if count_roots(coeffs, a, m, seq):
                b = m
            else:
                a = m
        out.append(RootInterval(a, b))
    out.sort(key=lambda r: r.lo)
    return out


# Windows that a radius of convergence must lie in: every family is squeezed
# between Eulerian maps (growth 8) and oriented Eulerian maps (growth 16).
RADIUS_WINDOW = (Fraction(1, 16), Fraction(1, 8))


def radius_candidates(p, window=RADIUS_WINDOW, tol=1e-12) -> List[RootInterval]:
    lo, hi = window
    return root_isolate(p, lo, hi, tol)


def growth_from_polynomial(p, window=RADIUS_WINDOW, tol=1e-12):
    """Growth rate 1/rho from the unique root in the window, as a float.

    Returns a list of candidate growth rates when the window does not pin
    down a single root.
    """
    roots = radius_candidates(p, window, tol)
    if len(roots) == 1:
        return 1 / roots[0].mid
    return [1 / r.mid for r in roots]


# -- Fekete bounds ---------------------------------------------------------

def supermultiplicative_violations(seq: Sequence[int]) -> List[Tuple[int, int]]:
    """Pairs (m, n), 1 <= m <= n, m + n < len(seq), with seq[m+n] < seq[m]*seq[n]."""
    bad = []
    for m in range(1, len(seq)):
        for n in range(m, len(seq) - m):
            if seq[m + n] < seq[m] * seq[n]:
                bad.append((m, n))
    return bad


def _nth_root_floor(x: int, n: int) -> int:
    """Largest r with r^n <= x."""
    if x < 2:
        return x
    r = int(round(x ** (1.0 / n))) if x.bit_length() < 1000 else 1 << (x.bit_length() // n)
    while r ** n > x:
        r -= 1
    while (r + 1) ** n <= x:
        r += 1
    return r


@dataclass
class FeketeBound:
    n: int
    value: float
    certified: Fraction
    supermultiplicative: bool
    violations: List[Tuple[int, int]] = field(default_factory=list)

    def to_json(self):
        return {
            "n": self.n,
            "value": self.value,
            "certified_lower": str(self.certified),
            "supermultiplicative": self.supermultiplicative,
            "violations": [list(v) for v in self.violations],
        }


def fekete_lower_bound(seq: Sequence[int], n: Optional[int] = None, digits: int = 6) -> FeketeBound:
    """seq[n]^(1/n), a lower bound on the growth rate of a super-multiplicative sequence.

    ``certified`` is a decimal r with r^n <= seq[n] exactly.  If the
    available prefix is not super-multiplicative the bound is still returned
    with the flag cleared and the offending pairs listed.
    """
    seq = [int(c) for c in seq]
    if n is None:
        n = len(seq) - 1
    if n < 1:
        raise ValueError("need n >= 1")
    scale = 10 ** digits
    r = _nth_root_floor(seq[n] * scale ** n, n)
    bad = supermultiplicative_violations(seq)
    return FeketeBound(n, seq[n] ** (1.0 / n) if seq[n].bit_length() < 1000 else float(Fraction(r, scale)),
                       Fraction(r, scale), not bad, bad)


# -- growth extrapolation (non-rigorous) -----------------------------------

def aitken(x: Sequence) -> Fraction:
    """Aitken delta-squared extrapolation from the last three terms."""
    a, b, c = x[-3:]
    d = c - 2 * b + a
    if d == 0:
        return c
    return c - (c - b) ** 2 / d


@dataclass
class GrowthEstimate:
    ratios: List[Tuple[float, float]]
    intercepts: List[float]
    estimate: float
    richardson: float
    rigorous: bool = False

    def to_json(self):
        return {
            "ratios": [{"inv_n": a, "ratio": b} for a, b in self.ratios],
            "intercepts": self.intercepts,
            "estimate": self.estimate,
            "richardson": self.richardson,
            "rigorous": self.rigorous,
        }

    def ratios_csv(self) -> str:
        return "inv_n,ratio\n" + "".join(f"{a!r},{b!r}\n" for a, b in self.ratios)


def _neville_at_zero(xs: Sequence[Fraction], ys: Sequence[Fraction]) -> Fraction:
    total = Fraction(0)
    for i, (xi, yi) in enumerate(zip(xs, ys)):
        w = Fraction(1)
        for j, xj in enumerate(xs):
            if j != i:
                w *= -xj / (xi - xj)
        total += w * yi
    return total


def estimate_growth(seq: Sequence[int], order: int = 3) -> GrowthEstimate:
    """Extrapolate lim seq[n+1]/seq[n].

    If r_n = seq[n]/seq[n-1] behaves like mu (1 + c/n + ...), the intercepts
    n r_n - (n-1) r_{n-1} of successive chords in the (1/n, r_n) plot cancel
    the 1/n term; Aitken's delta-squared is then applied to the intercepts.
    ``richardson`` fits a polynomial of the given order in 1/n through the
    last ratios and reads off its value at 0.  Neither value is certified.
    """
    seq = [int(c) for c in seq]
    if len(seq) < 6:
        raise ValueError("growth extrapolation needs at least 6 terms")
    start = next(i for i, c in enumerate(seq) if c) + 1
    r = {n: Fraction(seq[n], seq[n - 1]) for n in range(start, len(seq))}
    ns = sorted(r)
    ratios = [(1.0 / (n - 1) if n > 1 else math.inf, float(r[n])) for n in ns if n > 1]
    inter = [n * r[n] - (n - 1) * r[n - 1] for n in ns[1:]]
    est = aitken(inter) if len(inter) >= 3 else inter[-1]
    last = ns[-(order + 1):]
    rich = _neville_at_zero([Fraction(1, n) for n in last], [r[n] for n in last])
    return GrowthEstimate(ratios, [float(v) for v in inter], float(est), float(rich))


# -- table -----------------------------------------------------------------

@dataclass
class ReportRow:
    name: str
    family: Optional[str]
    k: Optional[int]
    counts: List[int]
    equal: List[bool]
    growth: Optional[float] = None
    growth_kind: str = ""

    def to_json(self):
        return {
            "name": self.name,
            "family": self.family,
            "k": self.k,
            "counts": [str(c) for c in self.counts],
            "equals_o_n": self.equal,
            "growth": self.growth,
            "growth_kind": self.growth_kind,
        }


FAMILY_SYMBOL = {"subset": "L", "prime_subset": "LL", "superset": "U", "prime_superset": "UU"}

# Catalogued polynomial whose root in the radius window gives the growth rate.
_EXACT_GROWTH = {("subset", 1): "delta1", ("subset", 2): "delta2_factor",
                 ("superset", 1): "tau1", ("prime_superset", 1): "tau1"}


def bounds_report(N: int = 7, k_max: int = 3, growth_order: int = 0,
                  o_n: Optional[Sequence[int]] = None) -> List[ReportRow]:
    """Rows of family counts for n = 1..N in the printed table order.

    Subset families have k <= min(k_max, 2) for the standard decomposition and
    k <= k_max for the prime one; likewise for supersets.  When
    ``growth_order`` is positive, each row gets a growth value: from root
    isolation where a catalogued polynomial exists, else a labelled estimate
    from ``estimate_growth`` on the first ``growth_order`` coefficients.
    """
    from .exact import count_prime
    from .golden import ORIENTED_MAPS, TABLE1_ORDER
    from .oracle import eulerian_maps_count
    from .solver import root_series

    if o_n is None:
        o_n = count_prime(N)
    o_n = list(o_n)
    wanted = []
    for fam, k in TABLE1_ORDER:
        limit = min(k_max, 2) if fam in ("subset", "superset") else k_max
        if k <= limit:
            wanted.append((fam, k))
    rows = [ReportRow("Eulerian maps", None, None,
                      [eulerian_maps_count(n) for n in range(1, N + 1)], [False] * N,
                      8.0, "exact")]
    for fam, k in wanted:
        s = root_series(fam, k, max(N, growth_order))
        counts = list(s[1:N + 1])
        row = ReportRow(f"{FAMILY_SYMBOL[fam]}^({k})", fam, k, counts,
                        [c == o for c, o in zip(counts, o_n[1:N + 1])])
        if growth_order:
            if (fam, k) in _EXACT_GROWTH:
                row.growth = growth_from_polynomial(UNIVARIATE[_EXACT_GROWTH[(fam, k)]])
                row.growth_kind = "exact"
            else:
                row.growth = estimate_growth(s[:growth_order + 1]).estimate
                row.growth_kind = "estimate"
        rows.append(row)
    # o_n sits between the subset and superset blocks
    split = 1 + sum(1 for fam, _ in wanted if fam in ("subset", "prime_subset"))
    rows.insert(split, ReportRow("Eulerian orientations", None, None, o_n[1:N + 1], [True] * N,
                                 estimate_growth(o_n).estimate if growth_order and len(o_n) >= 6 else None,
                                 "estimate" if growth_order and len(o_n) >= 6 else ""))
    oriented = [(2 ** n) * eulerian_maps_count(n) for n in range(1, N + 1)]
    rows.append(ReportRow("Oriented Eulerian maps", None, None, oriented,
                          [c == o for c, o in zip(oriented, o_n[1:N + 1])], 16.0, "exact"))
    assert oriented[:len(ORIENTED_MAPS)] == ORIENTED_MAPS[:N]
    return rows


def format_report(rows: Sequence[ReportRow]) -> str:
    """Plain-text table; counts equal to o_n are starred."""
    lines = []
    for row in rows:
        cells = [f"{c}*" if e else str(c) for c, e in zip(row.counts, row.equal)]
        g = ""
        if row.growth is not None:
            g = ("~" if row.growth_kind == "estimate" else "") + f"{row.growth:.4f}"
        lines.append(f"{row.name:<24} {g:>9}  " + " ".join(f"{c:>10}" for c in cells))
    return "\n".join(lines)

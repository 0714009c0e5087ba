"""Exact truncated power series.

``TruncSeries`` holds the coefficients of t^0..t^N as Python ints.
``XSeries`` does the same with ``XPoly`` coefficients, i.e. polynomials in
the catalytic variable x (root half-degree).

The list-level helpers (``poly_*``) are what the solver uses in its inner
loops; the classes are the public, immutable face of the same arithmetic.
"""
from __future__ import annotations

from typing import Iterable, List, Sequence

Poly = List[int]


# -- integer polynomials in x, as coefficient lists ------------------------

def poly_trim(p: Sequence[int]) -> Poly:
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return p


def poly_add(p: Sequence[int], q: Sequence[int]) -> Poly:
    if len(p) < len(q):
        p, q = q, p
    r = list(p)
    for i, c in enumerate(q):
        r[i] += c
    return poly_trim(r)


def poly_sub(p: Sequence[int], q: Sequence[int]) -> Poly:
    return poly_add(p, [-c for c in q])


def poly_scale(p: Sequence[int], c: int) -> Poly:
    if c == 0:
        return []
    return [c * a for a in p]


def poly_mul(p: Sequence[int], q: Sequence[int]) -> Poly:
    if not p or not q:
        return []
    r = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                r[i + j] += a * b
    return poly_trim(r)


def poly_shift(p: Sequence[int], k: int) -> Poly:
    """Multiply by x^k."""
    if not p:
        return []
    return [0] * k + list(p)


def poly_eval1(p: Sequence[int]) -> int:
    return sum(p)


def poly_eval(p: Sequence[int], x):
    acc = 0
    for c in reversed(p):
        acc = acc * x + c
    return acc


def divided_difference_poly(p: Sequence[int], k: int) -> Poly:
    """Return Q with (x - 1) Q(x) = p(x) - x^k p(1).

    Synthetic division by (x - 1); a non-zero remainder would mean the
    numerator does not vanish at 1, which cannot happen, so it aborts.
    """
    p1 = sum(p)
    num = list(p) + [0] * max(0, k + 1 - len(p))
    num[k] -= p1
    num = poly_trim(num)
    if not num:
        return []
    # Horner from the top: q_{d-1} = a_d, q_{i-1} = a_i + q_i.
    d = len(num) - 1
    q = [0] * d
    acc = 0
    for i in range(d, 0, -1):
        acc += num[i]
        q[i - 1] = acc
    if acc + num[0] != 0:
        raise ArithmeticError("divided difference: non-zero remainder")
    return poly_trim(q)


# -- public value types ----------------------------------------------------

class XPoly:
    """Integer polynomial in x; trailing zeros are always trimmed."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        self.coeffs = tuple(poly_trim(list(coeffs)))

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> "XPoly":
        return cls(poly_shift([c], k))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, x):
        return poly_eval(self.coeffs, x)

    def __eq__(self, other):
        if isinstance(other, int):
            other = XPoly([other])
        return isinstance(other, XPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        return XPoly(poly_add(self.coeffs, _as_poly(other)))

    __radd__ = __add__

    def __sub__(self, other):
        return XPoly(poly_sub(self.coeffs, _as_poly(other)))

    def __rsub__(self, other):
        return XPoly(poly_sub(_as_poly(other), self.coeffs))

    def __neg__(self):
        return XPoly(-c for c in self.coeffs)

    def __mul__(self, other):
        return XPoly(poly_mul(self.coeffs, _as_poly(other)))

    __rmul__ = __mul__

    def __repr__(self):
        return f"XPoly({list(self.coeffs)})"


def _as_poly(v) -> Sequence[int]:
    if isinstance(v, XPoly):
        return v.coeffs
    if isinstance(v, int):
        return [v] if v else []
    raise TypeError(f"cannot use {type(v).__name__} as a polynomial")


def divided_difference(p: XPoly, k: int) -> XPoly:
    return XPoly(divided_difference_poly(p.coeffs, k))


class TruncSeries:
    """Power series in t known modulo t^(order+1), integer coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int], order: int | None = None):
        c = [int(a) for a in coeffs]
        if order is not None:
            c = (c + [0] * (order + 1))[: order + 1]
        if not c:
            raise ValueError("a truncated series needs at least one coefficient")
        self.coeffs = tuple(c)

    @classmethod
    def one(cls, order: int) -> "TruncSeries":
        return cls([1], order)

    @classmethod
    def t(cls, order: int) -> "TruncSeries":
        return cls([0, 1], order)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, n):
        return self.coeffs[n]

    def __iter__(self):
        return iter(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, TruncSeries):
            return self.coeffs == other.coeffs
        if isinstance(other, (list, tuple)):
            return list(self.coeffs) == list(other)
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def _check(self, other: "TruncSeries"):
        if not isinstance(other, TruncSeries):
            raise TypeError(f"expected TruncSeries, got {type(other).__name__}")
        if other.order != self.order:
            raise ValueError(f"truncation orders differ: {self.order} vs {other.order}")

    def __add__(self, other):
        if isinstance(other, int):
            other = TruncSeries([other], self.order)
        self._check(other)
        return TruncSeries(a + b for a, b in zip(self.coeffs, other.coeffs))

    __radd__ = __add__

    def __neg__(self):
        return TruncSeries(-a for a in self.coeffs)

    def __sub__(self, other):
        if isinstance(other, int):
            other = TruncSeries([other], self.order)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return TruncSeries(other * a for a in self.coeffs)
        if isinstance(other, XSeries):
            return other * self
        self._check(other)
        a, b = self.coeffs, other.coeffs
        n = len(a)
        out = [0] * n
        for i, ai in enumerate(a):
            if ai:
                for j in range(n - i):
                    out[i + j] += ai * b[j]
        return TruncSeries(out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        r = TruncSeries.one(self.order)
        for _ in range(e):
            r = r * self
        return r

    def shift(self, p: int = 1) -> "TruncSeries":
        """Multiply by t^p (truncating)."""
        return TruncSeries([0] * p + list(self.coeffs), self.order)

    def truncate(self, order: int) -> "TruncSeries":
        return TruncSeries(self.coeffs, order)

    def to_json(self):
        return [str(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, data) -> "TruncSeries":
        return cls(int(c) for c in data)

    def __repr__(self):
        return f"TruncSeries({list(self.coeffs)})"


class XSeries:
    """Truncated series in t whose coefficients are ``XPoly``."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable, order: int | None = None):
        c = [p if isinstance(p, XPoly) else XPoly(_as_poly(p) if isinstance(p, int) else p)
             for p in coeffs]
        if order is not None:
            c = (c + [XPoly()] * (order + 1))[: order + 1]
        if not c:
            raise ValueError("a truncated series needs at least one coefficient")
        self.coeffs = tuple(c)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, n):
        return self.coeffs[n]

    def __iter__(self):
        return iter(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def __eq__(self, other):
        return isinstance(other, XSeries) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def _lift(self, other) -> "XSeries":
        if isinstance(other, XSeries):
            if other.order != self.order:
                raise ValueError(f"truncation orders differ: {self.order} vs {other.order}")
            return other
        if isinstance(other, TruncSeries):
            if other.order != self.order:
                raise ValueError(f"truncation orders differ: {self.order} vs {other.order}")
            return XSeries(XPoly([c]) for c in other.coeffs)
        if isinstance(other, (int, XPoly)):
            return XSeries([other], self.order)
        raise TypeError(f"cannot combine XSeries with {type(other).__name__}")

    def __add__(self, other):
        other = self._lift(other)
        return XSeries(a + b for a, b in zip(self.coeffs, other.coeffs))

    __radd__ = __add__

    def __neg__(self):
        return XSeries(-a for a in self.coeffs)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, XPoly)):
            return XSeries(p * other for p in self.coeffs)
        other = self._lift(other)
        a = [p.coeffs for p in self.coeffs]
        b = [p.coeffs for p in other.coeffs]
        n = len(a)
        out = []
        for m in range(n):
            acc: Poly = []
            for i in range(m + 1):
                if a[i] and b[m - i]:
                    acc = poly_add(acc, poly_mul(a[i], b[m - i]))
            out.append(XPoly(acc))
        return XSeries(out)

    __rmul__ = __mul__

    def shift(self, p: int = 1) -> "XSeries":
        return XSeries([XPoly()] * p + list(self.coeffs), self.order)

    def xshift(self, k: int) -> "XSeries":
        """Multiply by x^k."""
        return XSeries(XPoly(poly_shift(p.coeffs, k)) for p in self.coeffs)

    def divided_difference(self, k: int) -> "XSeries":
        return XSeries(divided_difference(p, k) for p in self.coeffs)

    def to_json(self):
        return [[str(c) for c in p.coeffs] for p in self.coeffs]

    @classmethod
    def from_json(cls, data) -> "XSeries":
        return cls(XPoly(int(c) for c in row) for row in data)

    def __repr__(self):
        return f"XSeries({[list(p.coeffs) for p in self.coeffs]})"


def mul(a, b):
    """Product of two series of the same kind and order."""
    return a * b


def eval_x1(s: XSeries) -> TruncSeries:
    return TruncSeries(poly_eval1(p.coeffs) for p in s.coeffs)

"""Affine type A ground data: residues, the Cartan matrix, root vectors and positive roots.

Residues live in ``Z/e`` with ``e >= 2``.  A root vector is a length-``e``
tuple of nonnegative multiplicities of the simple roots ``alpha_0..alpha_{e-1}``.

>>> cartan_pairing(0, 1, 2)
-2
>>> classify_root(RootVector((1, 0, 1)))
PositiveRoot(kind='minus', m=1, i=1, j=1)
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Optional

from .errors import DomainError, ParseError


def check_e(e: int) -> int:
    if not isinstance(e, int) or e < 2:
        raise DomainError(f"e must be an integer >= 2, got {e!r}")
    return e


def cartan_pairing(i: int, j: int, e: int) -> int:
    """Entry ``a_{ij}`` of the affine Cartan matrix of type A^{(1)}_{e-1}."""
    i %= e
    j %= e
    if i == j:
        return 2
    if e == 2:
        return -2
    if (i - j) % e in (1, e - 1):
        return -1
    return 0


@dataclass(frozen=True)
class RootVector:
    """An element of the positive root lattice, stored as multiplicities."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(int(c) for c in self.coeffs))
        if len(self.coeffs) < 2:
            raise DomainError(f"root vector needs e >= 2 entries, got {self.coeffs}")

    @property
    def e(self) -> int:
        return len(self.coeffs)

    @classmethod
    def zero(cls, e: int) -> RootVector:
        return cls((0,) * check_e(e))

    @classmethod
    def simple(cls, i: int, e: int) -> RootVector:
        c = [0] * check_e(e)
        c[i % e] = 1
        return cls(tuple(c))

    @classmethod
    def delta(cls, e: int, n: int = 1) -> RootVector:
        return cls((n,) * check_e(e))

    @classmethod
    def from_letters(cls, letters: Iterable[int], e: int) -> RootVector:
        c = [0] * e
        for x in letters:
            c[x] += 1
        return cls(tuple(c))

    def _same_e(self, other: RootVector) -> None:
        if self.e != other.e:
            raise DomainError(f"dimension mismatch: e={self.e} vs e={other.e}")

    def __add__(self, other: RootVector) -> RootVector:
        self._same_e(other)
        return RootVector(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: RootVector) -> RootVector:
        # May leave Q_+; callers test is_nonnegative().
        self._same_e(other)
        return RootVector(tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __mul__(self, n: int) -> RootVector:
        return RootVector(tuple(n * a for a in self.coeffs))

    __rmul__ = __mul__

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i]

    def __iter__(self):
        return iter(self.coeffs)

    def is_nonnegative(self) -> bool:
        return all(c >= 0 for c in self.coeffs)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __repr__(self):
        return f"RootVector({self.coeffs})"


def bilinear_form(v: RootVector, w: RootVector) -> int:
    if v.e != w.e:
        raise DomainError(f"dimension mismatch: e={v.e} vs e={w.e}")
    e = v.e
    total = 0
    for i, a in enumerate(v.coeffs):
        if a:
            for j, b in enumerate(w.coeffs):
                if b:
                    total += a * b * cartan_pairing(i, j, e)
    return total


def weight_pairing(i: int, v: RootVector) -> int:
    """Pair the fundamental weight ``Lambda_i`` with ``v``."""
    return v.coeffs[i % v.e]


def height(v: RootVector) -> int:
    return sum(v.coeffs)


_KIND_RANK = {"plus": 0, "imag": 1, "minus": 2}


@dataclass(frozen=True)
class PositiveRoot:
    """A positive root of affine type A.

    ``kind='plus'``:  m*delta + alpha_i + ... + alpha_j  (m >= 0)
    ``kind='minus'``: m*delta - alpha_i - ... - alpha_j  (m >= 1)
    ``kind='imag'``:  m*delta (i = j = 0)

    with ``1 <= i <= j <= e-1`` for the real kinds.
    """

    kind: str
    m: int
    i: int = 0
    j: int = 0

    def __post_init__(self):
        if self.kind == "imag":
            if self.m < 1 or self.i or self.j:
                raise DomainError(f"bad imaginary root {self}")
        elif self.kind in ("plus", "minus"):
            if not 1 <= self.i <= self.j:
                raise DomainError(f"bad interval in {self}")
            if self.m < (0 if self.kind == "plus" else 1):
                raise DomainError(f"bad multiplicity in {self}")
        else:
            raise DomainError(f"unknown root kind {self.kind!r}")

    @classmethod
    def plus(cls, m: int, i: int, j: Optional[int] = None) -> PositiveRoot:
        return cls("plus", m, i, i if j is None else j)

    @classmethod
    def minus(cls, m: int, i: int, j: Optional[int] = None) -> PositiveRoot:
        return cls("minus", m, i, i if j is None else j)

    @classmethod
    def imaginary(cls, n: int) -> PositiveRoot:
        return cls("imag", n)

    @classmethod
    def simple(cls, i: int, e: int) -> PositiveRoot:
        i %= e
        if i == 0:
            return cls("minus", 1, 1, e - 1)
        return cls("plus", 0, i, i)

    @property
    def is_real(self) -> bool:
        return self.kind != "imag"

    def vector(self, e: int) -> RootVector:
        if self.is_real and self.j > e - 1:
            raise DomainError(f"{self} does not exist for e={e}")
        c = [self.m] * e
        sign = {"plus": 1, "minus": -1, "imag": 0}[self.kind]
        if sign:
            for k in range(self.i, self.j + 1):
                c[k] += sign
        return RootVector(tuple(c))

    def height(self, e: int) -> int:
        n = self.j - self.i + 1 if self.is_real else 0
        return self.m * e + {"plus": n, "minus": -n, "imag": 0}[self.kind]

    def sort_key(self, e: int):
        return (self.height(e), _KIND_RANK[self.kind], self.i, self.j)

    def spelling(self) -> str:
        """Canonical CLI spelling, e.g. ``2d+a1..a3``, ``d-a1``, ``a2``, ``3d``."""
        if self.kind == "imag":
            return "d" if self.m == 1 else f"{self.m}d"
        interval = f"a{self.i}" if self.i == self.j else f"a{self.i}..a{self.j}"
        mult = "" if self.m == 0 else ("d" if self.m == 1 else f"{self.m}d")
        if self.kind == "plus":
            return f"{mult}+{interval}" if mult else interval
        return f"{mult}-{interval}"


def classify_root(v: RootVector) -> Optional[PositiveRoot]:
    """Return the positive root with vector ``v``, or None when ``v`` is not a root."""
    if v.is_zero():
        raise DomainError("classify_root needs a nonzero vector")
    if not v.is_nonnegative():
        return None
    e = v.e
    m0 = min(v.coeffs)
    r = [c - m0 for c in v.coeffs]
    if any(c > 1 for c in r):
        return None
    support = [k for k in range(e) if r[k]]
    if not support:
        return PositiveRoot.imaginary(m0)
    if r[0] == 0:
        lo, hi = support[0], support[-1]
        if hi - lo + 1 != len(support):
            return None
        return PositiveRoot.plus(m0, lo, hi)
    holes = [k for k in range(e) if not r[k]]
    lo, hi = holes[0], holes[-1]
    if hi - lo + 1 != len(holes):
        return None
    return PositiveRoot.minus(m0 + 1, lo, hi)


@lru_cache(maxsize=None)
def positive_roots_up_to_height(h: int, e: int) -> tuple[PositiveRoot, ...]:
    """All positive roots of height <= h, ordered by height, kind, interval."""
    check_e(e)
    out = []
    for m in range(0, h // e + 2):
        if m >= 1 and m * e <= h:
            out.append(PositiveRoot.imaginary(m))
        for i in range(1, e):
            for j in range(i, e):
                n = j - i + 1
                if m * e + n <= h:
                    out.append(PositiveRoot.plus(m, i, j))
                if m >= 1 and m * e - n <= h:
                    out.append(PositiveRoot.minus(m, i, j))
    out.sort(key=lambda r: r.sort_key(e))
    return tuple(out)


_ROOT_TERM = re.compile(r"\s*([+-]?)\s*(\d*)\s*(d|a(\d+)(?:\.\.a(\d+))?)\s*")


def parse_root_vector(text: str, e: int) -> RootVector:
    """Parse a signed sum of ``d`` and ``a_i`` terms (or a comma list of coefficients) into a vector."""
    check_e(e)
    if not text.strip():
        raise ParseError("empty root", text, 0)
    if re.fullmatch(r"\s*-?\d+(\s*,\s*-?\d+)*\s*", text):
        coeffs = tuple(int(x) for x in text.split(","))
        if len(coeffs) != e:
            raise ParseError(f"expected {e} coefficients", text, 0)
        return RootVector(coeffs)
    total = [0] * e
    pos = 0
    first = True
    while pos < len(text):
        mt = _ROOT_TERM.match(text, pos)
        if not mt or mt.end() == pos:
            raise ParseError("malformed root term", text, pos)
        sign_s, mult_s, body, lo_s, hi_s = mt.groups()
        if not sign_s and not first:
            raise ParseError("expected '+' or '-'", text, mt.start(1))
        sign = -1 if sign_s == "-" else 1
        mult = int(mult_s) if mult_s else 1
        if body == "d":
            for k in range(e):
                total[k] += sign * mult
        else:
            lo = int(lo_s)
            hi = int(hi_s) if hi_s is not None else lo
            if lo >= e or hi >= e or hi < lo:
                raise ParseError(f"simple root index out of range for e={e}", text, mt.start(3))
            for k in range(lo, hi + 1):
                total[k] += sign * mult
        pos = mt.end()
        first = False
    return RootVector(tuple(total))


def parse_root(text: str, e: int) -> PositiveRoot:
    """Parse spellings like ``a1``, ``a1+a2``, ``d-a1``, ``2d+a1..a3``, ``a0``.

    Any signed sum of ``d`` and simple-root terms is accepted as long as the
    total is a positive root.
    """
    v = parse_root_vector(text, e)
    if not v.is_nonnegative() or v.is_zero():
        raise ParseError("not a positive root", text, 0)
    r = classify_root(v)
    if r is None:
        raise ParseError("not a positive root", text, 0)
    return r

"""Sparse Laurent polynomials in q with integer coefficients."""
from __future__ import annotations

from typing import Iterable, Mapping, Union


class LaurentPoly:
    """Immutable map exponent -> coefficient with zero coefficients dropped.

    >>> q = LaurentPoly.q()
    >>> str(q + q**-1)
    'q+q^-1'
    >>> (q + 1) * (q - 1) == q**2 - 1
    True
    """

    __slots__ = ("_c", "_hash")

    def __init__(self, coeffs: Union[Mapping[int, int], Iterable[tuple[int, int]], None] = None):
        items = coeffs.items() if isinstance(coeffs, (dict, Mapping)) else (coeffs or ())
        c: dict[int, int] = {}
        for k, v in items:
            if v:
                c[k] = c.get(k, 0) + v
        self._c = {int(k): int(v) for k, v in c.items() if v}
        self._hash = None

    @classmethod
    def _raw(cls, c: dict) -> LaurentPoly:
        """Wrap a dict already free of zero coefficients (no copy, no checks)."""
        obj = cls.__new__(cls)
        obj._c = c
        obj._hash = None
        return obj

    @classmethod
    def const(cls, n: int) -> LaurentPoly:
        return cls({0: n})

    @classmethod
    def monomial(cls, k: int, coeff: int = 1) -> LaurentPoly:
        return cls({k: coeff})

    @classmethod
    def q(cls) -> LaurentPoly:
        return cls({1: 1})

    @staticmethod
    def _lift(x) -> LaurentPoly:
        if isinstance(x, LaurentPoly):
            return x
        if isinstance(x, int):
            return LaurentPoly({0: x})
        return NotImplemented

    def items(self):
        return sorted(self._c.items())

    def as_dict(self) -> dict[int, int]:
        return dict(self._c)

    def __getitem__(self, k: int) -> int:
        return self._c.get(k, 0)

    def __bool__(self):
        return bool(self._c)

    def __eq__(self, other):
        other = LaurentPoly._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return self._c == other._c

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._c.items()))
        return self._hash

    def __add__(self, other):
        other = LaurentPoly._lift(other)
        if other is NotImplemented:
            return NotImplemented
        c = dict(self._c)
        for k, v in other._c.items():
            x = c.get(k, 0) + v
            if x:
                c[k] = x
            else:
                del c[k]
        return LaurentPoly._raw(c)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._raw({k: -v for k, v in self._c.items()})

    def __sub__(self, other):
        other = LaurentPoly._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return LaurentPoly._lift(other) - self

    def __mul__(self, other):
        other = LaurentPoly._lift(other)
        if other is NotImplemented:
            return NotImplemented
        c: dict[int, int] = {}
        for k1, v1 in self._c.items():
            for k2, v2 in other._c.items():
                c[k1 + k2] = c.get(k1 + k2, 0) + v1 * v2
        return LaurentPoly(c)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if len(self._c) == 1:
            (k, v), = self._c.items()
            if n < 0 and v not in (1, -1):
                raise ValueError("only monomials with unit coefficient are invertible")
            return LaurentPoly({k * n: v ** abs(n)})
        if n < 0:
            raise ValueError("negative power of a non-monomial")
        out = LaurentPoly.const(1)
        for _ in range(n):
            out = out * self
        return out

    def shift(self, k: int) -> LaurentPoly:
        """Multiply by ``q^k``."""
        return LaurentPoly._raw({e + k: v for e, v in self._c.items()}) if k else self

    def bar(self) -> LaurentPoly:
        return LaurentPoly._raw({-k: v for k, v in self._c.items()})

    def at_one(self) -> int:
        return sum(self._c.values())

    def is_nonnegative(self) -> bool:
        return all(v > 0 for v in self._c.values())

    def max_degree(self) -> int:
        return max(self._c)

    def min_degree(self) -> int:
        return min(self._c)

    def __repr__(self):
        return f"LaurentPoly({dict(self.items())})"

    def __str__(self):
        if not self._c:
            return "0"
        out = []
        for k, v in sorted(self._c.items(), reverse=True):
            mag = abs(v)
            if k == 0:
                body = str(mag)
            else:
                base = "q" if k == 1 else f"q^{k}"
                body = base if mag == 1 else f"{mag}{base}"
            sign = "-" if v < 0 else "+"
            out.append((sign, body))
        text = ("-" if out[0][0] == "-" else "") + out[0][1]
        for sign, body in out[1:]:
            text += sign + body
        return text

    def to_json(self) -> dict[str, int]:
        return {str(k): v for k, v in sorted(self._c.items())}

    @classmethod
    def from_json(cls, data: Mapping[str, int]) -> LaurentPoly:
        return cls({int(k): int(v) for k, v in data.items()})


def quantum_int(n: int) -> LaurentPoly:
    """``[n] = q^{n-1} + q^{n-3} + ... + q^{1-n}``."""
    if n < 0:
        raise ValueError("quantum integers are defined here for n >= 0")
    return LaurentPoly({n - 1 - 2 * k: 1 for k in range(n)})


def quantum_factorial(n: int) -> LaurentPoly:
    out = LaurentPoly.const(1)
    for k in range(1, n + 1):
        out = out * quantum_int(k)
    return out

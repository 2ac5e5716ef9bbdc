"""Convex preorders on positive roots, minimal pairs and root-sum decisions.

The built-in preorder puts ``m*delta + (finite root)`` above every imaginary
root, which sits above every ``m*delta - (finite root)``; inside each family the
interval start, then the multiplicity, then the interval end decide.

>>> p = PreorderSpec.erow(3)
>>> compare(p, PositiveRoot.plus(0, 1), PositiveRoot.plus(0, 1, 2))
<Cmp.GREATER: 1>
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Callable, Optional

from .errors import DomainError
from .root_system import PositiveRoot, RootVector, classify_root, height, positive_roots_up_to_height


class Cmp(enum.IntEnum):
    LESS = -1
    EQUIV = 0
    GREATER = 1


Comparator = Callable[[PositiveRoot, PositiveRoot], int]

_FAMILY = {"plus": 2, "imag": 1, "minus": 0}


def _sign(x: int) -> Cmp:
    return Cmp.GREATER if x > 0 else Cmp.LESS if x < 0 else Cmp.EQUIV


def erow_compare(r: PositiveRoot, s: PositiveRoot) -> Cmp:
    fr, fs = _FAMILY[r.kind], _FAMILY[s.kind]
    if fr != fs:
        return _sign(fr - fs)
    if r.kind == "imag":
        return Cmp.EQUIV
    if r.kind == "plus":
        # smaller i, then smaller m, then smaller j is higher
        key_r, key_s = (-r.i, -r.m, -r.j), (-s.i, -s.m, -s.j)
    else:
        key_r, key_s = (r.i, r.m, -r.j), (s.i, s.m, -s.j)
    return _sign((key_r > key_s) - (key_r < key_s))


@dataclass(frozen=True)
class PreorderSpec:
    """A preorder on the positive roots for a fixed ``e``.

    ``comparator=None`` selects the built-in e-row preorder.  A custom
    comparator returns a positive number when its first argument is higher.
    Custom comparators are checked for convexity and balance up to
    ``check_height`` on construction unless ``validate=False``.
    """

    e: int
    comparator: Optional[Comparator] = field(default=None, compare=False)
    name: str = "erow"
    check_height: int = 8
    validate: bool = field(default=True, compare=False)

    def __post_init__(self):
        if self.comparator is not None and self.validate:
            if not (check_convexity(self, self.check_height) and check_balanced(self, self.check_height)):
                raise DomainError(f"preorder {self.name!r} is not balanced and convex up to height {self.check_height}")

    @classmethod
    def erow(cls, e: int) -> PreorderSpec:
        return cls(e)

    @property
    def is_builtin(self) -> bool:
        return self.comparator is None


def compare(p: PreorderSpec, r: PositiveRoot, s: PositiveRoot) -> Cmp:
    """How ``r`` sits relative to ``s``: GREATER means ``r ≻ s``."""
    if p.comparator is None:
        return erow_compare(r, s)
    return _sign(p.comparator(r, s))


def _roots(p: PreorderSpec, h: int):
    return positive_roots_up_to_height(h, p.e)


def check_convexity(p: PreorderSpec, h: int) -> bool:
    """Totality, transitivity, proportional roots equivalent, and sums lying between summands."""
    roots = _roots(p, h)
    e = p.e
    table = {(r, s): compare(p, r, s) for r in roots for s in roots}
    for r in roots:
        for s in roots:
            c = table[(r, s)]
            if table[(s, r)] != -c:
                return False
            proportional = r.kind == s.kind == "imag" or r == s
            if proportional != (c == Cmp.EQUIV):
                return False
    for r in roots:
        for s in roots:
            if table[(r, s)] < 0:
                continue
            for t in roots:
                if table[(s, t)] >= 0 and table[(r, t)] < 0:
                    return False
    for r in roots:
        vr = r.vector(e)
        for s in roots:
            if table[(r, s)] > 0:
                continue
            total = classify_root(vr + s.vector(e))
            if total is None or total.height(e) > h:
                continue
            # r ⪯ s  must give  r ⪯ r+s ⪯ s
            if table[(r, total)] > 0 or table[(total, s)] > 0:
                return False
    return True


def check_balanced(p: PreorderSpec, h: int) -> bool:
    delta = PositiveRoot.imaginary(1)
    for r in _roots(p, h):
        if not r.is_real:
            continue
        c = compare(p, r, delta)
        if c == Cmp.EQUIV:
            return False
        if (c == Cmp.GREATER) != (r.kind == "plus"):
            return False
    return True


@dataclass(frozen=True)
class MinimalPair:
    beta: PositiveRoot
    gamma: PositiveRoot

    @property
    def real(self) -> bool:
        return self.beta.is_real and self.gamma.is_real


def _splits(p: PreorderSpec, rho: PositiveRoot) -> list[tuple[PositiveRoot, PositiveRoot]]:
    e = p.e
    v = rho.vector(e)
    out = []
    for beta in _roots(p, rho.height(e) - 1):
        rest = v - beta.vector(e)
        if not rest.is_nonnegative() or rest.is_zero():
            continue
        gamma = classify_root(rest)
        if gamma is not None and compare(p, beta, rho) == Cmp.GREATER:
            out.append((beta, gamma))
    return out


def minimal_pairs(p: PreorderSpec, rho: PositiveRoot) -> list[MinimalPair]:
    """All minimal pairs for a real root, ordered by the root order of ``beta``."""
    if not rho.is_real:
        raise DomainError(f"minimal pairs are defined for real roots, got {rho.spelling()}")
    cands = _splits(p, rho)
    out = []
    for beta, gamma in cands:
        if all(compare(p, b2, beta) == Cmp.GREATER or compare(p, g2, gamma) == Cmp.LESS
               for b2, g2 in cands if (b2, g2) != (beta, gamma)):
            out.append(MinimalPair(beta, gamma))
    return out


def p_max(beta: PositiveRoot, gamma: PositiveRoot, e: int) -> int:
    """Largest ``n >= 0`` with ``beta - n*gamma`` a positive root."""
    vb, vg = beta.vector(e), gamma.vector(e)
    cap = beta.height(e) + 1
    best = 0
    for n in range(1, cap + 1):
        v = vb - vg * n
        if not v.is_nonnegative():
            return best
        if not v.is_zero() and classify_root(v) is not None:
            best = n
    raise RuntimeError(f"p_max iteration cap exceeded for {beta.spelling()}, {gamma.spelling()}")


def is_sum_of_roots(v: RootVector, pred: Callable[[PositiveRoot], bool]) -> bool:
    """Whether ``v`` is a (possibly empty) sum of positive roots satisfying ``pred``."""
    return RootSumOracle(v.e, pred)(v)


class RootSumOracle:
    """Memoized decision procedure for 'is a sum of qualifying roots'.

    Roots are tried in a fixed order and each decomposition is searched with
    nonincreasing root index, so every multiset is visited once.
    """

    def __init__(self, e: int, pred: Callable[[PositiveRoot], bool]):
        self.e = e
        self.pred = pred
        self._roots: list[tuple[int, ...]] = []
        self._height = 0
        self._memo: dict[tuple[tuple[int, ...], int], bool] = {}

    def _ensure(self, h: int) -> None:
        if h > self._height:
            self._roots = [r.vector(self.e).coeffs for r in positive_roots_up_to_height(h, self.e)
                           if self.pred(r)]
            self._height = h
            self._memo.clear()

    def __call__(self, v: RootVector) -> bool:
        if v.is_zero():
            return True
        self._ensure(height(v))
        return self._search(v.coeffs, len(self._roots))

    def _search(self, v: tuple[int, ...], limit: int) -> bool:
        if not any(v):
            return True
        key = (v, limit)
        got = self._memo.get(key)
        if got is not None:
            return got
        ans = False
        for k in range(limit):
            r = self._roots[k]
            rest = tuple(a - b for a, b in zip(v, r))
            if min(rest) >= 0 and self._search(rest, k + 1):
                ans = True
                break
        self._memo[key] = ans
        return ans

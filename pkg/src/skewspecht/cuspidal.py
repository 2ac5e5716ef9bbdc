"""Cuspidal modules for real roots, identified as shifted skew hook Specht modules.

Roots ``m*delta ± alpha_i`` (and simple roots) have explicit shapes.  Any other
real root is split along a real minimal pair; the two smaller answers are
placed side by side as a two-component shape, and whichever ordering is
joinable is glued into one skew hook.

>>> from .root_system import parse_root
>>> r = cuspidal_shape(parse_root("a1+a2", 3), PreorderSpec.erow(3))
>>> r.shape.outer, r.shape.charge, r.shift, str(r.character)
(((1, 1),), (2,), 0, '(2 1)')
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .characters import GradedCharacter, join_report, shuffle_product, specht_character
from .diagrams import SkewShape, is_joinable, shape_minus, shape_plus
from .errors import DomainError
from .preorders import Cmp, MinimalPair, PreorderSpec, RootSumOracle, compare, minimal_pairs, p_max
from .root_system import PositiveRoot, RootVector, bilinear_form, parse_root, positive_roots_up_to_height


@dataclass(frozen=True)
class CuspidalResult:
    root: PositiveRoot
    shape: SkewShape
    shift: int
    case: str = "base"                      # base | plus | minus | join_right | join_above
    pair: Optional[MinimalPair] = None

    @property
    def character(self) -> GradedCharacter:
        return specht_character(self.shape).shift(self.shift)

    def to_json(self) -> dict:
        return {"root": self.root.spelling(), "shape": self.shape.to_json(), "shift": self.shift,
                "case": self.case, "character": self.character.to_json(),
                "pair": None if self.pair is None else [self.pair.beta.spelling(), self.pair.gamma.spelling()]}

    @classmethod
    def from_json(cls, data: dict) -> CuspidalResult:
        """Rebuild from ``to_json`` output; the stored character must agree with the shape."""
        shape = SkewShape.from_json(data["shape"])
        e = shape.e
        pair = data.get("pair")
        if pair is not None:
            pair = MinimalPair(parse_root(pair[0], e), parse_root(pair[1], e))
        out = cls(parse_root(data["root"], e), shape, int(data["shift"]), data.get("case", "base"), pair)
        if out.character != GradedCharacter.from_json(data["character"]):
            raise DomainError(f"stored character does not match {shape} shifted by {out.shift}")
        return out


_MEMO: dict[tuple, CuspidalResult] = {}


def _memo_key(p: PreorderSpec, alpha: PositiveRoot):
    return (p.e, p.name, id(p.comparator) if p.comparator else None, alpha)


def _simple_index(alpha: PositiveRoot, e: int) -> Optional[int]:
    if alpha.height(e) != 1:
        return None
    return alpha.i if alpha.kind == "plus" else 0


def _direct(alpha: PositiveRoot, e: int) -> Optional[CuspidalResult]:
    i = _simple_index(alpha, e)
    if i is not None:
        return CuspidalResult(alpha, SkewShape.level1((1,), (), i, e), 0, "base")
    if alpha.i == alpha.j:
        if alpha.kind == "plus":
            return CuspidalResult(alpha, shape_plus(alpha.m, alpha.i, e), 0, "plus")
        return CuspidalResult(alpha, shape_minus(alpha.m, alpha.i, e), 1 - alpha.m, "minus")
    return None


def _check_preorder(p: PreorderSpec) -> None:
    if p.comparator is not None and not p.validate:
        raise DomainError(f"preorder {p.name!r} was built without validation")


def join_pair(alpha: PositiveRoot, p: PreorderSpec, pair: MinimalPair) -> Optional[CuspidalResult]:
    """Glue the answers for a real minimal pair; None when neither ordering is joinable."""
    e = p.e
    rb, rg = cuspidal_shape(pair.beta, p), cuspidal_shape(pair.gamma, p)
    pb = p_max(pair.beta, pair.gamma, e)
    form = bilinear_form(pair.beta.vector(e), pair.gamma.vector(e))

    def two(first: CuspidalResult, second: CuspidalResult) -> SkewShape:
        return SkewShape((first.shape.outer[0], second.shape.outer[0]),
                         (first.shape.inner[0], second.shape.inner[0]),
                         (first.shape.charge[0], second.shape.charge[0]), e)

    s = two(rb, rg)
    if is_joinable(s):
        rep = join_report(s)
        if not rep.ok:
            raise RuntimeError(f"join identity failed for {s}")
        c = rb.shift + rg.shift - pb + form + rep.d_right - rep.d_shift
        return CuspidalResult(alpha, rep.right, c, "join_right", pair)
    s = two(rg, rb)
    if is_joinable(s):
        rep = join_report(s)
        if not rep.ok:
            raise RuntimeError(f"join identity failed for {s}")
        c = rb.shift + rg.shift + pb + rep.d_above - rep.d_shift
        return CuspidalResult(alpha, rep.above, c, "join_above", pair)
    return None


def cuspidal_shape(alpha: PositiveRoot, p: PreorderSpec) -> CuspidalResult:
    if not alpha.is_real:
        raise DomainError(f"cuspidal shapes are produced for real roots only, got {alpha.spelling()}")
    _check_preorder(p)
    key = _memo_key(p, alpha)
    got = _MEMO.get(key)
    if got is not None:
        return got
    e = p.e
    result = _direct(alpha, e)
    if result is None:
        pairs = [mp for mp in minimal_pairs(p, alpha) if mp.real]
        if not pairs:
            raise DomainError(f"no real minimal pair for {alpha.spelling()} (e={e})")
        for mp in sorted(pairs, key=lambda mp: mp.beta.sort_key(e)):
            result = join_pair(alpha, p, mp)
            if result is not None:
                break
        else:
            raise RuntimeError(f"no joinable composition for {alpha.spelling()} (e={e})")
    _MEMO[key] = result
    return result


def cuspidal_table(p: PreorderSpec, h: int) -> list[CuspidalResult]:
    return [cuspidal_shape(r, p) for r in positive_roots_up_to_height(h, p.e) if r.is_real]


def _oracles(alpha: PositiveRoot, p: PreorderSpec, semi: bool):
    if semi:
        below = RootSumOracle(p.e, lambda r: compare(p, r, alpha) != Cmp.GREATER)
        above = RootSumOracle(p.e, lambda r: compare(p, r, alpha) != Cmp.LESS)
    else:
        below = RootSumOracle(p.e, lambda r: compare(p, r, alpha) == Cmp.LESS)
        above = RootSumOracle(p.e, lambda r: compare(p, r, alpha) == Cmp.GREATER)
    return below, above


def _cuspidal_test(x: GradedCharacter, alpha: PositiveRoot, p: PreorderSpec, semi: bool) -> bool:
    e = p.e
    target = alpha.vector(e)
    if x.content != target:
        raise DomainError(f"content {x.content.coeffs} differs from {alpha.spelling()} = {target.coeffs}")
    below, above = _oracles(alpha, p, semi)
    seen: dict[tuple[int, ...], bool] = {}
    for w in x.words():
        counts = [0] * e
        for cut in range(1, len(w)):
            counts[w[cut - 1]] += 1
            pre = tuple(counts)
            ok = seen.get(pre)
            if ok is None:
                suf = tuple(a - b for a, b in zip(target.coeffs, pre))
                ok = below(RootVector(pre)) and above(RootVector(suf))
                seen[pre] = ok
            if not ok:
                return False
    return True


def is_cuspidal_character(x: GradedCharacter, alpha: PositiveRoot, p: PreorderSpec) -> bool:
    return _cuspidal_test(x, alpha, p, semi=False)


def is_semicuspidal_character(x: GradedCharacter, alpha: PositiveRoot, p: PreorderSpec) -> bool:
    return _cuspidal_test(x, alpha, p, semi=True)


@dataclass(frozen=True)
class PairIdentity:
    residual: GradedCharacter     # ch(L_beta ∘ L_gamma) - q^{p-(beta,gamma)} ch L_rho
    identity_ok: bool

    @property
    def ok(self) -> bool:
        return self.identity_ok and self.residual.is_nonnegative()


def minimal_pair_identity(rho: PositiveRoot, beta: PositiveRoot, gamma: PositiveRoot,
                          p: PreorderSpec) -> PairIdentity:
    pair = MinimalPair(beta, gamma)
    if not pair.real or pair not in minimal_pairs(p, rho):
        raise DomainError(f"({beta.spelling()}, {gamma.spelling()}) is not a real minimal pair "
                          f"for {rho.spelling()}")
    e = p.e
    lb = cuspidal_shape(beta, p).character
    lg = cuspidal_shape(gamma, p).character
    lr = cuspidal_shape(rho, p).character
    pb = p_max(beta, gamma, e)
    form = bilinear_form(beta.vector(e), gamma.vector(e))
    forward = shuffle_product(lb, lg)
    backward = shuffle_product(lg, lb)
    residual = forward - lr.shift(pb - form)
    rebuilt = residual.shift(-form) + lr.shift(-pb)
    return PairIdentity(residual, backward == rebuilt)


def verify_minimal_pair_identity(rho: PositiveRoot, beta: PositiveRoot, gamma: PositiveRoot,
                                 p: PreorderSpec) -> bool:
    return minimal_pair_identity(rho, beta, gamma, p).ok


def clear_cache() -> None:
    _MEMO.clear()


__all__ = [
    "CuspidalResult", "cuspidal_shape", "cuspidal_table", "is_cuspidal_character",
    "is_semicuspidal_character", "verify_minimal_pair_identity", "minimal_pair_identity",
    "join_pair",
]

"""Graded characters: Specht characters, quantum shuffles, restriction and extremal words.

A graded character is a finite map from residue words to Laurent polynomials,
together with the content it lives in.

>>> from .diagrams import SkewShape
>>> str(specht_character(SkewShape.level1((2, 1), (), 0, 2)))
'(q+q^-1)*(0 1 1)'
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Mapping, Optional

from .diagrams import (Node, SkewShape, content, is_joinable, join_above, join_right,
                       submultipartitions, tau_above, tau_right)
from .errors import DomainError
from .laurent import LaurentPoly, quantum_factorial, quantum_int
from .root_system import RootVector, cartan_pairing, weight_pairing
from .tableaux import (chain_total, degree, edge_degrees, enumerate_standard_data,
                       ideal_masks, leading_tableau)

__all__ = [
    "GradedCharacter", "LaurentPoly", "specht_character", "shuffle_product", "restrict",
    "tensor", "bar_involution", "theta_star", "epsilon", "extremal_word", "quantum_int",
    "quantum_factorial", "check_restriction_filtration", "check_join_identity", "join_report",
]

Word = tuple[int, ...]
TensorCharacter = dict[tuple[Word, Word], LaurentPoly]


class GradedCharacter:
    """Immutable formal sum of words with Laurent polynomial coefficients."""

    __slots__ = ("content", "_terms", "_hash")

    def __init__(self, content: RootVector, terms: Optional[Mapping[Word, LaurentPoly]] = None):
        self.content = content
        clean = {}
        for w, p in (terms or {}).items():
            p = LaurentPoly._lift(p)
            if p:
                w = tuple(w)
                if RootVector.from_letters(w, content.e) != content:
                    raise DomainError(f"word {w} does not have content {content.coeffs}")
                clean[w] = p
        self._terms = clean
        self._hash = None

    @classmethod
    def _trusted(cls, content: RootVector, terms: dict) -> GradedCharacter:
        obj = cls.__new__(cls)
        obj.content = content
        obj._terms = {w: p for w, p in terms.items() if p}
        obj._hash = None
        return obj

    @classmethod
    def zero(cls, content: RootVector) -> GradedCharacter:
        return cls._trusted(content, {})

    @classmethod
    def unit(cls, e: int) -> GradedCharacter:
        """The character of the trivial module in content 0: the empty word."""
        return cls._trusted(RootVector.zero(e), {(): LaurentPoly.const(1)})

    @classmethod
    def word(cls, w: Iterable[int], e: int, coeff=1) -> GradedCharacter:
        w = tuple(w)
        return cls(RootVector.from_letters(w, e), {w: LaurentPoly._lift(coeff)})

    @property
    def e(self) -> int:
        return self.content.e

    @property
    def terms(self) -> dict[Word, LaurentPoly]:
        return dict(self._terms)

    def items(self):
        return sorted(self._terms.items())

    def words(self) -> list[Word]:
        return sorted(self._terms)

    def __getitem__(self, w) -> LaurentPoly:
        return self._terms.get(tuple(w), LaurentPoly())

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if not isinstance(other, GradedCharacter):
            return NotImplemented
        return self.content == other.content and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.content, frozenset(self._terms.items())))
        return self._hash

    def _check(self, other: GradedCharacter) -> None:
        if self.content != other.content:
            raise DomainError(f"content mismatch: {self.content.coeffs} vs {other.content.coeffs}")

    def __add__(self, other: GradedCharacter) -> GradedCharacter:
        self._check(other)
        out = dict(self._terms)
        for w, p in other._terms.items():
            out[w] = out[w] + p if w in out else p
        return GradedCharacter._trusted(self.content, out)

    def __neg__(self):
        return GradedCharacter._trusted(self.content, {w: -p for w, p in self._terms.items()})

    def __sub__(self, other: GradedCharacter) -> GradedCharacter:
        return self + (-other)

    def scale(self, f) -> GradedCharacter:
        f = LaurentPoly._lift(f)
        return GradedCharacter._trusted(self.content, {w: p * f for w, p in self._terms.items()})

    def shift(self, k: int) -> GradedCharacter:
        """Multiply by ``q^k``."""
        if not k:
            return self
        return GradedCharacter._trusted(self.content, {w: p.shift(k) for w, p in self._terms.items()})

    def bar(self) -> GradedCharacter:
        return GradedCharacter._trusted(self.content, {w: p.bar() for w, p in self._terms.items()})

    def relabel(self, c: int) -> GradedCharacter:
        """Add ``c`` to every letter (mod e)."""
        e = self.e
        coeffs = self.content.coeffs
        new_content = RootVector(tuple(coeffs[(k - c) % e] for k in range(e)))
        return GradedCharacter._trusted(
            new_content, {tuple((x + c) % e for x in w): p for w, p in self._terms.items()})

    def is_nonnegative(self) -> bool:
        return all(p.is_nonnegative() for p in self._terms.values())

    def dimension(self) -> LaurentPoly:
        out = LaurentPoly()
        for p in self._terms.values():
            out = out + p
        return out

    def __repr__(self):
        return f"GradedCharacter({self.content.coeffs}, {len(self._terms)} words)"

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for w, p in self.items():
            body = "(" + " ".join(map(str, w)) + ")"
            parts.append(body if p == 1 else f"({p})*{body}")
        return " + ".join(parts)

    def to_json(self) -> dict:
        return {"content": list(self.content.coeffs),
                "terms": [{"word": list(w), "poly": p.to_json()} for w, p in self.items()]}

    @classmethod
    def from_json(cls, data: Mapping) -> GradedCharacter:
        content_v = RootVector(tuple(data["content"]))
        return cls(content_v, {tuple(t["word"]): LaurentPoly.from_json(t["poly"]) for t in data["terms"]})


@lru_cache(maxsize=4096)
def specht_character(shape: SkewShape) -> GradedCharacter:
    """Sum of ``q^{deg t} i(t)`` over standard tableaux, computed over the lattice of order ideals.

    Suffix words are packed as base-e integers while the lattice is walked.
    """
    nodes = shape.nodes
    d = len(nodes)
    need = ideal_masks(shape)
    res = shape.residues
    degs = edge_degrees(shape)
    e = shape.e
    full = (1 << d) - 1
    powers = [e ** n for n in range(d + 1)]
    memo: dict[int, dict[int, dict[int, int]]] = {full: {0: {0: 1}}}

    def suffixes(mask: int, remaining: int) -> dict[int, dict[int, int]]:
        got = memo.get(mask)
        if got is not None:
            return got
        out: dict[int, dict[int, int]] = {}
        place = powers[remaining - 1]
        for k in range(d):
            if mask >> k & 1 or need[k] & ~mask:
                continue
            step = degs[(mask, k)]
            head = res[k] * place
            for w, poly in suffixes(mask | 1 << k, remaining - 1).items():
                key = head + w
                target = out.get(key)
                if target is None:
                    out[key] = {ex + step: c for ex, c in poly.items()}
                else:
                    for ex, c in poly.items():
                        target[ex + step] = target.get(ex + step, 0) + c
        memo[mask] = out
        return out

    terms = {}
    for code, poly in suffixes(0, d).items():
        word = []
        for _ in range(d):
            code, x = divmod(code, e)
            word.append(x)
        poly = {ex: c for ex, c in poly.items() if c}
        if poly:
            terms[tuple(reversed(word))] = LaurentPoly._raw(poly)
    return GradedCharacter._trusted(content(shape), terms)


def specht_character_by_tableaux(shape: SkewShape) -> GradedCharacter:
    """Reference route: one term per enumerated standard tableau."""
    acc: dict[Word, dict[int, int]] = {}
    for _, deg, word in enumerate_standard_data(shape):
        slot = acc.setdefault(word, {})
        slot[deg] = slot.get(deg, 0) + 1
    return GradedCharacter._trusted(content(shape), {w: LaurentPoly(p) for w, p in acc.items()})


@lru_cache(maxsize=200_000)
def _shuffles(u: Word, v: Word, e: int) -> dict[Word, dict[int, int]]:
    """Interleavings of u and v with their crossing exponents (multiplicities kept)."""
    if not u:
        return {v: {0: 1}}
    if not v:
        return {u: {0: 1}}
    out: dict[Word, dict[int, int]] = {}
    head = (u[0],)
    for w, exps in _shuffles(u[1:], v, e).items():
        slot = out.setdefault(head + w, {})
        for ex, c in exps.items():
            slot[ex] = slot.get(ex, 0) + c
    b = v[0]
    # v[0] jumps ahead of every remaining letter of u
    cost = -sum(cartan_pairing(a, b, e) for a in u)
    head = (b,)
    for w, exps in _shuffles(u, v[1:], e).items():
        slot = out.setdefault(head + w, {})
        for ex, c in exps.items():
            slot[ex + cost] = slot.get(ex + cost, 0) + c
    return out


def shuffle_product(x: GradedCharacter, y: GradedCharacter) -> GradedCharacter:
    """Character of the induction product ``x ∘ y``."""
    if x.e != y.e:
        raise DomainError("shuffle of characters with different e")
    e = x.e
    acc: dict[Word, dict[int, int]] = {}
    for u, p in x._terms.items():
        for v, r in y._terms.items():
            pr = (p * r).as_dict()
            for w, exps in _shuffles(u, v, e).items():
                slot = acc.setdefault(w, {})
                for ex, c in exps.items():
                    for ex2, c2 in pr.items():
                        slot[ex + ex2] = slot.get(ex + ex2, 0) + c * c2
    return GradedCharacter._trusted(x.content + y.content, {w: LaurentPoly(p) for w, p in acc.items()})


def tensor(x: GradedCharacter, y: GradedCharacter) -> TensorCharacter:
    out: TensorCharacter = {}
    for u, p in x._terms.items():
        for v, r in y._terms.items():
            out[(u, v)] = p * r
    return out


def add_tensors(a: TensorCharacter, b: TensorCharacter) -> TensorCharacter:
    out = dict(a)
    for k, p in b.items():
        out[k] = out[k] + p if k in out else p
    return {k: p for k, p in out.items() if p}


def restrict(x: GradedCharacter, alpha: RootVector, beta: RootVector) -> TensorCharacter:
    if alpha + beta != x.content:
        raise DomainError(f"split {alpha.coeffs} + {beta.coeffs} does not match content {x.content.coeffs}")
    n = sum(alpha.coeffs)
    out: TensorCharacter = {}
    for w, p in x._terms.items():
        if RootVector.from_letters(w[:n], x.e) == alpha:
            out[(w[:n], w[n:])] = p
    return out


def bar_involution(x: GradedCharacter) -> GradedCharacter:
    return x.bar()


def theta_star(x: GradedCharacter, i: int) -> GradedCharacter:
    """Delete words not ending in ``i`` and drop the final ``i`` from the rest."""
    e = x.e
    i %= e
    if x.content[i] == 0:
        return GradedCharacter.zero(x.content)
    new_content = x.content - RootVector.simple(i, e)
    return GradedCharacter._trusted(new_content, {w[:-1]: p for w, p in x._terms.items()
                                                  if w and w[-1] == i})


def epsilon(x: GradedCharacter, i: int) -> int:
    """Longest trailing run of ``i`` over the words of ``x``."""
    return _epsilon(x, i % x.e)


def _epsilon(x: GradedCharacter, i: int) -> int:
    best = 0
    for w in x._terms:
        k = 0
        while k < len(w) and w[len(w) - 1 - k] == i:
            k += 1
        best = max(best, k)
    return best


@dataclass(frozen=True)
class ExtremalWord:
    runs: tuple[tuple[int, int], ...]   # (letter, multiplicity), left to right
    dim: LaurentPoly

    @property
    def word(self) -> Word:
        return tuple(x for x, n in self.runs for _ in range(n))

    def spelling(self) -> str:
        return " ".join(f"{x}^{n}" for x, n in self.runs)


def extremal_word(x: GradedCharacter, letter_order: Optional[Iterable[int]] = None) -> ExtremalWord:
    """Strip maximal runs from the right, at each step taking the letter with the longest run.

    Ties go to the first letter in ``letter_order`` (default ``0..e-1``).
    The returned ``dim`` is the coefficient of the extremal word in ``x``.
    """
    if not x:
        raise DomainError("extremal word of the zero character")
    order = list(range(x.e)) if letter_order is None else list(letter_order)
    runs = []
    cur = x
    while any(cur.content.coeffs):
        best, best_n = None, 0
        for i in order:
            n = _epsilon(cur, i)
            if n > best_n:
                best, best_n = i, n
        if best is None:
            raise DomainError("character has no words")
        for _ in range(best_n):
            cur = theta_star(cur, best)
        runs.append((best, best_n))
    runs.reverse()
    word = tuple(c for c, n in runs for _ in range(n))
    return ExtremalWord(tuple(runs), x[word])


def check_restriction_filtration(lam, charge, e: int, alpha: RootVector, beta: RootVector) -> bool:
    """Restriction of ``ch S^λ`` to the split ``(alpha, beta)`` against the sum over subshapes."""
    lam = tuple(tuple(c) for c in lam)
    charge = tuple(charge)
    full = SkewShape.partition(lam, charge, e)
    ch = specht_character(full)
    lhs = restrict(ch, alpha, beta)
    rhs: TensorCharacter = {}
    for mu in submultipartitions(lam):
        sub = SkewShape.partition(mu, charge, e)
        if content(sub) != alpha:
            continue
        skew = SkewShape(lam, mu, charge, e)
        rhs = add_tensors(rhs, tensor(specht_character(sub), specht_character(skew)))
    return lhs == rhs


@dataclass(frozen=True)
class JoinReport:
    shape: SkewShape
    above: SkewShape
    right: SkewShape
    d_above: int        # d*
    d_right: int        # d_*
    d_shift: int        # deg t^{λ/μ} - deg t^{(1)} - deg t^{(2)}
    split_ok: bool
    shuffle_ok: bool
    bijection_ok: bool

    @property
    def ok(self) -> bool:
        return self.split_ok and self.shuffle_ok and self.bijection_ok


def _closure(n: int, edges) -> frozenset:
    reach = [set() for _ in range(n)]
    for a, b in edges:
        reach[a].add(b)
    changed = True
    while changed:
        changed = False
        for a in range(n):
            extra = set()
            for b in reach[a]:
                extra |= reach[b]
            if not extra <= reach[a]:
                reach[a] |= extra
                changed = True
    return frozenset((a, b) for a in range(n) for b in reach[a])


def _poset_edges(shape: SkewShape) -> list[tuple[int, int]]:
    need = ideal_masks(shape)
    return [(j, k) for k in range(shape.size) for j in range(shape.size) if need[k] >> j & 1]


def _degree_transfer(shape: SkewShape, joined: SkewShape, tau, first: Node, second: Node,
                     expected: int) -> bool:
    """Tableaux of ``shape`` filling ``first`` before ``second`` correspond to standard tableaux of
    ``joined`` through ``tau`` and lose exactly ``expected`` in degree."""
    n = shape.size
    to_joined = [joined.index[tau(shape, node)] for node in shape.nodes]
    from_joined = [0] * n
    for k, j in enumerate(to_joined):
        from_joined[j] = k
    if any(joined.residue(tau(shape, nd)) != shape.residue(nd) for nd in shape.nodes):
        return False
    # the joined poset is the skew poset plus the relation first < second
    src = _poset_edges(shape) + [(shape.index[first], shape.index[second])]
    mapped = [(to_joined[a], to_joined[b]) for a, b in src]
    if _closure(n, mapped) != _closure(n, _poset_edges(joined)):
        return False
    s_degs, j_degs = edge_degrees(shape), edge_degrees(joined)

    def step(mask: int, k: int) -> int:
        s_mask = 0
        for j in range(n):
            if mask >> j & 1:
                s_mask |= 1 << from_joined[j]
        return s_degs[(s_mask, from_joined[k])] - j_degs[(mask, k)]

    return chain_total(joined, step) == expected


def join_report(shape: SkewShape) -> JoinReport:
    if not is_joinable(shape):
        raise DomainError(f"shape is not joinable: {shape}")
    above, right = join_above(shape), join_right(shape)
    x1 = len(shape.outer[0])
    y2 = shape.outer[1][0]
    i = shape.residue(Node(1, y2, 2))
    cont1 = content(shape.component(1))
    d_a = weight_pairing(i, cont1)
    d_r = weight_pairing((i + 1) % shape.e, cont1)
    c1, c2 = shape.component(1), shape.component(2)
    d_shift = (degree(leading_tableau(shape)) - degree(leading_tableau(c1))
               - degree(leading_tableau(c2)))
    ch = specht_character(shape)
    split = specht_character(above).shift(d_a) + specht_character(right).shift(d_r)
    shuffled = shuffle_product(specht_character(c1), specht_character(c2)).shift(d_shift)
    p, q = Node(x1, 1, 1), Node(1, y2, 2)
    bij = (_degree_transfer(shape, above, tau_above, p, q, d_a)
           and _degree_transfer(shape, right, tau_right, q, p, d_r))
    return JoinReport(shape, above, right, d_a, d_r, d_shift, ch == split, ch == shuffled, bij)


def check_join_identity(shape: SkewShape) -> bool:
    return join_report(shape).ok

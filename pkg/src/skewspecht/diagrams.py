"""Charged multipartitions, skew diagrams and their residues.

Nodes are ``(row, col, comp)`` triples, all 1-based.  The reading order of a
skew shape (the order in which the leading tableau is filled) is component,
then row, then column.

>>> s = SkewShape.level1((2, 1), (), charge=0, e=2)
>>> [s.residue(n) for n in s.nodes]
[0, 1, 1]
>>> content(s)
RootVector((1, 2))
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, NamedTuple, Optional, Sequence

from .errors import DomainError, ParseError
from .root_system import RootVector, check_e

Partition = tuple[int, ...]
Multipartition = tuple[Partition, ...]


class Node(NamedTuple):
    row: int
    col: int
    comp: int = 1

    def reading_key(self):
        return (self.comp, self.row, self.col)


def _norm_partition(p: Sequence[int]) -> Partition:
    p = tuple(int(x) for x in p)
    if any(x < 0 for x in p):
        raise DomainError(f"negative part in {p}")
    if any(p[k] < p[k + 1] for k in range(len(p) - 1)):
        raise DomainError(f"{p} is not weakly decreasing")
    while p and p[-1] == 0:
        p = p[:-1]
    return p


def _norm_multi(p, level: int) -> Multipartition:
    comps = tuple(_norm_partition(c) for c in p)
    if len(comps) < level:
        comps = comps + ((),) * (level - len(comps))
    return comps


def _row(p: Partition, r: int) -> int:
    return p[r - 1] if 1 <= r <= len(p) else 0


@dataclass(frozen=True)
class SkewShape:
    """A skew diagram ``outer/inner`` with a multicharge."""

    outer: Multipartition
    inner: Multipartition
    charge: tuple[int, ...]
    e: int

    def __post_init__(self):
        check_e(self.e)
        charge = tuple(int(k) % self.e for k in self.charge)
        if not charge:
            raise DomainError("multicharge must be nonempty")
        level = len(charge)
        outer = _norm_multi(self.outer, level)
        inner = _norm_multi(self.inner, level)
        if len(outer) != level or len(inner) != level:
            raise DomainError(
                f"component count mismatch: outer {len(outer)}, inner {len(inner)}, charge {level}")
        for lam, mu in zip(outer, inner):
            if len(mu) > len(lam) or any(m > l for m, l in zip(mu, lam)):
                raise DomainError(f"inner {mu} is not contained in outer {lam}")
        object.__setattr__(self, "outer", outer)
        object.__setattr__(self, "inner", inner)
        object.__setattr__(self, "charge", charge)

    @classmethod
    def level1(cls, outer: Sequence[int], inner: Sequence[int] = (), charge: int = 0,
               e: int = 2) -> SkewShape:
        return cls((tuple(outer),), (tuple(inner),), (charge,), e)

    @classmethod
    def partition(cls, outer, charge, e) -> SkewShape:
        """A multipartition, i.e. a skew shape with empty inner part."""
        charge = tuple(charge)
        return cls(tuple(tuple(c) for c in outer), ((),) * len(charge), charge, e)

    @property
    def level(self) -> int:
        return len(self.charge)

    @cached_property
    def nodes(self) -> tuple[Node, ...]:
        out = []
        for m, (lam, mu) in enumerate(zip(self.outer, self.inner), start=1):
            for r, length in enumerate(lam, start=1):
                for c in range(_row(mu, r) + 1, length + 1):
                    out.append(Node(r, c, m))
        return tuple(out)

    @cached_property
    def index(self) -> dict[Node, int]:
        """Position of each node in reading order (0-based)."""
        return {n: k for k, n in enumerate(self.nodes)}

    @property
    def size(self) -> int:
        return len(self.nodes)

    def in_outer(self, node: Node) -> bool:
        a, b, m = node
        return 1 <= m <= self.level and a >= 1 and 1 <= b <= _row(self.outer[m - 1], a)

    def __contains__(self, node) -> bool:
        return node in self.index

    def residue(self, node: Node) -> int:
        if not self.in_outer(node):
            raise DomainError(f"node {tuple(node)} is not in the outer diagram of {self}")
        a, b, m = node
        return (self.charge[m - 1] + b - a) % self.e

    @cached_property
    def residues(self) -> tuple[int, ...]:
        """Residues in reading order; this is the residue word of the leading tableau."""
        return tuple((self.charge[m - 1] + b - a) % self.e for a, b, m in self.nodes)

    def outer_shape(self) -> SkewShape:
        return SkewShape(self.outer, ((),) * self.level, self.charge, self.e)

    def inner_shape(self) -> SkewShape:
        return SkewShape(self.inner, ((),) * self.level, self.charge, self.e)

    def component(self, m: int) -> SkewShape:
        """Component ``m`` (1-based) as a level-1 skew shape."""
        return SkewShape((self.outer[m - 1],), (self.inner[m - 1],), (self.charge[m - 1],), self.e)

    def spelling(self) -> str:
        def multi(p):
            return "|".join(",".join(str(x) for x in c) for c in p)
        inner = "" if not any(self.inner) else multi(self.inner)
        return (f"outer={multi(self.outer)};inner={inner};"
                f"charge={','.join(map(str, self.charge))};e={self.e}")

    def __str__(self):
        return self.spelling()

    def to_json(self) -> dict:
        return {"outer": [list(c) for c in self.outer], "inner": [list(c) for c in self.inner],
                "charge": list(self.charge), "e": self.e}

    @classmethod
    def from_json(cls, data) -> SkewShape:
        return cls(tuple(tuple(c) for c in data["outer"]), tuple(tuple(c) for c in data["inner"]),
                   tuple(data["charge"]), data["e"])


def residue(shape: SkewShape, node: Node) -> int:
    return shape.residue(Node(*node))


def content(shape: SkewShape) -> RootVector:
    return RootVector.from_letters(shape.residues, shape.e)


def _addable_in(p: Partition) -> list[tuple[int, int]]:
    out = []
    for r in range(1, len(p) + 2):
        if r == 1 or _row(p, r - 1) > _row(p, r):
            out.append((r, _row(p, r) + 1))
    return out


def _removable_in(p: Partition) -> list[tuple[int, int]]:
    return [(r, p[r - 1]) for r in range(1, len(p) + 1) if _row(p, r + 1) < p[r - 1]]


def addable_nodes(p: Multipartition, charge, e: int, i: Optional[int] = None) -> list[Node]:
    """Addable nodes of residue ``i`` (all residues when ``i`` is None), top to bottom."""
    out = []
    for m, (comp, k) in enumerate(zip(p, charge), start=1):
        for a, b in _addable_in(tuple(comp)):
            if i is None or (k + b - a) % e == i % e:
                out.append(Node(a, b, m))
    return out


def removable_nodes(p: Multipartition, charge, e: int, i: Optional[int] = None) -> list[Node]:
    out = []
    for m, (comp, k) in enumerate(zip(p, charge), start=1):
        for a, b in _removable_in(tuple(comp)):
            if i is None or (k + b - a) % e == i % e:
                out.append(Node(a, b, m))
    return out


def _prefix_sums(p: Multipartition, depth: int) -> list[int]:
    sums, total = [], 0
    for comp in p:
        for r in range(1, depth + 1):
            total += _row(comp, r)
            sums.append(total)
    return sums


def multipartition_dominates(lam: Multipartition, nu: Multipartition) -> bool:
    """Dominance ``lam >= nu`` of multipartitions with the same number of components."""
    if len(lam) != len(nu):
        raise DomainError("dominance needs equal component counts")
    depth = max([len(c) for c in lam] + [len(c) for c in nu] + [0])
    return all(x >= y for x, y in zip(_prefix_sums(lam, depth), _prefix_sums(nu, depth)))


def dominates(s: SkewShape, t: SkewShape) -> bool:
    if (s.inner, s.charge, s.e) != (t.inner, t.charge, t.e) or s.size != t.size:
        raise DomainError(f"dominance needs matching inner/charge/e/size: {s} vs {t}")
    return multipartition_dominates(s.outer, t.outer)


def is_minimal_skew(shape: SkewShape) -> bool:
    for lam, mu in zip(shape.outer, shape.inner):
        if not lam:
            return False
        if _row(mu, 1) >= lam[0] or _row(mu, len(lam)) != 0:
            return False
    return True


def _require_level(shape: SkewShape, level: int, what: str) -> None:
    if shape.level != level:
        raise DomainError(f"{what} needs level {level}, got {shape}")


def is_skew_hook(shape: SkewShape) -> bool:
    _require_level(shape, 1, "is_skew_hook")
    nodes = shape.nodes
    if not nodes:
        return False
    diagonals = [b - a for a, b, _ in nodes]
    if len(set(diagonals)) != len(diagonals):
        return False
    cells = set(nodes)
    seen = {nodes[0]}
    stack = [nodes[0]]
    while stack:
        a, b, m = stack.pop()
        for nb in ((a + 1, b, m), (a - 1, b, m), (a, b + 1, m), (a, b - 1, m)):
            if nb in cells and nb not in seen:
                seen.add(nb)
                stack.append(nb)
    return len(seen) == len(cells)


def _join_data(shape: SkewShape):
    _require_level(shape, 2, "joinability")
    lam1 = shape.outer[0]
    lam2 = shape.outer[1]
    x1 = len(lam1)
    y2 = lam2[0] if lam2 else 0
    return x1, y2


def is_joinable(shape: SkewShape) -> bool:
    x1, y2 = _join_data(shape)
    if not is_minimal_skew(shape):
        return False
    return shape.residue(Node(x1, 1, 1)) == (shape.residue(Node(1, y2, 2)) + 1) % shape.e


def _require_joinable(shape: SkewShape) -> tuple[int, int]:
    x1, y2 = _join_data(shape)
    if not is_joinable(shape):
        raise DomainError(f"shape is not joinable: {shape}")
    return x1, y2


def tau_above(shape: SkewShape, node: Node) -> Node:
    """Node map into :func:`join_above`: component 2 is glued below component 1."""
    x1, y2 = _join_data(shape)
    a, b, m = node
    return Node(a, b + y2 - 1, 1) if m == 1 else Node(a + x1, b, 1)


def tau_right(shape: SkewShape, node: Node) -> Node:
    """Node map into :func:`join_right`: component 1 is glued right of component 2."""
    x1, y2 = _join_data(shape)
    a, b, m = node
    return Node(a, b + y2, 1) if m == 1 else Node(a + x1 - 1, b, 1)


def join_above(shape: SkewShape) -> SkewShape:
    x1, y2 = _require_joinable(shape)
    (lam1, lam2), (mu1, mu2) = shape.outer, shape.inner
    outer = [l + y2 - 1 for l in lam1] + list(lam2)
    inner = [_row(mu1, r) + y2 - 1 for r in range(1, x1 + 1)] + list(mu2)
    return SkewShape.level1(outer, inner, shape.charge[1] + x1, shape.e)


def join_right(shape: SkewShape) -> SkewShape:
    x1, y2 = _require_joinable(shape)
    (lam1, lam2), (mu1, mu2) = shape.outer, shape.inner
    outer = [l + y2 for l in lam1] + list(lam2[1:])
    inner = [_row(mu1, r) + y2 for r in range(1, x1)] + list(mu2)
    return SkewShape.level1(outer, inner, shape.charge[1] + x1 - 1, shape.e)


def hook_eta(e: int, i: int) -> SkewShape:
    """The hook ``(i, 1^{e-i})`` with charge 0; its content is delta."""
    check_e(e)
    if not 1 <= i <= e - 1:
        raise DomainError(f"hook index i={i} outside [1, {e - 1}]")
    return SkewShape.level1((i,) + (1,) * (e - i), (), 0, e)


def _check_mi(m: int, i: int, e: int, m_min: int) -> None:
    check_e(e)
    if m < m_min or not 1 <= i <= e - 1:
        raise DomainError(f"parameters out of range: m={m}, i={i}, e={e}")


def _inner_stair(m: int, i: int, e: int) -> list[int]:
    return [k * i for k in range(m - 1, 0, -1) for _ in range(e - i)]


def shape_plus(m: int, i: int, e: int) -> SkewShape:
    """Skew hook with content ``m*delta + alpha_i``."""
    _check_mi(m, i, e, 0)
    outer = [m * i + 1] + [k * i + 1 for k in range(m - 1, -1, -1) for _ in range(e - i)]
    return SkewShape.level1(outer, _inner_stair(m, i, e), (1 - m) * i, e)


def shape_minus(m: int, i: int, e: int) -> SkewShape:
    """Skew hook with content ``m*delta - alpha_i``."""
    _check_mi(m, i, e, 1)
    outer = ([m * i] + [k * i + 1 for k in range(m - 1, 0, -1) for _ in range(e - i)]
             + [1] * (e - i - 1))
    return SkewShape.level1(outer, _inner_stair(m, i, e), (1 - m) * i, e)


# -- enumeration helpers used by sweeps and tests --------------------------

def partitions_of(n: int, max_part: Optional[int] = None) -> Iterator[Partition]:
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions_of(n - first, first):
            yield (first,) + rest


def multipartitions_of(n: int, level: int) -> Iterator[Multipartition]:
    if level == 1:
        for p in partitions_of(n):
            yield (p,)
        return
    for k in range(n, -1, -1):
        for p in partitions_of(k):
            for rest in multipartitions_of(n - k, level - 1):
                yield (p,) + rest


def subpartitions(p: Partition) -> Iterator[Partition]:
    """All partitions contained in ``p``."""
    def rec(r: int, cap: int):
        if r > len(p):
            yield ()
            return
        for x in range(min(cap, p[r - 1]), -1, -1):
            if x == 0:
                yield ()
            else:
                for rest in rec(r + 1, x):
                    yield (x,) + rest
    return rec(1, p[0] if p else 0)


def submultipartitions(p: Multipartition) -> Iterator[Multipartition]:
    if not p:
        yield ()
        return
    for first in subpartitions(p[0]):
        for rest in submultipartitions(p[1:]):
            yield (first,) + rest


def tight_skew_diagrams(n: int) -> Iterator[tuple[Partition, Partition]]:
    """Pairs ``(outer, inner)`` of level-1 skew diagrams with exactly ``n`` nodes
    and no empty row or column.

    Up to translation these are all skew diagrams whose rows and columns are
    occupied; such diagrams are automatically minimal.
    """
    def rec(rows: list, rem: int):
        if rem == 0:
            if rows and rows[-1][1] == 0:
                lam = tuple(r[0] for r in rows)
                mu = tuple(r[1] for r in rows)
                width = lam[0]
                cols = set()
                for l, m in rows:
                    cols.update(range(m + 1, l + 1))
                if len(cols) == width:
                    yield lam, _norm_partition(mu)
            return
        lam_cap = rows[-1][0] if rows else n
        mu_cap = rows[-1][1] if rows else n - 1
        for mu in range(mu_cap, -1, -1):
            # empty columns are filtered once the diagram is complete
            for lam in range(min(lam_cap, mu + rem), mu, -1):
                yield from rec(rows + [(lam, mu)], rem - (lam - mu))
    yield from rec([], n)


def parse_multipartition(text: str, what: str = "partition") -> Multipartition:
    """Parse ``3,2,2|2,2`` (components separated by ``|``).  Empty text gives ``((),)``."""
    text = text.strip()
    comps = []
    offset = 0
    for piece in text.split("|"):
        parts = []
        stripped = piece.strip()
        if stripped:
            local = 0
            for tok in piece.split(","):
                tok_s = tok.strip()
                if not tok_s.isdigit():
                    raise ParseError(f"malformed {what} entry", text, offset + local)
                parts.append(int(tok_s))
                local += len(tok) + 1
        try:
            comps.append(_norm_partition(parts))
        except DomainError as exc:
            raise ParseError(f"{what}: {exc}", text, offset) from None
        offset += len(piece) + 1
    return tuple(comps)


def parse_charge(text: str) -> tuple[int, ...]:
    out = []
    pos = 0
    for tok in text.split(","):
        s = tok.strip()
        if not (s.lstrip("-").isdigit()):
            raise ParseError("malformed charge entry", text, pos)
        out.append(int(s))
        pos += len(tok) + 1
    return tuple(out)


def parse_shape(text: str) -> SkewShape:
    """Parse ``outer=3,2,2|2,2;inner=;charge=2,1;e=3``."""
    fields = {}
    pos = 0
    for chunk in text.split(";"):
        if chunk.strip():
            if "=" not in chunk:
                raise ParseError("expected key=value", text, pos)
            key, val = chunk.split("=", 1)
            key = key.strip()
            if key not in ("outer", "inner", "charge", "e"):
                raise ParseError(f"unknown field {key!r}", text, pos)
            fields[key] = (val, pos + len(chunk) - len(val))
        pos += len(chunk) + 1
    for need in ("outer", "charge", "e"):
        if need not in fields:
            raise ParseError(f"missing field {need!r}", text, len(text))
    e_text, e_pos = fields["e"]
    if not e_text.strip().isdigit():
        raise ParseError("malformed e", text, e_pos)

    def sub(key, parse):
        val, at = fields[key]
        try:
            return parse(val)
        except ParseError as exc:
            raise ParseError(exc.reason, text, at + exc.position) from None

    charge = sub("charge", parse_charge)
    outer = sub("outer", lambda v: parse_multipartition(v, "outer"))
    if "inner" in fields and fields["inner"][0].strip():
        inner = sub("inner", lambda v: parse_multipartition(v, "inner"))
    else:
        inner = ((),) * len(charge)
    try:
        return SkewShape(outer, inner, charge, int(e_text))
    except DomainError as exc:
        raise ParseError(str(exc), text, 0) from None

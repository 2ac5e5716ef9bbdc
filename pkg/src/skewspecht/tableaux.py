"""Skew tableaux: standardness, enumeration, residue words, degrees and Bruhat order.

A tableau stores its entries aligned with ``shape.nodes`` (reading order), so
``entries`` is also the one-line notation of the permutation taking the
leading tableau to it.

>>> from .diagrams import SkewShape
>>> s = SkewShape.level1((2, 1), (), 0, 2)
>>> [(t.entries, degree(t)) for t in enumerate_standard(s)]
[((1, 2, 3), 1), ((1, 3, 2), -1)]
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterator, Sequence

from .diagrams import Multipartition, Node, SkewShape, _addable_in, _removable_in
from .errors import DomainError
from .root_system import cartan_pairing

Word = tuple[int, ...]
Permutation = tuple[int, ...]


@dataclass(frozen=True)
class SkewTableau:
    shape: SkewShape
    entries: tuple[int, ...]

    def __post_init__(self):
        entries = tuple(int(x) for x in self.entries)
        if sorted(entries) != list(range(1, self.shape.size + 1)):
            raise DomainError(f"entries {entries} are not a bijection onto 1..{self.shape.size}")
        object.__setattr__(self, "entries", entries)

    @classmethod
    def from_mapping(cls, shape: SkewShape, mapping: dict) -> SkewTableau:
        return cls(shape, tuple(mapping[n] for n in shape.nodes))

    @property
    def size(self) -> int:
        return len(self.entries)

    def __getitem__(self, node) -> int:
        return self.entries[self.shape.index[Node(*node)]]

    @cached_property
    def positions(self) -> tuple[Node, ...]:
        """``positions[r-1]`` is the node holding ``r``."""
        inv = [None] * self.size
        for node, x in zip(self.shape.nodes, self.entries):
            inv[x - 1] = node
        return tuple(inv)

    def node_of(self, r: int) -> Node:
        return self.positions[r - 1]

    def as_mapping(self) -> dict[Node, int]:
        return dict(zip(self.shape.nodes, self.entries))

    def render(self) -> str:
        return render_tableau(self)


def render_tableau(t: SkewTableau) -> str:
    """Rows of entries; inner cells shown as ``.``; components separated by blank lines."""
    shape = t.shape
    width = max([len(str(t.size))] + [1])
    mapping = t.as_mapping()
    blocks = []
    for m, lam in enumerate(shape.outer, start=1):
        lines = []
        for a, length in enumerate(lam, start=1):
            cells = []
            for b in range(1, length + 1):
                x = mapping.get(Node(a, b, m))
                cells.append(("." if x is None else str(x)).rjust(width))
            lines.append(" ".join(cells))
        blocks.append("\n".join(lines) if lines else "(empty)")
    return "\n\n".join(blocks)


def leading_tableau(shape: SkewShape) -> SkewTableau:
    return SkewTableau(shape, tuple(range(1, shape.size + 1)))


def embed_Y(t: SkewTableau) -> SkewTableau:
    """Fill the inner diagram by its leading tableau and shift the skew entries up."""
    shape = t.shape
    full = shape.outer_shape()
    inner = shape.inner_shape()
    n_inner = inner.size
    mapping = {node: k for k, node in enumerate(inner.nodes, start=1)}
    for node, x in zip(shape.nodes, t.entries):
        mapping[node] = x + n_inner
    return SkewTableau.from_mapping(full, mapping)


def is_row_strict(t: SkewTableau) -> bool:
    mapping = t.as_mapping()
    for (a, b, m), x in mapping.items():
        right = mapping.get(Node(a, b + 1, m))
        if right is not None and right < x:
            return False
    return True


def is_standard(t: SkewTableau) -> bool:
    mapping = t.as_mapping()
    for (a, b, m), x in mapping.items():
        right = mapping.get(Node(a, b + 1, m))
        below = mapping.get(Node(a + 1, b, m))
        if (right is not None and right < x) or (below is not None and below < x):
            return False
    return True


def _prerequisites(shape: SkewShape) -> list[tuple[int, int]]:
    """For each node (reading order) the indices of its left and upper neighbours in the shape (-1 if absent)."""
    idx = shape.index
    out = []
    for a, b, m in shape.nodes:
        out.append((idx.get(Node(a, b - 1, m), -1), idx.get(Node(a - 1, b, m), -1)))
    return out


def _d_below_rows(rows: list[list[int]], charge, e: int, a: int, m: int, i: int) -> int:
    """``#addable - #removable`` i-nodes strictly below row ``a`` of component ``m``.

    ``rows[m-1]`` is the list of row lengths of component ``m`` (may contain zeros).
    """
    total = 0
    for comp in range(m, len(rows) + 1):
        p = rows[comp - 1]
        k = charge[comp - 1]
        n = len(p)
        start = a + 1 if comp == m else 1
        for r in range(start, n + 2):
            cur = p[r - 1] if r <= n else 0
            prev = p[r - 2] if r >= 2 else None
            nxt = p[r] if r < n else 0
            if (prev is None or prev > cur) and (k + cur + 1 - r) % e == i:
                total += 1
            if cur > 0 and nxt < cur and (k + cur - r) % e == i:
                total -= 1
    return total


def _d_above_rows(rows: list[list[int]], charge, e: int, a: int, m: int, i: int) -> int:
    total = 0
    for comp in range(1, m + 1):
        p = rows[comp - 1]
        k = charge[comp - 1]
        n = len(p)
        stop = a - 1 if comp == m else n + 1
        for r in range(1, stop + 1):
            cur = p[r - 1] if r <= n else 0
            prev = p[r - 2] if r >= 2 else None
            nxt = p[r] if r < n else 0
            if (prev is None or prev > cur) and (k + cur + 1 - r) % e == i:
                total += 1
            if cur > 0 and nxt < cur and (k + cur - r) % e == i:
                total -= 1
    return total


def _rows_of(p: Multipartition) -> list[list[int]]:
    return [list(c) for c in p]


def d_below(p: Multipartition, charge, e: int, node: Node) -> int:
    """The BKW count ``d_A``: addable minus removable nodes of residue res(A) strictly below a removable A."""
    a, b, m = node
    comp = tuple(p[m - 1])
    if (a, b) not in _removable_in(comp):
        raise DomainError(f"{tuple(node)} is not removable from {p}")
    i = (charge[m - 1] + b - a) % e
    return _d_below_rows(_rows_of(p), charge, e, a, m, i)


def d_above(p: Multipartition, charge, e: int, node: Node) -> int:
    """The count ``d^B`` for an addable node B, looking strictly above."""
    a, b, m = node
    comp = tuple(p[m - 1])
    if (a, b) not in _addable_in(comp):
        raise DomainError(f"{tuple(node)} is not addable to {p}")
    i = (charge[m - 1] + b - a) % e
    return _d_above_rows(_rows_of(p), charge, e, a, m, i)


def _require_standard(t: SkewTableau) -> None:
    if not is_standard(t):
        raise DomainError(f"tableau is not standard:\n{render_tableau(t)}")


def _partition_tableau_degree(t: SkewTableau, co: bool = False) -> int:
    """Degree (or codegree) of a standard tableau on a multipartition, by peeling off the largest entry."""
    shape = t.shape
    rows = [[0] * len(c) for c in shape.outer]
    total = 0
    # grow the shape entry by entry; each step adds node A to the current shape nu
    for a, b, m in t.positions:
        i = (shape.charge[m - 1] + b - a) % shape.e
        if co:
            total += _d_above_rows(rows, shape.charge, shape.e, a, m, i)
        rows[m - 1][a - 1] += 1
        if not co:
            total += _d_below_rows(rows, shape.charge, shape.e, a, m, i)
    return total


def degree(t: SkewTableau) -> int:
    """BKW degree; skew tableaux go through the Y-embedding."""
    _require_standard(t)
    lead_inner = leading_tableau(t.shape.inner_shape())
    return _partition_tableau_degree(embed_Y(t)) - _partition_tableau_degree(lead_inner)


def codegree(t: SkewTableau) -> int:
    _require_standard(t)
    lead_inner = leading_tableau(t.shape.inner_shape())
    return (_partition_tableau_degree(embed_Y(t), co=True)
            - _partition_tableau_degree(lead_inner, co=True))


def residue_sequence(t: SkewTableau) -> Word:
    return tuple(t.shape.residue(n) for n in t.positions)


def tableau_permutation(t: SkewTableau) -> Permutation:
    return t.entries


def swap_entries(t: SkewTableau, r: int) -> SkewTableau:
    """``s_r t``: exchange the entries r and r+1."""
    return SkewTableau(t.shape, tuple(r + 1 if x == r else r if x == r + 1 else x for x in t.entries))


def adjacent_swap_standard(t: SkewTableau, r: int) -> bool:
    """Whether ``s_r t`` is standard, decided from the relative position of r and r+1."""
    if not 1 <= r < t.size:
        raise DomainError(f"r={r} out of range for a tableau of size {t.size}")
    a1, b1, m1 = t.node_of(r)
    a2, b2, m2 = t.node_of(r + 1)
    if m1 != m2:
        return True
    return (a2 < a1 and b2 > b1) or (a2 > a1 and b2 < b1)


def enumerate_standard(shape: SkewShape) -> Iterator[SkewTableau]:
    for entries, _, _ in enumerate_standard_data(shape):
        yield SkewTableau(shape, entries)


def enumerate_standard_data(shape: SkewShape) -> Iterator[tuple[tuple[int, ...], int, Word]]:
    """Yield ``(entries, degree, residue word)`` for every standard tableau.

    Degrees accumulate ``d_A`` as each skew node is added on top of the
    inner diagram, which agrees with the Y-embedding definition because the
    inner steps form the leading tableau of the inner multipartition.
    """
    nodes = shape.nodes
    d = len(nodes)
    prereq = _prerequisites(shape)
    res = shape.residues
    charge, e = shape.charge, shape.e
    rows = [list(mu) + [0] * (len(lam) - len(mu)) for lam, mu in zip(shape.outer, shape.inner)]
    entries = [0] * d
    word = [0] * d

    def rec(r: int, deg: int):
        if r > d:
            yield tuple(entries), deg, tuple(word)
            return
        for k in range(d):
            if entries[k]:
                continue
            left, up = prereq[k]
            if (left >= 0 and not entries[left]) or (up >= 0 and not entries[up]):
                continue
            a, b, m = nodes[k]
            rows[m - 1][a - 1] += 1
            entries[k] = r
            word[r - 1] = res[k]
            step = _d_below_rows(rows, charge, e, a, m, res[k])
            yield from rec(r + 1, deg + step)
            entries[k] = 0
            rows[m - 1][a - 1] -= 1

    yield from rec(1, 0)


def _shape_after(t: SkewTableau, upto: int) -> Multipartition:
    rows = [list(c) + [0] * (len(lam) - len(c)) for lam, c in zip(t.shape.outer, t.shape.inner)]
    for a, _, m in t.positions[:upto]:
        rows[m - 1][a - 1] += 1
    return tuple(tuple(x for x in r if x) for r in rows)


def bruhat_leq(s: SkewTableau, t: SkewTableau) -> bool:
    """``s ⊴ t`` via the shape criterion: every prefix shape of s dominates that of t."""
    from .diagrams import multipartition_dominates

    if s.shape != t.shape:
        raise DomainError("Bruhat comparison needs tableaux of the same shape")
    if not (is_row_strict(s) and is_row_strict(t)):
        raise DomainError("Bruhat comparison via shapes needs row-strict tableaux")
    return all(multipartition_dominates(_shape_after(s, a), _shape_after(t, a))
               for a in range(1, s.size + 1))


def permutation_bruhat_leq(u: Sequence[int], v: Sequence[int]) -> bool:
    """Bruhat order on permutations by the sorted-prefix (tableau) criterion."""
    if len(u) != len(v):
        raise DomainError("permutations of different degrees")
    for k in range(1, len(u)):
        if any(x > y for x, y in zip(sorted(u[:k]), sorted(v[:k]))):
            return False
    return True


def permutation_length(w: Sequence[int]) -> int:
    n = len(w)
    return sum(1 for k in range(n) for l in range(k + 1, n) if w[k] > w[l])


def reduced_word(w: Sequence[int]) -> list[int]:
    """Lexicographically smallest reduced word ``[r1, ..., rm]`` with ``w = s_r1 ... s_rm``."""
    w = list(w)
    pos = {x: k for k, x in enumerate(w)}
    out = []
    while True:
        for r in range(1, len(w)):
            if pos[r] > pos[r + 1]:
                # left descent: s_r w swaps the values r and r+1
                ka, kb = pos[r], pos[r + 1]
                w[ka], w[kb] = r + 1, r
                pos[r], pos[r + 1] = kb, ka
                out.append(r)
                break
        else:
            return out


def apply_reduced_word(word_rs: Sequence[int], letters: Sequence[int], e: int) -> tuple[int, Word]:
    """Apply ``s_r1 ... s_rm`` to a residue word right to left, collecting crossing degrees."""
    cur = list(letters)
    deg = 0
    for r in reversed(word_rs):
        deg -= cartan_pairing(cur[r - 1], cur[r], e)
        cur[r - 1], cur[r] = cur[r], cur[r - 1]
    return deg, tuple(cur)


def wiring_degree(w: Permutation, word: Sequence[int], e: int) -> int:
    """Degree of the wiring diagram of ``w`` with bottom labels ``word``."""
    if len(w) != len(word):
        raise DomainError("permutation and word lengths differ")
    return apply_reduced_word(reduced_word(w), word, e)[0]


def place_action(w: Permutation, word: Sequence[int]) -> Word:
    """``(w·i)_{w(k)} = i_k``."""
    out = [0] * len(word)
    for k, x in enumerate(word):
        out[w[k] - 1] = x
    return tuple(out)


def ideal_masks(shape: SkewShape):
    """Prerequisite bitmasks: node k may be added to an ideal once ``need[k]`` is inside it."""
    need = []
    for left, up in _prerequisites(shape):
        m = 0
        if left >= 0:
            m |= 1 << left
        if up >= 0:
            m |= 1 << up
        need.append(m)
    return need


def rows_of_ideal(shape: SkewShape, mask: int) -> list[list[int]]:
    """Row lengths of the inner diagram together with the skew nodes in ``mask``."""
    rows = [list(mu) + [0] * (len(lam) - len(mu)) for lam, mu in zip(shape.outer, shape.inner)]
    for k, (a, _, m) in enumerate(shape.nodes):
        if mask >> k & 1:
            rows[m - 1][a - 1] += 1
    return rows


@lru_cache(maxsize=8192)
def edge_degrees(shape: SkewShape) -> dict[tuple[int, int], int]:
    """``d_A`` for every way of adding a node (index k) to an order ideal (bitmask) of the skew poset."""
    need = ideal_masks(shape)
    nodes, res = shape.nodes, shape.residues
    charge, e = shape.charge, shape.e
    d = len(nodes)
    out: dict[tuple[int, int], int] = {}
    rows = [list(mu) + [0] * (len(lam) - len(mu)) for lam, mu in zip(shape.outer, shape.inner)]
    seen = set()

    def visit(mask: int):
        if mask in seen:
            return
        seen.add(mask)
        for k in range(d):
            if mask >> k & 1 or need[k] & ~mask:
                continue
            a, _, m = nodes[k]
            rows[m - 1][a - 1] += 1
            out[(mask, k)] = _d_below_rows(rows, charge, e, a, m, res[k])
            visit(mask | 1 << k)
            rows[m - 1][a - 1] -= 1

    visit(0)
    return out


def chain_total(shape: SkewShape, step, extra_need: dict[int, int] | None = None):
    """Common total of ``step`` over all maximal chains of order ideals, or None if totals differ.

    ``step(mask, k)`` is the weight of adding node k to the ideal ``mask``.  A
    maximal chain is a standard tableau, so a common total is the same as the
    statement "every standard tableau has this total".  Totals agree on all
    chains exactly when the running sum is a well-defined function of the
    ideal, which is what is checked here, one edge at a time.
    ``extra_need`` adds ordering constraints (node -> required mask).
    """
    need = ideal_masks(shape)
    if extra_need:
        for k, m in extra_need.items():
            need[k] |= m
    d = shape.size
    full = (1 << d) - 1
    pot = {0: 0}
    frontier = [0]
    while frontier:
        nxt = []
        for mask in frontier:
            base = pot[mask]
            for k in range(d):
                if mask >> k & 1 or need[k] & ~mask:
                    continue
                new = mask | 1 << k
                val = base + step(mask, k)
                old = pot.get(new)
                if old is None:
                    pot[new] = val
                    nxt.append(new)
                elif old != val:
                    return None
        frontier = nxt
    return pot.get(full)


def check_degree_wiring(shape: SkewShape) -> bool:
    """``deg t - deg t^{λ/μ}`` equals the wiring degree of ``w^t`` on the leading residue word, for every standard t.

    Wiring contribution of placing the next entry at node k: the strand
    from k crosses the strands of already placed nodes later in reading
    order, and only those.
    """
    res = shape.residues
    e = shape.e
    nodes = shape.nodes
    degs = edge_degrees(shape)

    def step(mask: int, k: int) -> int:
        d_a = degs[(mask, k)]
        wire = sum(-cartan_pairing(res[k], res[l], e)
                   for l in range(k + 1, len(nodes)) if mask >> l & 1)
        return d_a - wire

    total = chain_total(shape, step)
    return total is not None and total == degree(leading_tableau(shape))

"""Finite posets over named elements, with a canonical element order.

Every FinPoset stores its elements in a canonical linear extension:
a topological order of the relation with ties broken by element name.
Two structurally equal posets therefore compare equal as values, and
all derived subset bitmasks are reproducible across runs.
"""

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence, Tuple

from .bitsets import bits, mask_of
from .errors import CycleError


@dataclass(frozen=True)
class FinPoset:
    """Poset on named elements; down[i] is the bitmask of {j | e_j <= e_i}."""

    elements: Tuple[str, ...]
    down: Tuple[int, ...]

    def __post_init__(self):
        n = len(self.elements)
        if len(self.down) != n:
            raise ValueError("down mask count does not match element count")
        if len(set(self.elements)) != n:
            raise ValueError("duplicate element names")
        full = (1 << n) - 1
        for i, d in enumerate(self.down):
            if d & ~full:
                raise ValueError("down mask out of range")
            if not (d >> i) & 1:
                raise ValueError(f"relation not reflexive at {self.elements[i]!r}")
            # canonical order is a linear extension: predecessors sit at lower indices
            if d >> (i + 1):
                raise ValueError("element order is not a linear extension")
        for i in range(n):
            for j in bits(self.down[i]):
                if self.down[j] & ~self.down[i]:
                    raise ValueError("relation not transitive")

    @property
    def n(self) -> int:
        return len(self.elements)

    def index(self, name: str) -> int:
        return self.elements.index(name)

    def leq_index(self, i: int, j: int) -> bool:
        return bool((self.down[j] >> i) & 1)

    def leq(self, x: str, y: str) -> bool:
        return self.leq_index(self.index(x), self.index(y))

    def up_masks(self) -> Tuple[int, ...]:
        ups = [0] * self.n
        for j in range(self.n):
            for i in bits(self.down[j]):
                ups[i] |= 1 << j
        return tuple(ups)

    def pairs(self) -> Tuple[Tuple[str, str], ...]:
        """All comparable pairs (x, y) with x <= y, in index order."""
        out = []
        for j in range(self.n):
            for i in bits(self.down[j]):
                out.append((self.elements[i], self.elements[j]))
        return tuple(out)

    def covers(self) -> Tuple[Tuple[int, int], ...]:
        """Pairs (i, j) where e_j covers e_i: i < j with nothing between."""
        out = []
        for j in range(self.n):
            strict = self.down[j] ^ (1 << j)
            for i in bits(strict):
                between = strict & ~self.down[i]
                # e_i < e_k < e_j for some k iff some bit of `between` other
                # than i itself sits strictly above e_i
                if not any(k != i and self.leq_index(i, k) for k in bits(between)):
                    out.append((i, j))
        return tuple(out)

    def cover_pairs(self) -> Tuple[Tuple[str, str], ...]:
        return tuple(
            (self.elements[i], self.elements[j]) for i, j in self.covers()
        )

    def restrict(self, mask: int) -> "FinPoset":
        """Induced subposet on the elements of `mask` (re-canonicalized)."""
        keep = list(bits(mask))
        names = [self.elements[i] for i in keep]
        pos = {old: new for new, old in enumerate(keep)}
        down = [
            mask_of(pos[j] for j in bits(self.down[i] & mask)) for i in keep
        ]
        return make_poset(names, down)


def make_poset(elements: Sequence[str], down: Sequence[int]) -> FinPoset:
    """Build a FinPoset from down-masks in any order, canonicalizing.

    The input must already be a poset; use order_closure for raw pairs.
    """
    n = len(elements)
    order: list[int] = []
    placed = 0
    remaining = set(range(n))
    while remaining:
        ready = [i for i in remaining if down[i] & ~placed == 1 << i]
        if not ready:
            raise ValueError("relation is not acyclic")
        nxt = min(ready, key=lambda i: elements[i])
        order.append(nxt)
        placed |= 1 << nxt
        remaining.remove(nxt)
    pos = {old: new for new, old in enumerate(order)}
    new_elements = tuple(elements[i] for i in order)
    new_down = tuple(
        mask_of(pos[j] for j in bits(down[i])) for i in order
    )
    return FinPoset(new_elements, new_down)


def order_closure(
    elements: Sequence[str], pairs: Iterable[Tuple[str, str]]
) -> FinPoset:
    """Reflexive-transitive closure of generating pairs as a FinPoset.

    Raises CycleError if the closure would identify two distinct elements.
    """
    names = list(elements)
    if len(set(names)) != len(names):
        raise ValueError("duplicate element names")
    idx = {x: i for i, x in enumerate(names)}
    n = len(names)
    up = [1 << i for i in range(n)]
    for x, y in pairs:
        if x not in idx or y not in idx:
            raise ValueError(f"pair ({x!r}, {y!r}) mentions unknown element")
        up[idx[x]] |= 1 << idx[y]
    changed = True
    while changed:
        changed = False
        for i in range(n):
            acc = up[i]
            for j in bits(up[i]):
                acc |= up[j]
            if acc != up[i]:
                up[i] = acc
                changed = True
    for i in range(n):
        for j in bits(up[i]):
            if j != i and (up[j] >> i) & 1:
                raise CycleError((names[i], names[j]))
    down = [0] * n
    for i in range(n):
        for j in bits(up[i]):
            down[j] |= 1 << i
    return make_poset(names, down)


def chain(names: Sequence[str]) -> FinPoset:
    """Total order with names[0] at the bottom."""
    return order_closure(names, [(names[i], names[i + 1]) for i in range(len(names) - 1)])


def antichain(names: Sequence[str]) -> FinPoset:
    return order_closure(names, [])


@dataclass(frozen=True)
class MonotoneMap:
    """Order-preserving map; assignment[i] is the target index of source e_i."""

    source: FinPoset
    target: FinPoset
    assignment: Tuple[int, ...]

    def __post_init__(self):
        if len(self.assignment) != self.source.n:
            raise ValueError("assignment length mismatch")
        for j in range(self.source.n):
            for i in bits(self.source.down[j]):
                if not self.target.leq_index(self.assignment[i], self.assignment[j]):
                    raise ValueError(
                        "map is not monotone at "
                        f"({self.source.elements[i]!r}, {self.source.elements[j]!r})"
                    )

    def apply(self, name: str) -> str:
        return self.target.elements[self.assignment[self.source.index(name)]]


def identity_monotone(p: FinPoset) -> MonotoneMap:
    return MonotoneMap(p, p, tuple(range(p.n)))


def compose_monotone(g: MonotoneMap, f: MonotoneMap) -> MonotoneMap:
    if f.target != g.source:
        raise ValueError("composite endpoints do not match")
    return MonotoneMap(f.source, g.target, tuple(g.assignment[a] for a in f.assignment))


def poset_isomorphism(p: FinPoset, q: FinPoset) -> Optional[Tuple[int, ...]]:
    """An order isomorphism p -> q as an index assignment, or None."""
    if p.n != q.n:
        return None
    p_up = p.up_masks()
    q_up = q.up_masks()

    def sig(down, up, i):
        return (bin(down[i]).count("1"), bin(up[i]).count("1"))

    p_sigs = [sig(p.down, p_up, i) for i in range(p.n)]
    q_sigs = [sig(q.down, q_up, i) for i in range(q.n)]
    if sorted(p_sigs) != sorted(q_sigs):
        return None

    assign: list[Optional[int]] = [None] * p.n
    used = [False] * q.n

    def extend(i: int) -> bool:
        if i == p.n:
            return True
        for j in range(q.n):
            if used[j] or p_sigs[i] != q_sigs[j]:
                continue
            ok = True
            for k in range(i):
                if p.leq_index(k, i) != q.leq_index(assign[k], j) or p.leq_index(
                    i, k
                ) != q.leq_index(j, assign[k]):
                    ok = False
                    break
            if ok:
                assign[i] = j
                used[j] = True
                if extend(i + 1):
                    return True
                assign[i] = None
                used[j] = False
        return False

    return tuple(assign) if extend(0) else None


def poset_isomorphic(p: FinPoset, q: FinPoset) -> bool:
    return poset_isomorphism(p, q) is not None

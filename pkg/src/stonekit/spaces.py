"""Finite topological spaces as explicit families of open point-sets.

Opens are bitmasks over the point tuple, stored sorted ascending, and the
constructor enforces the closure axioms, so two equal-looking spaces are
equal as values. All finite topologies are Alexandrov: arbitrary meets of
opens are again open, which the rest of the package leans on freely.
"""

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Optional, Tuple

from .bitsets import bits, format_subset, mask_of
from .dlat import DistLattice, LatticeHom, lattice_from_poset
from .errors import CycleError, NotATopology, UniverseMismatch
from .order import FinPoset, make_poset


@dataclass(frozen=True)
class FinSpace:
    points: Tuple[str, ...]
    opens: Tuple[int, ...]

    def __post_init__(self):
        n = len(self.points)
        if len(set(self.points)) != n:
            raise ValueError("duplicate point names")
        full = (1 << n) - 1
        if list(self.opens) != sorted(set(self.opens)):
            raise NotATopology("opens must be distinct and sorted ascending")
        if self.opens and (self.opens[0] != 0 or self.opens[-1] != full):
            raise NotATopology(
                "missing empty set or whole space",
                witness=(0, full),
            )
        if not self.opens:
            raise NotATopology("no opens given")
        have = set(self.opens)
        for a in self.opens:
            for b in self.opens:
                if a | b not in have:
                    raise NotATopology(
                        f"union of {self.set_name(a)} and {self.set_name(b)} not open",
                        witness=(a, b),
                    )
                if a & b not in have:
                    raise NotATopology(
                        f"intersection of {self.set_name(a)} and {self.set_name(b)} not open",
                        witness=(a, b),
                    )

    @property
    def n(self) -> int:
        return len(self.points)

    @property
    def full(self) -> int:
        return (1 << self.n) - 1

    def index(self, name: str) -> int:
        return self.points.index(name)

    def set_name(self, mask: int) -> str:
        return format_subset(self.points, mask)

    def is_open(self, mask: int) -> bool:
        return mask in set(self.opens)

    def min_nbhd(self, i: int) -> int:
        """Smallest open around point i (meet of all opens containing it)."""
        out = self.full
        for o in self.opens:
            if (o >> i) & 1:
                out &= o
        return out


def discrete_space(names: Iterable[str]) -> FinSpace:
    names = tuple(names)
    return FinSpace(names, tuple(range(1 << len(names))))


def indiscrete_space(names: Iterable[str]) -> FinSpace:
    names = tuple(names)
    full = (1 << len(names)) - 1
    return FinSpace(names, (0, full) if full else (0,))


def sierpinski() -> FinSpace:
    """Two points 0 < 1 with {1} the only nontrivial open."""
    return FinSpace(("0", "1"), (0b00, 0b10, 0b11))


def space_from_basis(names: Iterable[str], basis: Iterable[int]) -> FinSpace:
    """Close a family of point-masks under union and intersection."""
    names = tuple(names)
    full = (1 << len(names)) - 1
    have = {0, full} | set(basis)
    grown = True
    while grown:
        grown = False
        current = list(have)
        for i, a in enumerate(current):
            for b in current[i:]:
                for c in (a | b, a & b):
                    if c not in have:
                        have.add(c)
                        grown = True
    return FinSpace(names, tuple(sorted(have)))


def disjoint_union(x: FinSpace, y: FinSpace) -> FinSpace:
    """Coproduct; point names must not clash."""
    names = x.points + y.points
    opens = tuple(
        sorted(a | (b << x.n) for a in x.opens for b in y.opens)
    )
    return FinSpace(names, opens)


def subspace(x: FinSpace, mask: int) -> "Tuple[FinSpace, ContinuousMap]":
    """Induced topology on a subset, with the inclusion map."""
    keep = list(bits(mask))
    names = tuple(x.points[i] for i in keep)
    pos = {old: new for new, old in enumerate(keep)}
    opens = sorted({mask_of(pos[i] for i in bits(o & mask)) for o in x.opens})
    sub = FinSpace(names, tuple(opens))
    incl = ContinuousMap(sub, x, tuple(keep))
    return sub, incl


@dataclass(frozen=True)
class ContinuousMap:
    """Point assignment whose preimages of opens are open."""

    source: FinSpace
    target: FinSpace
    assignment: Tuple[int, ...]

    def __post_init__(self):
        if len(self.assignment) != self.source.n:
            raise ValueError("assignment length mismatch")
        for v in self.assignment:
            if not 0 <= v < max(self.target.n, 1):
                raise ValueError("assignment value out of range")
        src_opens = set(self.source.opens)
        for o in self.target.opens:
            if preimage_mask(self.assignment, o) not in src_opens:
                raise ValueError(
                    f"preimage of {self.target.set_name(o)} is not open"
                )

    def apply(self, name: str) -> str:
        return self.target.points[self.assignment[self.source.index(name)]]

    def image_mask(self, mask: int) -> int:
        return mask_of(self.assignment[i] for i in bits(mask))


def preimage_mask(assignment: Tuple[int, ...], target_mask: int) -> int:
    return mask_of(
        i for i, v in enumerate(assignment) if (target_mask >> v) & 1
    )


def identity_map(x: FinSpace) -> ContinuousMap:
    return ContinuousMap(x, x, tuple(range(x.n)))


def compose_maps(g: ContinuousMap, f: ContinuousMap) -> ContinuousMap:
    if f.target != g.source:
        raise UniverseMismatch("map composite endpoints do not match")
    return ContinuousMap(
        f.source, g.target, tuple(g.assignment[v] for v in f.assignment)
    )


def is_continuous_assignment(x: FinSpace, y: FinSpace, assignment) -> bool:
    src_opens = set(x.opens)
    return all(preimage_mask(assignment, o) in src_opens for o in y.opens)


# ---------------------------------------------------------------------------
# specialization, separation, closure


def specialization_preorder(x: FinSpace) -> Tuple[int, ...]:
    """up[i] = mask of points y with i below y: every open at i contains y."""
    return tuple(x.min_nbhd(i) for i in range(x.n))


def is_t0(x: FinSpace) -> bool:
    up = specialization_preorder(x)
    return all(
        not ((up[i] >> j) & 1 and (up[j] >> i) & 1)
        for i in range(x.n)
        for j in range(i + 1, x.n)
    )


def specialization_order(x: FinSpace) -> FinPoset:
    """Specialization order as a poset; CycleError on a non-T0 space."""
    up = specialization_preorder(x)
    for i in range(x.n):
        for j in range(i + 1, x.n):
            if (up[i] >> j) & 1 and (up[j] >> i) & 1:
                raise CycleError((x.points[i], x.points[j]))
    down = [0] * x.n
    for i in range(x.n):
        for j in bits(up[i]):
            down[j] |= 1 << i
    return make_poset(list(x.points), down)


def closure_of(x: FinSpace, mask: int) -> int:
    """Smallest closed set containing mask."""
    out = x.full
    for o in x.opens:
        if o & mask == 0:
            out &= ~o
    return out & x.full


def interior_of(x: FinSpace, mask: int) -> int:
    out = 0
    for o in x.opens:
        if o & ~mask == 0:
            out |= o
    return out


def clopen_masks(x: FinSpace) -> Tuple[int, ...]:
    have = set(x.opens)
    return tuple(o for o in x.opens if (x.full & ~o) in have)


# ---------------------------------------------------------------------------
# the open-set frame


@dataclass(frozen=True)
class OpenFrameView:
    """Open-set lattice of a space; masks[i] is the point-set of element i."""

    space: FinSpace
    lattice: DistLattice
    masks: Tuple[int, ...]

    def index_of(self, mask: int) -> int:
        return self.masks.index(mask)


@lru_cache(maxsize=None)
def open_frame_view(x: FinSpace) -> OpenFrameView:
    names = [x.set_name(o) for o in x.opens]
    by_name = dict(zip(names, x.opens))
    down = [
        mask_of(j for j, oj in enumerate(x.opens) if oj & ~oi == 0)
        for oi in x.opens
    ]
    lat = lattice_from_poset(make_poset(names, down), check=True)
    aligned = tuple(by_name[e] for e in lat.elements)
    return OpenFrameView(x, lat, aligned)


def open_set_frame(x: FinSpace) -> DistLattice:
    """Lattice of open sets under inclusion (a frame, at this scale)."""
    return open_frame_view(x).lattice


def open_preimage_hom(f: ContinuousMap) -> LatticeHom:
    """Frame hom from target opens to source opens taking preimages."""
    src_view = open_frame_view(f.target)
    tgt_view = open_frame_view(f.source)
    return LatticeHom(
        src_view.lattice,
        tgt_view.lattice,
        tuple(
            tgt_view.index_of(preimage_mask(f.assignment, m))
            for m in src_view.masks
        ),
    )


# ---------------------------------------------------------------------------
# homeomorphism search


def is_homeomorphism(f: ContinuousMap) -> bool:
    """Bijective and carries the open-set family exactly onto the target's."""
    if sorted(f.assignment) != list(range(f.target.n)):
        return False
    return sorted(f.image_mask(o) for o in f.source.opens) == list(f.target.opens)


def homeomorphism(x: FinSpace, y: FinSpace) -> Optional[ContinuousMap]:
    """A homeomorphism x -> y found by backtracking, or None."""
    if x.n != y.n or len(x.opens) != len(y.opens):
        return None

    def profile(space: FinSpace, i: int):
        sizes = sorted(
            bin(o).count("1") for o in space.opens if (o >> i) & 1
        )
        return (bin(space.min_nbhd(i)).count("1"), tuple(sizes))

    x_prof = [profile(x, i) for i in range(x.n)]
    y_prof = [profile(y, j) for j in range(y.n)]
    if sorted(x_prof) != sorted(y_prof):
        return None

    assign: list[Optional[int]] = [None] * x.n
    used = [False] * y.n
    y_opens = set(y.opens)

    def extend(i: int) -> bool:
        if i == x.n:
            image = [assign[k] for k in range(x.n)]
            return all(
                mask_of(image[k] for k in bits(o)) in y_opens for o in x.opens
            )
        for j in range(y.n):
            if used[j] or x_prof[i] != y_prof[j]:
                continue
            assign[i] = j
            used[j] = True
            if extend(i + 1):
                return True
            assign[i] = None
            used[j] = False
        return False

    if not extend(0):
        return None
    return ContinuousMap(x, y, tuple(assign))


def homeomorphic(x: FinSpace, y: FinSpace) -> bool:
    return homeomorphism(x, y) is not None

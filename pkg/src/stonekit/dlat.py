"""Finite bounded distributive lattices, ideals, prime filters, Birkhoff duality.

Conventions:
  - carrier elements sit in the canonical order of the underlying FinPoset,
    so subsets of a lattice are int bitmasks;
  - an ideal is a nonempty, down-closed, join-closed subset;
  - a filter here is always proper (it never contains bottom).

Fast routes exploit finiteness (every ideal is principal, prime filters are
the up-sets of join-irreducibles); each has a definitional brute-force twin
used as an oracle in the tests.
"""

from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Iterable, Optional, Tuple

from .bitsets import bits, format_subset, mask_of
from .errors import (
    BudgetExceeded,
    ForeignIdeal,
    NotALattice,
    NotDistributive,
    UniverseMismatch,
)
from .order import FinPoset, make_poset, poset_isomorphism


@dataclass(frozen=True)
class DistLattice:
    """Bounded lattice on a FinPoset carrier with full meet/join tables."""

    poset: FinPoset
    meet: Tuple[Tuple[int, ...], ...]
    join: Tuple[Tuple[int, ...], ...]
    bot: int
    top: int

    @property
    def elements(self) -> Tuple[str, ...]:
        return self.poset.elements

    @property
    def n(self) -> int:
        return self.poset.n

    def index(self, name: str) -> int:
        return self.poset.index(name)

    def leq_index(self, i: int, j: int) -> bool:
        return self.poset.leq_index(i, j)

    def down_mask(self, i: int) -> int:
        return self.poset.down[i]

    def join_mask(self, mask: int) -> int:
        """Join of a subset given as a bitmask; empty mask yields bottom."""
        out = self.bot
        for i in bits(mask):
            out = self.join[out][i]
        return out

    def meet_mask(self, mask: int) -> int:
        out = self.top
        for i in bits(mask):
            out = self.meet[out][i]
        return out

    def subset_name(self, mask: int) -> str:
        return format_subset(self.elements, mask)


def lattice_from_poset(p: FinPoset, check: bool = True) -> DistLattice:
    """Compute meet/join tables for a poset that is a bounded lattice.

    Raises NotALattice when some pair lacks a meet or join, and (when
    check=True) NotDistributive with a witness triple.
    """
    n = p.n
    if n == 0:
        raise NotALattice("carrier", "empty")
    ups = p.up_masks()
    meet = [[0] * n for _ in range(n)]
    join = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            lower = p.down[i] & p.down[j]
            g = next((k for k in bits(lower) if lower & ~p.down[k] == 0), None)
            if g is None:
                raise NotALattice("meet", (p.elements[i], p.elements[j]))
            meet[i][j] = meet[j][i] = g
            upper = ups[i] & ups[j]
            u = next((k for k in bits(upper) if upper & ~ups[k] == 0), None)
            if u is None:
                raise NotALattice("join", (p.elements[i], p.elements[j]))
            join[i][j] = join[j][i] = u
    full = (1 << n) - 1
    bot = next(i for i in range(n) if ups[i] == full)
    top = next(i for i in range(n) if p.down[i] == full)
    lat = DistLattice(
        p,
        tuple(tuple(row) for row in meet),
        tuple(tuple(row) for row in join),
        bot,
        top,
    )
    if check:
        witness = distributivity_witness(lat)
        if witness is not None:
            raise NotDistributive(witness)
    return lat


def distributivity_witness(lat: DistLattice) -> Optional[Tuple[str, str, str]]:
    """A triple (a, b, c) with a^(bvc) != (a^b)v(a^c), or None."""
    meet, join = lat.meet, lat.join
    for a in range(lat.n):
        for b in range(lat.n):
            for c in range(b, lat.n):
                if meet[a][join[b][c]] != join[meet[a][b]][meet[a][c]]:
                    e = lat.elements
                    return (e[a], e[b], e[c])
    return None


def is_distributive(lat: DistLattice) -> bool:
    return distributivity_witness(lat) is None


@dataclass(frozen=True)
class LatticeHom:
    """Bounded-lattice homomorphism; assignment maps source to target indices."""

    source: DistLattice
    target: DistLattice
    assignment: Tuple[int, ...]

    def __post_init__(self):
        bad = hom_violation(self.source, self.target, self.assignment)
        if bad is not None:
            raise ValueError(f"not a lattice homomorphism: fails {bad}")

    def apply_index(self, i: int) -> int:
        return self.assignment[i]

    def apply(self, name: str) -> str:
        return self.target.elements[self.assignment[self.source.index(name)]]


def hom_violation(
    src: DistLattice, tgt: DistLattice, assignment: Tuple[int, ...]
) -> Optional[str]:
    """First violated homomorphism equation, or None if assignment is a hom."""
    if len(assignment) != src.n:
        return "arity"
    f = assignment
    if f[src.bot] != tgt.bot:
        return f"bottom ({src.elements[src.bot]!r})"
    if f[src.top] != tgt.top:
        return f"top ({src.elements[src.top]!r})"
    for a in range(src.n):
        for b in range(a + 1, src.n):
            if f[src.meet[a][b]] != tgt.meet[f[a]][f[b]]:
                return f"meet at ({src.elements[a]!r}, {src.elements[b]!r})"
            if f[src.join[a][b]] != tgt.join[f[a]][f[b]]:
                return f"join at ({src.elements[a]!r}, {src.elements[b]!r})"
    return None


def identity_hom(lat: DistLattice) -> LatticeHom:
    return LatticeHom(lat, lat, tuple(range(lat.n)))


def compose_homs(g: LatticeHom, f: LatticeHom) -> LatticeHom:
    if f.target != g.source:
        raise UniverseMismatch("hom composite endpoints do not match")
    return LatticeHom(f.source, g.target, tuple(g.assignment[a] for a in f.assignment))


def lattice_isomorphism(a: DistLattice, b: DistLattice) -> Optional[LatticeHom]:
    """A lattice isomorphism a -> b, or None.

    An order isomorphism of the carriers suffices: meets and joins are
    order-determined.
    """
    assign = poset_isomorphism(a.poset, b.poset)
    return None if assign is None else LatticeHom(a, b, assign)


def lattice_isomorphic(a: DistLattice, b: DistLattice) -> bool:
    return lattice_isomorphism(a, b) is not None


@lru_cache(maxsize=None)
def two_lattice() -> DistLattice:
    """The two-element lattice 0 < 1."""
    return lattice_from_poset(make_poset(["0", "1"], [0b01, 0b11]))


# ---------------------------------------------------------------------------
# downsets and Birkhoff duality


@dataclass(frozen=True)
class DownsetView:
    """Downset lattice of a poset plus the subset each element denotes."""

    lattice: DistLattice
    masks: Tuple[int, ...]

    def index_of(self, mask: int) -> int:
        return self.masks.index(mask)


def _downclosed_masks(down: Tuple[int, ...]) -> list:
    n = len(down)
    out = []
    for m in range(1 << n):
        if all(down[i] & ~m == 0 for i in bits(m)):
            out.append(m)
    return out


@lru_cache(maxsize=None)
def downset_view(p: FinPoset) -> DownsetView:
    masks = _downclosed_masks(p.down)
    names = [format_subset(p.elements, m) for m in masks]
    by_name = dict(zip(names, masks))
    down = [
        mask_of(j for j, mj in enumerate(masks) if mj & ~mi == 0)
        for mi in masks
    ]
    lat = lattice_from_poset(make_poset(names, down), check=True)
    aligned = tuple(by_name[e] for e in lat.elements)
    return DownsetView(lat, aligned)


def downset_lattice(p: FinPoset) -> DistLattice:
    """Lattice of down-closed subsets of p, ordered by inclusion."""
    return downset_view(p).lattice


def join_irreducible_mask(lat: DistLattice) -> int:
    """Bitmask of elements with exactly one lower cover (bottom excluded)."""
    counts = [0] * lat.n
    for _, j in lat.poset.covers():
        counts[j] += 1
    return mask_of(j for j in range(lat.n) if counts[j] == 1)


def join_irreducibles(lat: DistLattice) -> FinPoset:
    """Subposet of join-irreducible elements; requires distributivity."""
    witness = distributivity_witness(lat)
    if witness is not None:
        raise NotDistributive(witness)
    return lat.poset.restrict(join_irreducible_mask(lat))


# ---------------------------------------------------------------------------
# ideals


@dataclass(frozen=True)
class Ideal:
    """Nonempty down-closed join-closed subset of its home lattice."""

    home: DistLattice
    members: int

    def __post_init__(self):
        reason = _ideal_violation(self.home, self.members)
        if reason is not None:
            raise ValueError(f"not an ideal: {reason}")

    def member_names(self) -> Tuple[str, ...]:
        return tuple(self.home.elements[i] for i in bits(self.members))

    @property
    def name(self) -> str:
        return self.home.subset_name(self.members)


def _ideal_violation(lat: DistLattice, mask: int) -> Optional[str]:
    if mask == 0:
        return "empty"
    if mask >> lat.n:
        return "members out of range"
    for i in bits(mask):
        if lat.poset.down[i] & ~mask:
            return f"not down-closed at {lat.elements[i]!r}"
    for i in bits(mask):
        for j in bits(mask >> i << i):
            if not (mask >> lat.join[i][j]) & 1:
                return (
                    f"not join-closed at ({lat.elements[i]!r}, {lat.elements[j]!r})"
                )
    return None


def is_ideal_mask(lat: DistLattice, mask: int) -> bool:
    return _ideal_violation(lat, mask) is None


def ideals_bruteforce(lat: DistLattice) -> Tuple[int, ...]:
    """All ideal masks by definitional check over every subset, ascending."""
    down = lat.poset.down
    join = lat.join
    out = []
    for m in range(1, 1 << lat.n):
        ok = True
        for i in bits(m):
            if down[i] & ~m:
                ok = False
                break
        if not ok:
            continue
        members = list(bits(m))
        for x in range(len(members)):
            for y in range(x, len(members)):
                if not (m >> join[members[x]][members[y]]) & 1:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            out.append(m)
    return tuple(out)


def principal_masks(lat: DistLattice) -> Tuple[int, ...]:
    """Masks of the principal ideals, ascending; the fast ideal route."""
    return tuple(sorted(lat.poset.down))


def principal_ideal(lat: DistLattice, name: str) -> Ideal:
    """The ideal of everything below the named element (the monad unit)."""
    return Ideal(lat, lat.poset.down[lat.index(name)])


def _check_home(lat: DistLattice, ideal: Ideal) -> None:
    if ideal.home != lat:
        raise ForeignIdeal(
            f"ideal {ideal.name} lives in a different lattice"
        )


def _join_closure(lat: DistLattice, mask: int) -> int:
    grown = True
    while grown:
        grown = False
        members = list(bits(mask))
        for x in range(len(members)):
            for y in range(x + 1, len(members)):
                j = lat.join[members[x]][members[y]]
                if not (mask >> j) & 1:
                    mask |= 1 << j
                    grown = True
    return mask


def ideal_join(lat: DistLattice, family: Iterable[Ideal]) -> Ideal:
    """Join of a nonempty family of ideals: union closed under finite joins."""
    masks = []
    for ideal in family:
        _check_home(lat, ideal)
        masks.append(ideal.members)
    if not masks:
        raise ValueError("ideal join of an empty family is undefined")
    union = 0
    for m in masks:
        union |= m
    return Ideal(lat, _join_closure(lat, union))


def is_directed_family(lat: DistLattice, family: Iterable[Ideal]) -> bool:
    """Nonempty, and every two members sit inside a third."""
    masks = [i.members for i in family]
    if not masks:
        return False
    return all(
        any(a | b == c | (a | b) and (a | b) & ~c == 0 for c in masks)
        for a in masks
        for b in masks
    )


def ideal_image(f: LatticeHom, ideal: Ideal) -> Ideal:
    """Functor action on ideals: everything under the image of a member."""
    _check_home(f.source, ideal)
    out = 0
    for a in bits(ideal.members):
        out |= f.target.poset.down[f.assignment[a]]
    return Ideal(f.target, out)


@dataclass(frozen=True)
class IdealView:
    """Ideal lattice of a lattice, with each element's member mask."""

    base: DistLattice
    lattice: DistLattice
    masks: Tuple[int, ...]

    def index_of(self, mask: int) -> int:
        return self.masks.index(mask)

    def ideal_at(self, i: int) -> Ideal:
        return Ideal(self.base, self.masks[i])


@lru_cache(maxsize=None)
def ideal_view(lat: DistLattice) -> IdealView:
    masks = ideals_bruteforce(lat)
    names = [lat.subset_name(m) for m in masks]
    by_name = dict(zip(names, masks))
    down = [
        mask_of(j for j, mj in enumerate(masks) if mj & ~mi == 0)
        for mi in masks
    ]
    ilat = lattice_from_poset(make_poset(names, down), check=True)
    aligned = tuple(by_name[e] for e in ilat.elements)
    return IdealView(lat, ilat, aligned)


def ideal_lattice(lat: DistLattice) -> DistLattice:
    """Lattice of all ideals ordered by inclusion."""
    return ideal_view(lat).lattice


def ideal_union(lat: DistLattice, big: Ideal) -> Ideal:
    """Monad multiplication: union of an ideal of ideals of lat."""
    view = ideal_view(lat)
    _check_home(view.lattice, big)
    out = 0
    for i in bits(big.members):
        out |= view.masks[i]
    return Ideal(lat, out)


def principal_embedding(lat: DistLattice) -> LatticeHom:
    """Monad unit as a hom: an element goes to its principal ideal."""
    view = ideal_view(lat)
    return LatticeHom(
        lat,
        view.lattice,
        tuple(view.index_of(lat.poset.down[i]) for i in range(lat.n)),
    )


def union_hom(lat: DistLattice) -> LatticeHom:
    """Monad multiplication as a hom from the double ideal lattice."""
    view = ideal_view(lat)
    double = ideal_view(view.lattice)
    assignment = []
    for m in double.masks:
        u = 0
        for i in bits(m):
            u |= view.masks[i]
        assignment.append(view.index_of(u))
    return LatticeHom(double.lattice, view.lattice, tuple(assignment))


def ideal_functor_hom(f: LatticeHom) -> LatticeHom:
    """Hom between ideal lattices induced elementwise by ideal_image."""
    src = ideal_view(f.source)
    tgt = ideal_view(f.target)
    assignment = []
    for m in src.masks:
        out = 0
        for a in bits(m):
            out |= f.target.poset.down[f.assignment[a]]
        assignment.append(tgt.index_of(out))
    return LatticeHom(src.lattice, tgt.lattice, tuple(assignment))


def frame_join_algebra(lat: DistLattice) -> LatticeHom:
    """Structure map sending each ideal to its join."""
    view = ideal_view(lat)
    return LatticeHom(
        view.lattice,
        lat,
        tuple(lat.join_mask(m) for m in view.masks),
    )


# ---------------------------------------------------------------------------
# prime filters and characters


@dataclass(frozen=True)
class PrimeFilter:
    """Proper, up-closed, meet-closed subset with prime joins."""

    home: DistLattice
    members: int

    def __post_init__(self):
        reason = _prime_filter_violation(self.home, self.members)
        if reason is not None:
            raise ValueError(f"not a prime filter: {reason}")

    @property
    def name(self) -> str:
        return self.home.subset_name(self.members)


def _prime_filter_violation(lat: DistLattice, mask: int) -> Optional[str]:
    if mask == 0:
        return "empty"
    if mask >> lat.n:
        return "members out of range"
    if (mask >> lat.bot) & 1:
        return "contains bottom"
    ups = lat.poset.up_masks()
    for i in bits(mask):
        if ups[i] & ~mask:
            return f"not up-closed at {lat.elements[i]!r}"
    for i in bits(mask):
        for j in bits(mask >> i << i):
            if not (mask >> lat.meet[i][j]) & 1:
                return f"not meet-closed at ({lat.elements[i]!r}, {lat.elements[j]!r})"
    for a in range(lat.n):
        for b in range(a, lat.n):
            if (mask >> lat.join[a][b]) & 1 and not (
                (mask >> a) & 1 or (mask >> b) & 1
            ):
                return f"join ({lat.elements[a]!r}, {lat.elements[b]!r}) not prime"
    return None


def is_prime_filter_mask(lat: DistLattice, mask: int) -> bool:
    return _prime_filter_violation(lat, mask) is None


def prime_filters_bruteforce(lat: DistLattice) -> Tuple[int, ...]:
    """All prime filter masks by definitional check, ascending."""
    return tuple(
        m for m in range(1 << lat.n) if is_prime_filter_mask(lat, m)
    )


@lru_cache(maxsize=None)
def prime_filters(lat: DistLattice) -> Tuple[PrimeFilter, ...]:
    """Prime filters via join-irreducibles, each verified definitionally.

    In a finite distributive lattice the prime filters are exactly the
    up-sets of join-irreducible elements; candidates are still checked
    against the definition rather than trusted.
    """
    ups = lat.poset.up_masks()
    candidates = sorted(ups[j] for j in bits(join_irreducible_mask(lat)))
    out = []
    for m in candidates:
        reason = _prime_filter_violation(lat, m)
        if reason is not None:
            raise NotDistributive((lat.subset_name(m), "irreducible up-set", reason))
        out.append(PrimeFilter(lat, m))
    return tuple(out)


def filter_character(f: PrimeFilter) -> LatticeHom:
    """Characteristic hom to the two-element lattice."""
    two = two_lattice()
    return LatticeHom(
        f.home,
        two,
        tuple(1 if (f.members >> i) & 1 else 0 for i in range(f.home.n)),
    )


def character_filter(h: LatticeHom) -> PrimeFilter:
    """Prime filter of everything a character sends to 1."""
    if h.target != two_lattice():
        raise UniverseMismatch("character must land in the two-element lattice")
    return PrimeFilter(h.source, mask_of(i for i, v in enumerate(h.assignment) if v))


def homs_to_2(lat: DistLattice) -> Tuple[LatticeHom, ...]:
    """All homs into the two-element lattice, by ascending filter mask."""
    return tuple(filter_character(f) for f in prime_filters(lat))


def homs_to_2_bruteforce(lat: DistLattice) -> Tuple[LatticeHom, ...]:
    """Characters by checking every 0/1 assignment against the hom equations."""
    two = two_lattice()
    out = []
    for m in range(1 << lat.n):
        assignment = tuple((m >> i) & 1 for i in range(lat.n))
        if hom_violation(lat, two, assignment) is None:
            out.append(LatticeHom(lat, two, assignment))
    return tuple(out)


def all_lattice_homs(
    src: DistLattice, tgt: DistLattice, limit: int = 500_000
) -> Tuple[LatticeHom, ...]:
    """Every hom src -> tgt, enumerated through join-irreducible images.

    A hom is determined by where irreducibles go; each candidate tuple is
    expanded to a full assignment and validated. Requires src distributive.
    """
    irr = list(bits(join_irreducible_mask(src)))
    witness = distributivity_witness(src)
    if witness is not None:
        raise NotDistributive(witness)
    total = tgt.n ** len(irr)
    if total > limit:
        raise BudgetExceeded(
            f"{total} irreducible assignments exceed the limit {limit}"
        )
    seen = set()
    for images in product(range(tgt.n), repeat=len(irr)):
        assignment = []
        for x in range(src.n):
            m = mask_of(images[k] for k, j in enumerate(irr) if (src.poset.down[x] >> j) & 1)
            assignment.append(tgt.join_mask(m))
        assignment = tuple(assignment)
        # distinct image tuples can induce the same hom; deduplicate
        if assignment not in seen and hom_violation(src, tgt, assignment) is None:
            seen.add(assignment)
    return tuple(LatticeHom(src, tgt, a) for a in sorted(seen))

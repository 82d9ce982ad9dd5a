"""Frame-theoretic structure on finite distributive lattices.

Covers the way-below relation (computed from its definition by quantifying
over every subset, not assumed equal to the order), stable compactness,
pseudocomplements and regularity, the Boolean center as the regular
coreflection, the prime spectrum, and the ideal comonad with its
coalgebras. Finite degeneracies (way-below collapsing to the order, every
ideal being principal) are theorems the tests verify against these
definitional routes.
"""

from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Optional, Tuple

from .bitsets import bits, mask_of
from .dlat import (
    DistLattice,
    Ideal,
    LatticeHom,
    compose_homs,
    frame_join_algebra,
    homs_to_2,
    hom_violation,
    ideal_functor_hom,
    ideal_view,
    lattice_from_poset,
    prime_filters,
    principal_embedding,
)
from .errors import BudgetExceeded
from .order import make_poset
from .spaces import ContinuousMap, FinSpace, open_frame_view


# ---------------------------------------------------------------------------
# way-below and stable compactness


@dataclass(frozen=True)
class WayBelowRelation:
    """below[b] is the bitmask of elements way below element b."""

    home: DistLattice
    below: Tuple[int, ...]

    def holds(self, a: str, b: str) -> bool:
        return bool((self.below[self.home.index(b)] >> self.home.index(a)) & 1)

    def pairs(self) -> Tuple[Tuple[str, str], ...]:
        e = self.home.elements
        return tuple(
            (e[a], e[b])
            for b in range(self.home.n)
            for a in bits(self.below[b])
        )


def _join_table(lat: DistLattice) -> list:
    """Join of every subset, built by dynamic programming over masks."""
    table = [lat.bot] * (1 << lat.n)
    for m in range(1, 1 << lat.n):
        low = m & -m
        table[m] = lat.join[table[m ^ low]][low.bit_length() - 1]
    return table


@lru_cache(maxsize=None)
def way_below(lat: DistLattice) -> WayBelowRelation:
    """a way below b: every set joining above b has a finite subset
    already joining above a. Quantifies over all subsets literally."""
    joins = _join_table(lat)
    n = lat.n
    below = [(1 << n) - 1] * n
    for s in range(1 << n):
        j = joins[s]
        # a subset of s joins above a iff a <= join(s): joins of subsets
        # only shrink, so down[join(s)] is exactly the covered set
        covered = lat.poset.down[j]
        for b in bits(covered):
            below[b] &= covered
    return WayBelowRelation(lat, tuple(below))


def is_compact(lat: DistLattice) -> bool:
    """Top way below itself."""
    wb = way_below(lat)
    return bool((wb.below[lat.top] >> lat.top) & 1)


@dataclass(frozen=True)
class StablyCompactReport:
    compact: bool
    sublattice: bool
    approximating: bool
    witness: Optional[tuple] = None

    @property
    def ok(self) -> bool:
        return self.compact and self.sublattice and self.approximating


def stably_compact_report(lat: DistLattice) -> StablyCompactReport:
    """Compactness, way-below a sublattice of the square, approximation."""
    wb = way_below(lat)
    compact = is_compact(lat)
    e = lat.elements

    sub_witness = None
    pairs = [(a, b) for b in range(lat.n) for a in bits(wb.below[b])]
    for a, b in pairs:
        for a2, b2 in pairs:
            m_ok = (wb.below[lat.meet[b][b2]] >> lat.meet[a][a2]) & 1
            j_ok = (wb.below[lat.join[b][b2]] >> lat.join[a][a2]) & 1
            if not (m_ok and j_ok):
                sub_witness = ((e[a], e[b]), (e[a2], e[b2]))
                break
        if sub_witness:
            break

    approx_witness = None
    for b in range(lat.n):
        if lat.join_mask(wb.below[b]) != b:
            approx_witness = e[b]
            break

    witness = sub_witness or approx_witness
    if not compact and witness is None:
        witness = "top not way below itself"
    return StablyCompactReport(
        compact, sub_witness is None, approx_witness is None, witness
    )


def is_stably_compact(lat: DistLattice) -> bool:
    return stably_compact_report(lat).ok


# ---------------------------------------------------------------------------
# pseudocomplement, regularity, Boolean center


def pseudocomplement(lat: DistLattice, a: int) -> int:
    """Largest element meeting a at bottom (index arguments)."""
    return lat.join_mask(
        mask_of(x for x in range(lat.n) if lat.meet[x][a] == lat.bot)
    )


def well_inside_masks(lat: DistLattice) -> Tuple[int, ...]:
    """inside[b] = mask of a with pseudocomplement(a) join b = top."""
    pseudo = [pseudocomplement(lat, a) for a in range(lat.n)]
    return tuple(
        mask_of(a for a in range(lat.n) if lat.join[pseudo[a]][b] == lat.top)
        for b in range(lat.n)
    )


def is_regular(lat: DistLattice) -> bool:
    """Every element is the join of the elements well inside it."""
    inside = well_inside_masks(lat)
    return all(lat.join_mask(inside[b]) == b for b in range(lat.n))


def complemented_mask(lat: DistLattice) -> int:
    """Elements a with some c: a^c=bot and avc=top (definitional check)."""
    out = 0
    for a in range(lat.n):
        if any(
            lat.meet[a][c] == lat.bot and lat.join[a][c] == lat.top
            for c in range(lat.n)
        ):
            out |= 1 << a
    return out


def is_boolean(lat: DistLattice) -> bool:
    """Independent oracle: every element is complemented."""
    return complemented_mask(lat) == (1 << lat.n) - 1


@dataclass(frozen=True)
class CenterView:
    """Boolean center of a lattice with its inclusion hom."""

    base: DistLattice
    lattice: DistLattice
    inclusion: LatticeHom


@lru_cache(maxsize=None)
def center_view(lat: DistLattice) -> CenterView:
    """Sublattice of complemented elements (the regular coreflection)."""
    keep = list(bits(complemented_mask(lat)))
    names = [lat.elements[i] for i in keep]
    pos = {old: new for new, old in enumerate(keep)}
    for a in keep:
        for b in keep:
            # complemented elements stay closed under meet and join in any
            # distributive lattice; failing here means the input was not one
            assert lat.meet[a][b] in pos and lat.join[a][b] in pos, "center not closed"
    down = [
        mask_of(pos[j] for j in keep if lat.leq_index(j, i)) for i in keep
    ]
    center = lattice_from_poset(make_poset(names, down), check=True)
    inclusion = LatticeHom(
        center, lat, tuple(lat.index(e) for e in center.elements)
    )
    return CenterView(lat, center, inclusion)


def center_lattice(lat: DistLattice) -> DistLattice:
    return center_view(lat).lattice


def corestrict_to_center(hom: LatticeHom) -> Optional[LatticeHom]:
    """Factor a hom through the target's center if its image lies there."""
    view = center_view(hom.target)
    cmask = complemented_mask(hom.target)
    if any(not (cmask >> v) & 1 for v in hom.assignment):
        return None
    return LatticeHom(
        hom.source,
        view.lattice,
        tuple(
            view.lattice.index(hom.target.elements[v]) for v in hom.assignment
        ),
    )


# ---------------------------------------------------------------------------
# spectrum


@dataclass(frozen=True)
class SpectrumView:
    """Prime spectrum of a lattice.

    Point k of the space is the k-th prime filter (ascending member mask);
    sigma[a] is the point-set of the basic open for element a.
    """

    base: DistLattice
    space: FinSpace
    filters: Tuple[int, ...]
    sigma: Tuple[int, ...]


@lru_cache(maxsize=None)
def spectrum_view(lat: DistLattice) -> SpectrumView:
    filters = tuple(f.members for f in prime_filters(lat))
    names = tuple(lat.subset_name(m) for m in filters)
    sigma = tuple(
        mask_of(k for k, fm in enumerate(filters) if (fm >> a) & 1)
        for a in range(lat.n)
    )
    opens = tuple(sorted(set(sigma)))
    return SpectrumView(lat, FinSpace(names, opens), filters, sigma)


def spectrum(lat: DistLattice) -> FinSpace:
    """Space of prime filters with the basic opens as topology."""
    return spectrum_view(lat).space


def spectrum_map(h: LatticeHom) -> ContinuousMap:
    """Continuous map of spectra induced by a lattice morphism, reversing it.

    A prime filter of the morphism's target pulls back to one of its source.
    """
    src = spectrum_view(h.target)
    tgt = spectrum_view(h.source)
    assignment = []
    for fm in src.filters:
        pulled = mask_of(
            a for a in range(h.source.n) if (fm >> h.assignment[a]) & 1
        )
        assignment.append(tgt.filters.index(pulled))
    return ContinuousMap(src.space, tgt.space, tuple(assignment))


def point_character(lat: DistLattice, point: str) -> LatticeHom:
    """The character a point of the spectrum denotes."""
    view = spectrum_view(lat)
    return homs_to_2(lat)[view.space.index(point)]


def spatiality_hom(lat: DistLattice) -> LatticeHom:
    """The comparison a -> sigma_a into the spectrum's open-set lattice.

    At this scale it is an isomorphism for every distributive lattice;
    the tests assert bijectivity rather than assuming it.
    """
    view = spectrum_view(lat)
    frame = open_frame_view(view.space)
    return LatticeHom(
        lat,
        frame.lattice,
        tuple(frame.index_of(view.sigma[a]) for a in range(lat.n)),
    )


def is_spatial(lat: DistLattice) -> bool:
    h = spatiality_hom(lat)
    return sorted(h.assignment) == list(range(h.target.n))


# ---------------------------------------------------------------------------
# the ideal comonad


def comultiplication_ideal(lat: DistLattice, ideal: Ideal) -> Ideal:
    """c(I): the ideals whose join lands in I, as an ideal one level up."""
    view = ideal_view(lat)
    if ideal.home != view.base:
        raise ValueError("comultiplication expects an ideal of the base lattice")
    members = mask_of(
        k
        for k, m in enumerate(view.masks)
        if (ideal.members >> lat.join_mask(m)) & 1
    )
    return Ideal(view.lattice, members)


def comultiplication_hom(lat: DistLattice) -> LatticeHom:
    """c as a hom from the ideal lattice to the double ideal lattice."""
    view = ideal_view(lat)
    double = ideal_view(view.lattice)
    assignment = tuple(
        double.index_of(comultiplication_ideal(lat, view.ideal_at(k)).members)
        for k in range(view.lattice.n)
    )
    return LatticeHom(view.lattice, double.lattice, assignment)


def comultiplication_via_functor(lat: DistLattice) -> LatticeHom:
    """The same map as the ideal functor applied to the unit embedding."""
    return ideal_functor_hom(principal_embedding(lat))


def counit_hom(lat: DistLattice) -> LatticeHom:
    """Counit: an ideal goes to its join."""
    return frame_join_algebra(lat)


@dataclass(frozen=True)
class CoalgebraCandidate:
    """A would-be coalgebra structure for the ideal comonad."""

    carrier: DistLattice
    structure: LatticeHom  # carrier -> ideal lattice of carrier


def gamma_coalgebra(lat: DistLattice) -> CoalgebraCandidate:
    """Canonical structure: an element goes to the ideal way below it."""
    wb = way_below(lat)
    view = ideal_view(lat)
    assignment = tuple(view.index_of(wb.below[a]) for a in range(lat.n))
    return CoalgebraCandidate(lat, LatticeHom(lat, view.lattice, assignment))


@dataclass(frozen=True)
class CoalgebraReport:
    counit_law: bool
    comultiplication_law: bool
    witness: Optional[str] = None

    @property
    def ok(self) -> bool:
        return self.counit_law and self.comultiplication_law


def check_coalgebra(cand: CoalgebraCandidate) -> CoalgebraReport:
    lat = cand.carrier
    k = cand.structure
    counit_ok = compose_homs(counit_hom(lat), k).assignment == tuple(range(lat.n))
    lhs = compose_homs(comultiplication_hom(lat), k)
    rhs = compose_homs(ideal_functor_hom(k), k)
    comult_ok = lhs == rhs
    witness = None
    if not counit_ok:
        witness = "counit law"
    elif not comult_ok:
        witness = "comultiplication law"
    return CoalgebraReport(counit_ok, comult_ok, witness)


def coalgebra_structures(lat: DistLattice, limit: int = 2_000_000) -> Tuple[LatticeHom, ...]:
    """Every coalgebra structure found by exhausting all maps to the
    ideal lattice (assignments filtered through hom and law checks)."""
    view = ideal_view(lat)
    total = view.lattice.n ** lat.n
    if total > limit:
        raise BudgetExceeded(f"{total} candidate maps exceed the limit {limit}")
    out = []
    for assignment in product(range(view.lattice.n), repeat=lat.n):
        if hom_violation(lat, view.lattice, assignment) is not None:
            continue
        cand = CoalgebraCandidate(lat, LatticeHom(lat, view.lattice, assignment))
        if check_coalgebra(cand).ok:
            out.append(cand.structure)
    return tuple(out)


def is_proper_hom(hom: LatticeHom) -> bool:
    """Properness as the coalgebra-morphism square for the gamma structures."""
    src_gamma = gamma_coalgebra(hom.source).structure
    tgt_gamma = gamma_coalgebra(hom.target).structure
    return compose_homs(ideal_functor_hom(hom), src_gamma) == compose_homs(
        tgt_gamma, hom
    )

"""The open-prime-filter monad on finite spaces, and its companions.

F X is the space of prime filters of open sets, topologized by the basic
opens O* = {filters containing O}. The unit sends a point to its
neighborhood filter, the multiplication drops one filter level:
mu(BigF) = {O | O* in BigF}. At finite scale F X is homeomorphic to the
sobrification of the T0 quotient, the canonical algebra exists exactly on
T0 spaces, and the Hausdorff reflection through clopen classes closes the
compactification square. All of that is checked by the tests, not assumed.
"""

from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Optional, Tuple

from .bitsets import bits, format_subset, mask_of
from .dlat import LatticeHom, ideal_view, prime_filters
from .errors import BudgetExceeded, NoCanonicalAlgebra
from .frame import center_view, spectrum_view
from .spaces import (
    ContinuousMap,
    FinSpace,
    clopen_masks,
    compose_maps,
    homeomorphic,
    identity_map,
    is_homeomorphism,
    is_continuous_assignment,
    open_frame_view,
    preimage_mask,
)


@dataclass(frozen=True)
class OpenPrimeFilter:
    """Prime filter of opens; members is a mask over the opens tuple."""

    space: FinSpace
    members: int

    def __post_init__(self):
        reason = _filter_violation(self.space, self.members)
        if reason is not None:
            raise ValueError(f"not an open prime filter: {reason}")

    def open_masks(self) -> Tuple[int, ...]:
        return tuple(self.space.opens[i] for i in bits(self.members))

    @property
    def name(self) -> str:
        names = tuple(self.space.set_name(o) for o in self.space.opens)
        return format_subset(names, self.members)


def _filter_violation(x: FinSpace, members: int) -> Optional[str]:
    opens = x.opens
    pos = {o: i for i, o in enumerate(opens)}
    if members == 0:
        return "empty"
    if members >> len(opens):
        return "members out of range"
    if members & 1:
        return "contains the empty set"  # opens[0] is always the empty set
    chosen = [opens[i] for i in bits(members)]
    for a in chosen:
        for b in opens:
            if a & ~b == 0 and not (members >> pos[b]) & 1:
                return f"not up-closed at {x.set_name(b)}"
    for a in chosen:
        for b in chosen:
            if not (members >> pos[a & b]) & 1:
                return f"not meet-closed at {x.set_name(a & b)}"
    for a in opens:
        for b in opens:
            if (members >> pos[a | b]) & 1 and not (
                (members >> pos[a]) & 1 or (members >> pos[b]) & 1
            ):
                return f"union {x.set_name(a | b)} in filter but no side is"
    return None


@dataclass(frozen=True)
class FilterSpaceView:
    """F X with its bookkeeping.

    filters[k] is the k-th prime filter as a mask over base.opens;
    star[i] is the point-set of opens[i]* in the filter space;
    star_open_pos[i] locates opens[i]* inside space.opens.
    """

    base: FinSpace
    space: FinSpace
    filters: Tuple[int, ...]
    star: Tuple[int, ...]
    star_open_pos: Tuple[int, ...]

    def filter_at(self, k: int) -> OpenPrimeFilter:
        return OpenPrimeFilter(self.base, self.filters[k])

    def index_of(self, members: int) -> int:
        return self.filters.index(members)


@lru_cache(maxsize=None)
def filter_space_view(x: FinSpace) -> FilterSpaceView:
    frame = open_frame_view(x)
    pos = {o: i for i, o in enumerate(x.opens)}
    converted = []
    for pf in prime_filters(frame.lattice):
        converted.append(
            mask_of(pos[frame.masks[p]] for p in bits(pf.members))
        )
    filters = tuple(sorted(converted))
    for members in filters:
        reason = _filter_violation(x, members)
        assert reason is None, reason
    open_names = tuple(x.set_name(o) for o in x.opens)
    names = tuple(format_subset(open_names, m) for m in filters)
    star = tuple(
        mask_of(k for k, m in enumerate(filters) if (m >> i) & 1)
        for i in range(len(x.opens))
    )
    opens = tuple(sorted(set(star)))
    space = FinSpace(names, opens)
    star_open_pos = tuple(opens.index(s) for s in star)
    return FilterSpaceView(x, space, filters, star, star_open_pos)


def filter_space(x: FinSpace) -> FinSpace:
    return filter_space_view(x).space


def open_prime_filters(x: FinSpace) -> Tuple[OpenPrimeFilter, ...]:
    view = filter_space_view(x)
    return tuple(view.filter_at(k) for k in range(len(view.filters)))


def neighborhood_filter(x: FinSpace, point: str) -> OpenPrimeFilter:
    i = x.index(point)
    return OpenPrimeFilter(
        x, mask_of(p for p, o in enumerate(x.opens) if (o >> i) & 1)
    )


def unit_map(x: FinSpace) -> ContinuousMap:
    """eta: a point goes to its neighborhood filter."""
    view = filter_space_view(x)
    assignment = tuple(
        view.index_of(neighborhood_filter(x, name).members) for name in x.points
    )
    return ContinuousMap(x, view.space, assignment)


def filter_map(f: ContinuousMap) -> ContinuousMap:
    """F f: push a filter forward through preimages."""
    src = filter_space_view(f.source)
    tgt = filter_space_view(f.target)
    pos = {o: i for i, o in enumerate(f.source.opens)}
    assignment = []
    for members in src.filters:
        pushed = mask_of(
            j
            for j, o in enumerate(f.target.opens)
            if (members >> pos[preimage_mask(f.assignment, o)]) & 1
        )
        assignment.append(tgt.index_of(pushed))
    return ContinuousMap(src.space, tgt.space, tuple(assignment))


def mult_map(x: FinSpace) -> ContinuousMap:
    """mu: FF X -> F X keeps the opens whose stars belong to the big filter."""
    fx = filter_space_view(x)
    ffx = filter_space_view(fx.space)
    assignment = []
    for big in ffx.filters:
        dropped = mask_of(
            i
            for i in range(len(x.opens))
            if (big >> fx.star_open_pos[i]) & 1
        )
        assignment.append(fx.index_of(dropped))
    return ContinuousMap(ffx.space, fx.space, tuple(assignment))


# ---------------------------------------------------------------------------
# canonical algebras


def canonical_algebra(x: FinSpace) -> ContinuousMap:
    """Inverse of the unit; exists exactly when the space is T0."""
    eta = unit_map(x)
    seen = {}
    for i, k in enumerate(eta.assignment):
        if k in seen:
            raise NoCanonicalAlgebra((x.points[seen[k]], x.points[i]))
        seen[k] = i
    fx = eta.target
    assert len(seen) == fx.n, "unit of a finite space must be onto"
    assignment = tuple(seen[k] for k in range(fx.n))
    return ContinuousMap(fx, x, assignment)


@dataclass(frozen=True)
class AlgebraReport:
    unit_law: bool
    assoc_law: bool

    @property
    def ok(self) -> bool:
        return self.unit_law and self.assoc_law


def check_filter_algebra(alpha: ContinuousMap) -> AlgebraReport:
    """Unit and associativity squares for a candidate structure map."""
    x = alpha.target
    unit_ok = compose_maps(alpha, unit_map(x)) == identity_map(x)
    assoc_ok = compose_maps(alpha, filter_map(alpha)) == compose_maps(
        alpha, mult_map(x)
    )
    return AlgebraReport(unit_ok, assoc_ok)


def filter_algebra_structures(
    x: FinSpace, limit: int = 500_000
) -> Tuple[ContinuousMap, ...]:
    """All algebra structure maps, by exhausting every map F X -> X."""
    fx = filter_space(x)
    total = max(x.n, 1) ** fx.n
    if total > limit:
        raise BudgetExceeded(f"{total} candidate maps exceed the limit {limit}")
    out = []
    if x.n == 0:
        if fx.n == 0:
            alpha = ContinuousMap(fx, x, ())
            if check_filter_algebra(alpha).ok:
                out.append(alpha)
        return tuple(out)
    for assignment in product(range(x.n), repeat=fx.n):
        if not is_continuous_assignment(fx, x, assignment):
            continue
        alpha = ContinuousMap(fx, x, assignment)
        if check_filter_algebra(alpha).ok:
            out.append(alpha)
    return tuple(out)


# ---------------------------------------------------------------------------
# separation quotients


def _partition_by(x: FinSpace, key) -> Tuple[Tuple[int, ...], ...]:
    """Classes of points under an equivalence key, ordered by least member."""
    groups = {}
    for i in range(x.n):
        groups.setdefault(key(i), []).append(i)
    return tuple(
        tuple(group) for group in sorted(groups.values(), key=lambda g: g[0])
    )


def _quotient(x: FinSpace, classes, opens) -> Tuple[FinSpace, ContinuousMap]:
    names = tuple(format_subset(x.points, mask_of(c)) for c in classes)
    space = FinSpace(names, tuple(sorted(set(opens))))
    cls_of = {}
    for pos, c in enumerate(classes):
        for i in c:
            cls_of[i] = pos
    q = ContinuousMap(x, space, tuple(cls_of[i] for i in range(x.n)))
    return space, q


def t0_quotient(x: FinSpace) -> Tuple[FinSpace, ContinuousMap]:
    """Identify points with the same neighborhoods; opens pass through."""
    classes = _partition_by(x, x.min_nbhd)
    opens = []
    for o in x.opens:
        opens.append(
            mask_of(pos for pos, c in enumerate(classes) if (o >> c[0]) & 1)
        )
    return _quotient(x, classes, opens)


def hausdorff_reflection(x: FinSpace) -> Tuple[FinSpace, ContinuousMap]:
    """Quotient by the partition the clopen sets generate, made discrete."""
    clopens = clopen_masks(x)

    def profile(i: int) -> int:
        return mask_of(k for k, c in enumerate(clopens) if (c >> i) & 1)

    classes = _partition_by(x, profile)
    opens = range(1 << len(classes))
    return _quotient(x, classes, opens)


def sobrification(x: FinSpace) -> Tuple[FinSpace, ContinuousMap]:
    """Spectrum of the open-set frame, with the point-character unit."""
    frame = open_frame_view(x)
    sview = spectrum_view(frame.lattice)
    assignment = []
    for i in range(x.n):
        character = mask_of(
            p for p in range(frame.lattice.n) if (frame.masks[p] >> i) & 1
        )
        assignment.append(sview.filters.index(character))
    unit = ContinuousMap(x, sview.space, tuple(assignment))
    return sview.space, unit


def is_sober(x: FinSpace) -> bool:
    """The sobrification unit is a homeomorphism."""
    _, unit = sobrification(x)
    return is_homeomorphism(unit)


# ---------------------------------------------------------------------------
# pairing with the ideal lattice of the open-set frame


def pairing_map(x: FinSpace) -> ContinuousMap:
    """Canonical comparison from F X to the spectrum of ideals of opens.

    A filter goes to the character testing whether an ideal of opens meets
    it. The tests check this is a homeomorphism and commutes with both
    monad structures.
    """
    fx = filter_space_view(x)
    frame = open_frame_view(x)
    ideals = ideal_view(frame.lattice)
    sview = spectrum_view(ideals.lattice)
    pos = {o: i for i, o in enumerate(x.opens)}
    assignment = []
    for members in fx.filters:
        frame_mask = mask_of(
            p for p in range(frame.lattice.n) if (members >> pos[frame.masks[p]]) & 1
        )
        touched = mask_of(
            e
            for e in range(ideals.lattice.n)
            if ideals.masks[e] & frame_mask
        )
        assignment.append(sview.filters.index(touched))
    return ContinuousMap(fx.space, sview.space, tuple(assignment))


def open_frame_of_filters_iso(x: FinSpace) -> LatticeHom:
    """Frame iso from opens of F X to ideals of opens of X: W -> {O | O* <= W}."""
    fx = filter_space_view(x)
    frame_x = open_frame_view(x)
    frame_fx = open_frame_view(fx.space)
    ideals = ideal_view(frame_x.lattice)
    pos = {o: i for i, o in enumerate(x.opens)}
    assignment = []
    for w in frame_fx.masks:
        members = mask_of(
            p
            for p in range(frame_x.lattice.n)
            if fx.star[pos[frame_x.masks[p]]] & ~w == 0
        )
        assignment.append(ideals.index_of(members))
    return LatticeHom(frame_fx.lattice, ideals.lattice, tuple(assignment))


# ---------------------------------------------------------------------------
# compactification square and ultrafilters


@dataclass(frozen=True)
class CompactificationReport:
    spectral_side: FinSpace
    reflection_side: FinSpace
    comparison: Optional[ContinuousMap]

    @property
    def ok(self) -> bool:
        return self.comparison is not None and is_homeomorphism(self.comparison)


def compactification_square(x: FinSpace) -> CompactificationReport:
    """Spectrum of the Boolean center of opens of F X, against the
    Hausdorff reflection of F X, compared by clopen characters."""
    fx = filter_space(x)
    frame = open_frame_view(fx)
    center = center_view(frame.lattice)
    sview = spectrum_view(center.lattice)
    reflection, proj = hausdorff_reflection(fx)

    center_masks = tuple(
        frame.masks[center.inclusion.assignment[e]]
        for e in range(center.lattice.n)
    )
    assignment = []
    for pos in range(reflection.n):
        rep = proj.assignment.index(pos)
        character = mask_of(
            e for e, m in enumerate(center_masks) if (m >> rep) & 1
        )
        try:
            assignment.append(sview.filters.index(character))
        except ValueError:
            return CompactificationReport(sview.space, reflection, None)
    comparison = ContinuousMap(reflection, sview.space, tuple(assignment))
    return CompactificationReport(sview.space, reflection, comparison)


def ultrafilter_space(x: FinSpace) -> FinSpace:
    """Space of ultrafilters on the underlying set, opens generated by the
    images of opens. Candidates are the principal filters, each verified
    against the ultrafilter axioms definitionally."""
    n = x.n
    full = (1 << n) - 1
    points = []
    for i in range(n):
        chosen = {a for a in range(1 << n) if (a >> i) & 1}
        assert 0 not in chosen, "proper"
        for a in chosen:
            for b in range(1 << n):
                if a & ~b == 0:
                    assert b in chosen, "up-closed"
            for b in chosen:
                assert (a & b) in chosen, "meet-closed"
        for a in range(1 << n):
            assert (a in chosen) != ((full & ~a) in chosen), "maximal"
        points.append(x.points[i])
    return FinSpace(tuple(points), x.opens)


def ultrafilter_comparison(x: FinSpace) -> bool:
    """F X is the sobrification of the T0 quotient of the ultrafilter space."""
    ux = ultrafilter_space(x)
    quotient, _ = t0_quotient(ux)
    sober, _ = sobrification(quotient)
    return homeomorphic(filter_space(x), sober)

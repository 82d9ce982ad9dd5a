"""The main instances: finite spaces, finite locales, and the lifting.

The pointwise constructions elsewhere in the package are packaged here as
functors, monads and adjunctions over three universes: finite spaces with
continuous maps, finite distributive lattices with lattice maps (frames),
and the same lattices read as locales, where a morphism from L to M is a
lattice map from M to L and composition reads backwards.

The central chain: the ideal construction carries a monad structure on
locales whose unit is the join map and whose multiplication is the
comultiplication read backwards; the open-set functor is left adjoint to
the spectrum; lifting the locale monad across that adjunction gives a
monad on spaces; and the pairing homeomorphism identifies the lifted
monad with the open-prime-filter monad exactly. Composing with the
Boolean-center monad lifts the compact reflection the same way. Every law
suite at the bottom reruns these claims by enumeration and returns one
status line per law.
"""

from functools import lru_cache
from typing import Callable, List, Tuple

from .catengine import (
    AdjunctionInstance,
    AlgebraInstance,
    ComonadInstance,
    FunctorInstance,
    LawCheck,
    MonadInstance,
    NatTransInstance,
    Universe,
    check_adjunction,
    check_algebra,
    check_algebra_morphism,
    check_comonad_laws,
    check_functor_laws,
    check_lift_law,
    check_monad_laws,
    check_monad_morphism,
    check_naturality,
    comparison_algebra,
    compose_functors,
    identity_functor,
    inverse_comparison,
    lift_composite_iso,
    lift_monad,
    lift_monad_morphism,
    make_comonad,
    make_monad,
)
from .dlat import (
    DistLattice,
    LatticeHom,
    all_lattice_homs,
    compose_homs,
    ideal_functor_hom,
    ideal_lattice,
    ideal_view,
    identity_hom,
    principal_embedding,
    principal_masks,
    prime_filters,
    prime_filters_bruteforce,
    union_hom,
)
from .frame import (
    center_lattice,
    center_view,
    comultiplication_hom,
    comultiplication_via_functor,
    corestrict_to_center,
    counit_hom,
    gamma_coalgebra,
    is_boolean,
    is_regular,
    is_spatial,
    is_stably_compact,
    spatiality_hom,
    spectrum,
    spectrum_map,
    way_below,
)
from .spaces import (
    ContinuousMap,
    FinSpace,
    compose_maps,
    homeomorphic,
    identity_map,
    is_homeomorphism,
    is_t0,
    open_preimage_hom,
    open_set_frame,
)
from .topspace import (
    canonical_algebra,
    filter_map,
    filter_space,
    hausdorff_reflection,
    is_sober,
    mult_map,
    pairing_map,
    sobrification,
    unit_map,
)
from .universes import all_continuous_maps, all_spaces_upto, lattice_universe


def _space_label(x) -> str:
    if isinstance(x, FinSpace):
        return "space[" + " ".join(x.points) + "]"
    return repr(x)


def _lattice_label(lat) -> str:
    if isinstance(lat, DistLattice):
        return "lattice[" + " ".join(lat.elements) + "]"
    return repr(lat)


def _invert_map(f: ContinuousMap):
    if not is_homeomorphism(f):
        return None
    back = [0] * f.target.n
    for i, k in enumerate(f.assignment):
        back[k] = i
    return ContinuousMap(f.target, f.source, tuple(back))


def _invert_hom(h: LatticeHom):
    if sorted(h.assignment) != list(range(h.target.n)):
        return None
    back = [0] * h.target.n
    for i, k in enumerate(h.assignment):
        back[k] = i
    return LatticeHom(h.target, h.source, tuple(back))


@lru_cache(maxsize=None)
def space_universe() -> Universe:
    return Universe(
        name="finite spaces",
        identity=identity_map,
        compose=compose_maps,
        source=lambda f: f.source,
        target=lambda f: f.target,
        invert=_invert_map,
        label=_space_label,
    )


@lru_cache(maxsize=None)
def frame_universe() -> Universe:
    return Universe(
        name="finite frames",
        identity=identity_hom,
        compose=compose_homs,
        source=lambda h: h.source,
        target=lambda h: h.target,
        invert=_invert_hom,
        label=_lattice_label,
    )


@lru_cache(maxsize=None)
def locale_universe() -> Universe:
    """Frames with every arrow read backwards."""
    return Universe(
        name="finite locales",
        identity=identity_hom,
        compose=lambda after, m: compose_homs(m, after),
        source=lambda h: h.target,
        target=lambda h: h.source,
        invert=_invert_hom,
        label=_lattice_label,
    )


# ---------------------------------------------------------------------------
# morphism pools for the enumerating checks


@lru_cache(maxsize=None)
def frame_morphisms(max_poset: int = 2) -> Tuple[LatticeHom, ...]:
    """Every lattice map between universe lattices of the given size."""
    lats = lattice_universe(max_poset)
    out = []
    for a in lats:
        for b in lats:
            out.extend(all_lattice_homs(a, b))
    return tuple(out)


@lru_cache(maxsize=None)
def space_morphisms(max_points: int = 2) -> Tuple[ContinuousMap, ...]:
    """Every continuous map between spaces of the given size."""
    spaces = all_spaces_upto(max_points)
    out = []
    for x in spaces:
        for y in spaces:
            out.extend(all_continuous_maps(x, y))
    return tuple(out)


# ---------------------------------------------------------------------------
# the instances


def ideal_functor_on_frames() -> FunctorInstance:
    u = frame_universe()
    return FunctorInstance("ideals", u, u, ideal_lattice, ideal_functor_hom)


def ideal_monad_on_frames() -> MonadInstance:
    """Ideals with the principal-ideal unit and the union multiplication."""
    return make_monad(
        "ideal monad", ideal_functor_on_frames(), principal_embedding, union_hom
    )


def ideal_comonad_on_frames() -> ComonadInstance:
    """Ideals with the join counit and the membership comultiplication."""
    return make_comonad(
        "ideal comonad",
        ideal_functor_on_frames(),
        counit_hom,
        comultiplication_hom,
    )


def ideal_functor_on_locales() -> FunctorInstance:
    u = locale_universe()
    return FunctorInstance("ideals", u, u, ideal_lattice, ideal_functor_hom)


def ideal_monad_on_locales() -> MonadInstance:
    """The comonad read backwards: unit is the join map, multiplication
    the comultiplication."""
    return make_monad(
        "locale ideal monad",
        ideal_functor_on_locales(),
        counit_hom,
        comultiplication_hom,
    )


def identity_monad_on_locales() -> MonadInstance:
    u = locale_universe()
    return make_monad(
        "locale identity monad", identity_functor(u), identity_hom, identity_hom
    )


def open_functor() -> FunctorInstance:
    return FunctorInstance(
        "open sets",
        space_universe(),
        locale_universe(),
        open_set_frame,
        open_preimage_hom,
    )


def spectrum_functor() -> FunctorInstance:
    return FunctorInstance(
        "spectrum", locale_universe(), space_universe(), spectrum, spectrum_map
    )


def open_spectrum_adjunction() -> AdjunctionInstance:
    """Open sets below spectrum, with the sobrification unit and the
    spatial comparison counit."""
    left, right = open_functor(), spectrum_functor()
    unit = NatTransInstance(
        "sobrification unit",
        identity_functor(space_universe()),
        compose_functors(right, left),
        lambda x: sobrification(x)[1],
    )
    counit = NatTransInstance(
        "spatial comparison",
        compose_functors(left, right),
        identity_functor(locale_universe()),
        spatiality_hom,
    )
    return AdjunctionInstance("open sets below spectrum", left, right, unit, counit)


def filter_monad_on_spaces() -> MonadInstance:
    u = space_universe()
    functor = FunctorInstance("prime open filters", u, u, filter_space, filter_map)
    return make_monad("filter monad", functor, unit_map, mult_map)


def lifted_ideal_monad() -> MonadInstance:
    """The locale ideal monad pushed across the adjunction: the spectrum
    of the ideals of the opens."""
    return lift_monad(
        open_spectrum_adjunction(), ideal_monad_on_locales(), "spectral ideal monad"
    )


def sobrification_monad() -> MonadInstance:
    """The lifted identity monad; its functor is the sobrification."""
    return lift_monad(
        open_spectrum_adjunction(),
        identity_monad_on_locales(),
        "sobrification monad",
    )


def sobrification_to_filters() -> NatTransInstance:
    """The lifted join unit, a morphism of monads from sobrification to
    the spectral ideal monad."""
    return lift_monad_morphism(
        open_spectrum_adjunction(),
        ideal_monad_on_locales().unit,
        sobrification_monad(),
        lifted_ideal_monad(),
    )


def center_functor_on_locales() -> FunctorInstance:
    u = locale_universe()

    def on_morphism(h: LatticeHom) -> LatticeHom:
        restricted = compose_homs(h, center_view(h.source).inclusion)
        cor = corestrict_to_center(restricted)
        assert cor is not None, "lattice maps preserve complements"
        return cor

    return FunctorInstance("center", u, u, center_lattice, on_morphism)


def center_monad_on_locales() -> MonadInstance:
    """The Boolean center as a monad on locales; its unit is the
    inclusion read backwards."""

    def unit_at(lat: DistLattice) -> LatticeHom:
        return center_view(lat).inclusion

    def mult_at(lat: DistLattice) -> LatticeHom:
        cor = corestrict_to_center(identity_hom(center_lattice(lat)))
        assert cor is not None, "a center is its own center"
        return cor

    return make_monad("center monad", center_functor_on_locales(), unit_at, mult_at)


def center_ideal_monad_on_locales() -> MonadInstance:
    """Complemented ideals in one step: the composite of the center and
    ideal monads, with the join-of-the-inclusion unit and the principal
    multiplication."""
    functor = compose_functors(
        center_functor_on_locales(), ideal_functor_on_locales()
    )

    def unit_at(lat: DistLattice) -> LatticeHom:
        inclusion = center_view(ideal_lattice(lat)).inclusion
        return compose_homs(counit_hom(lat), inclusion)

    def mult_at(lat: DistLattice) -> LatticeHom:
        carrier = functor.on_object(lat)
        cor = corestrict_to_center(principal_embedding(carrier))
        assert cor is not None, "principal ideals of complemented elements"
        return cor

    return make_monad("complemented ideal monad", functor, unit_at, mult_at)


def compact_reflection_monad() -> MonadInstance:
    """The lifted complemented-ideal monad: the spectrum of the Boolean
    center of the ideals of the opens."""
    return lift_monad(
        open_spectrum_adjunction(),
        center_ideal_monad_on_locales(),
        "compact reflection monad",
    )


def compactification_collapse() -> NatTransInstance:
    """Collapse of lift(center) after lift(ideals) onto the lifted composite."""
    return lift_composite_iso(
        open_spectrum_adjunction(),
        center_functor_on_locales(),
        ideal_functor_on_locales(),
    )


# ---------------------------------------------------------------------------
# law suites


def _each(name: str, labeled_cases) -> LawCheck:
    """Collapse (label, ok) pairs into one status line."""
    for label, ok in labeled_cases:
        if not ok:
            return LawCheck(name, False, label)
    return LawCheck(name, True)


def _positions(items):
    total = len(items)
    for i, item in enumerate(items):
        yield f"{i + 1}/{total}", item


def frame_suite(max_poset: int = 3, max_points: int = 2) -> List[LawCheck]:
    """Ideal monad and comonad over the lattice universe."""
    lats = lattice_universe(max_poset)
    homs = frame_morphisms(min(max_poset, 2))
    t = ideal_monad_on_frames()
    k = ideal_comonad_on_frames()
    checks = list(check_functor_laws(t.functor, lats, homs))
    checks += check_monad_laws(t, lats)
    checks.append(check_naturality(t.unit, homs))
    checks.append(check_naturality(t.mult, homs))
    checks += check_comonad_laws(k, lats)
    checks.append(check_naturality(k.counit, homs))
    checks.append(check_naturality(k.comult, homs))
    checks.append(
        _each(
            "comultiplication agrees with the functored unit",
            (
                (label, comultiplication_hom(l) == comultiplication_via_functor(l))
                for label, l in _positions(lats)
            ),
        )
    )
    return checks


def locale_suite(max_poset: int = 3, max_points: int = 2) -> List[LawCheck]:
    """Ideal, center, and complemented-ideal monads on locales."""
    lats = lattice_universe(max_poset)
    homs = frame_morphisms(min(max_poset, 2))
    checks: List[LawCheck] = []
    for monad in (
        ideal_monad_on_locales(),
        center_monad_on_locales(),
        center_ideal_monad_on_locales(),
    ):
        checks += check_functor_laws(monad.functor, lats, homs)
        checks += check_monad_laws(monad, lats)
        checks.append(check_naturality(monad.unit, homs))
        checks.append(check_naturality(monad.mult, homs))
    return checks


def space_suite(max_poset: int = 3, max_points: int = 2) -> List[LawCheck]:
    """Filter monad over the space universe."""
    spaces = all_spaces_upto(max_points)
    maps = space_morphisms(min(max_points, 2))
    f = filter_monad_on_spaces()
    checks = list(check_functor_laws(f.functor, spaces, maps))
    checks += check_monad_laws(f, spaces)
    checks.append(check_naturality(f.unit, maps))
    checks.append(check_naturality(f.mult, maps))
    checks.append(
        _each(
            "canonical algebra exists exactly on T0 spaces",
            (
                (label, _has_canonical_algebra(x) == is_t0(x))
                for label, x in _positions(spaces)
            ),
        )
    )
    return checks


def _has_canonical_algebra(x: FinSpace) -> bool:
    eta = unit_map(x)
    return len(set(eta.assignment)) == x.n


def adjunction_suite(max_poset: int = 3, max_points: int = 2) -> List[LawCheck]:
    """Triangle identities and naturality for open sets below spectrum."""
    adj = open_spectrum_adjunction()
    spaces = all_spaces_upto(max_points)
    lats = lattice_universe(max_poset)
    checks = list(check_adjunction(adj, spaces, lats))
    checks += check_functor_laws(
        adj.left, spaces, space_morphisms(min(max_points, 2))
    )
    checks += check_functor_laws(
        adj.right, lats, frame_morphisms(min(max_poset, 2))
    )
    checks.append(check_naturality(adj.unit, space_morphisms(min(max_points, 2))))
    checks.append(check_naturality(adj.counit, frame_morphisms(min(max_poset, 2))))
    checks.append(
        _each(
            "counit is an isomorphism (spatiality)",
            ((label, is_spatial(l)) for label, l in _positions(lats)),
        )
    )
    return checks


def lifting_suite(max_poset: int = 3, max_points: int = 2) -> List[LawCheck]:
    """The lifted monad, its identification with the filter monad, the
    lift-law squares, and both comparison round trips."""
    adj = open_spectrum_adjunction()
    t = ideal_monad_on_locales()
    m = lifted_ideal_monad()
    spaces = all_spaces_upto(max_points)
    lats = lattice_universe(max_poset)
    maps = space_morphisms(min(max_points, 2))
    checks = list(check_monad_laws(m, spaces))
    checks.append(check_naturality(m.unit, maps))
    checks.append(check_naturality(m.mult, maps))

    def transport_cases():
        for label, x in _positions(spaces):
            p = pairing_map(x)
            unit_ok = compose_maps(p, unit_map(x)) == m.unit.component(x)
            doubled = compose_maps(
                m.functor.on_morphism(p), pairing_map(filter_space(x))
            )
            mult_ok = compose_maps(m.mult.component(x), doubled) == compose_maps(
                p, mult_map(x)
            )
            yield label, is_homeomorphism(p) and unit_ok and mult_ok

    checks.append(_each("pairing carries the filter monad exactly", transport_cases()))

    h = sobrification_monad()
    checks.append(
        _each(
            "lifted identity monad is the sobrification",
            (
                (
                    label,
                    h.functor.on_object(x) == sobrification(x)[0]
                    and h.unit.component(x) == sobrification(x)[1],
                )
                for label, x in _positions(spaces)
            ),
        )
    )
    checks += check_monad_laws(h, spaces)
    sigma = sobrification_to_filters()
    checks += check_monad_morphism(sigma, h, m, spaces)
    checks.append(check_naturality(sigma, maps))
    checks += check_lift_law(adj, t, m, lats)
    checks.append(_each("algebras round trip from locales", _locale_round_trips(lats)))
    checks.append(
        _each("algebras round trip from spaces", _space_round_trips(spaces))
    )
    collapse = compactification_collapse()
    checks.append(
        _each(
            "lifted composite collapses invertibly",
            (
                (label, _invert_map(collapse.component(x)) is not None)
                for label, x in _positions(spaces)
            ),
        )
    )
    checks.append(check_naturality(collapse, maps))
    return checks


def _locale_round_trips(lats):
    adj = open_spectrum_adjunction()
    t = ideal_monad_on_locales()
    m = lifted_ideal_monad()
    loc = locale_universe()
    for label, lat in _positions(lats):
        structure = gamma_coalgebra(lat).structure
        t_alg = AlgebraInstance(t, lat, structure)
        ok = all(c.ok for c in check_algebra(t_alg))
        m_alg = comparison_algebra(adj, t, m, t_alg)
        ok = ok and all(c.ok for c in check_algebra(m_alg))
        back = inverse_comparison(adj, t, m_alg)
        ok = ok and all(c.ok for c in check_algebra(back))
        eps = adj.counit.component(lat)
        ok = ok and loc.invert(eps) is not None
        ok = ok and check_algebra_morphism(back, t_alg, eps)
        yield label, ok


def _space_round_trips(spaces):
    adj = open_spectrum_adjunction()
    t = ideal_monad_on_locales()
    m = lifted_ideal_monad()
    top = space_universe()
    for label, x in _positions(spaces):
        if not is_t0(x):
            yield label, True
            continue
        p = pairing_map(x)
        back_p = _invert_map(p)
        alpha = compose_maps(canonical_algebra(x), back_p)
        m_alg = AlgebraInstance(m, x, alpha)
        ok = all(c.ok for c in check_algebra(m_alg))
        t_alg = inverse_comparison(adj, t, m_alg)
        ok = ok and all(c.ok for c in check_algebra(t_alg))
        again = comparison_algebra(adj, t, m, t_alg)
        ok = ok and all(c.ok for c in check_algebra(again))
        eta = adj.unit.component(x)
        ok = ok and top.invert(eta) is not None
        ok = ok and check_algebra_morphism(m_alg, again, eta)
        yield label, ok


def compactification_suite(max_poset: int = 3, max_points: int = 2) -> List[LawCheck]:
    """The compact reflection monad and its agreement with the clopen
    quotient of the filter space."""
    spaces = all_spaces_upto(max_points)
    maps = space_morphisms(min(max_points, 2))
    beta = compact_reflection_monad()
    checks = list(check_monad_laws(beta, spaces))
    checks.append(check_naturality(beta.unit, maps))
    checks.append(check_naturality(beta.mult, maps))
    checks.append(
        _each(
            "compactification matches the clopen quotient of the filter space",
            (
                (
                    label,
                    homeomorphic(
                        beta.functor.on_object(x),
                        hausdorff_reflection(filter_space(x))[0],
                    ),
                )
                for label, x in _positions(spaces)
            ),
        )
    )

    def unit_factors():
        m = lifted_ideal_monad()
        b = center_monad_on_locales()
        adj = open_spectrum_adjunction()
        collapse = compactification_collapse()
        lifted_center = lift_monad(adj, b, "spectral center monad")
        for label, x in _positions(spaces):
            mx = m.functor.on_object(x)
            route = compose_maps(
                collapse.component(x),
                compose_maps(lifted_center.unit.component(mx), m.unit.component(x)),
            )
            yield label, route == beta.unit.component(x)

    checks.append(_each("reflection unit factors through both liftings", unit_factors()))
    return checks


def degeneracy_suite(max_poset: int = 4, max_points: int = 3) -> List[LawCheck]:
    """Finite-scale degeneracies, each checked against an independent
    route: way-below is the order, regular is Boolean, every ideal is
    principal, both prime-filter routes agree, the comparison into the
    spectrum is bijective, everything is stably compact, and sober is T0."""
    lats = lattice_universe(max_poset)
    spaces = all_spaces_upto(max_points)
    checks = [
        _each(
            "way below equals the order",
            (
                (label, way_below(l).below == l.poset.down)
                for label, l in _positions(lats)
            ),
        ),
        _each(
            "regular equals Boolean",
            ((label, is_regular(l) == is_boolean(l)) for label, l in _positions(lats)),
        ),
        _each(
            "every ideal is principal",
            (
                (label, tuple(sorted(ideal_view(l).masks)) == principal_masks(l))
                for label, l in _positions(lats)
            ),
        ),
        _each(
            "prime filter routes agree",
            (
                (
                    label,
                    tuple(f.members for f in prime_filters(l))
                    == prime_filters_bruteforce(l),
                )
                for label, l in _positions(lats)
            ),
        ),
        _each(
            "spatiality comparison is bijective",
            ((label, is_spatial(l)) for label, l in _positions(lats)),
        ),
        _each(
            "everything is stably compact",
            ((label, is_stably_compact(l)) for label, l in _positions(lats)),
        ),
        _each(
            "sober equals T0",
            ((label, is_sober(x) == is_t0(x)) for label, x in _positions(spaces)),
        ),
    ]
    return checks


LAW_SUITES: dict = {
    "frames": frame_suite,
    "locales": locale_suite,
    "spaces": space_suite,
    "adjunction": adjunction_suite,
    "lifting": lifting_suite,
    "compactification": compactification_suite,
    "degeneracy": degeneracy_suite,
}


def run_suite(name: str, max_poset: int = 3, max_points: int = 2) -> List[LawCheck]:
    if name not in LAW_SUITES:
        known = ", ".join(sorted(LAW_SUITES))
        raise ValueError(f"unknown suite {name!r}; known suites: {known}")
    return LAW_SUITES[name](max_poset=max_poset, max_points=max_points)

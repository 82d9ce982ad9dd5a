"""Wired-up instances: universes, monads, the adjunction, and the suites."""

from hypothesis import given, settings
from hypothesis import strategies as st

import pytest

from stonekit.catengine import check_naturality
from stonekit.dlat import compose_homs, identity_hom, two_lattice
from stonekit.frame import counit_hom, spectrum_map
from stonekit.instances import (
    LAW_SUITES,
    adjunction_suite,
    compact_reflection_monad,
    compactification_collapse,
    compactification_suite,
    degeneracy_suite,
    filter_monad_on_spaces,
    frame_morphisms,
    frame_suite,
    frame_universe,
    ideal_monad_on_frames,
    ideal_monad_on_locales,
    lifted_ideal_monad,
    lifting_suite,
    locale_suite,
    locale_universe,
    open_spectrum_adjunction,
    run_suite,
    sobrification_to_filters,
    space_morphisms,
    space_suite,
    space_universe,
)
from stonekit.spaces import discrete_space, open_set_frame, sierpinski
from stonekit.topspace import filter_space, unit_map
from stonekit.universes import all_spaces_upto, lattice_universe


def test_universes_are_singletons():
    assert space_universe() is space_universe()
    assert frame_universe() is frame_universe()
    assert locale_universe() is locale_universe()


def test_locale_universe_reads_backwards():
    lats = lattice_universe(2)
    two = next(l for l in lats if l.n == 2)
    chain = next(l for l in lats if l.n == 3)
    h = next(
        g for g in frame_morphisms(2) if g.source == two and g.target == chain
    )
    frm, loc = frame_universe(), locale_universe()
    assert frm.source(h) == two and frm.target(h) == chain
    assert loc.source(h) == chain and loc.target(h) == two
    g = next(
        k for k in frame_morphisms(2) if k.source == chain and k.target == two
    )
    assert loc.compose(g, h) == compose_homs(h, g)


def test_space_universe_inverts_only_homeomorphisms():
    u = space_universe()
    x = next(
        y for y in all_spaces_upto(2) if y.n == 2 and len(y.opens) == 4
    )
    endos = [f for f in space_morphisms(2) if f.source == x and f.target == x]
    assert len(endos) == 4
    invertible = [f for f in endos if u.invert(f) is not None]
    assert len(invertible) == 2
    for f in invertible:
        assert u.compose(u.invert(f), f) == u.identity(x)
    collapse = next(f for f in endos if len(set(f.assignment)) == 1)
    assert u.invert(collapse) is None


def test_frame_universe_inverts_only_bijections():
    u = frame_universe()
    two = next(l for l in lattice_universe(2) if l.n == 2)
    assert u.invert(identity_hom(two)) == identity_hom(two)
    assert u.invert(identity_hom(two_lattice())) == identity_hom(two_lattice())
    squash = next(
        h
        for h in frame_morphisms(2)
        if h.source.n == 3 and h.target.n == 3 and len(set(h.assignment)) == 2
    )
    assert u.invert(squash) is None


def test_lifted_monad_object_sizes_are_frozen():
    m = lifted_ideal_monad()
    s = sierpinski()
    assert m.functor.on_object(s).n == 2
    assert m.functor.on_object(s).n == filter_space(s).n
    beta = compact_reflection_monad()
    assert beta.functor.on_object(s).n == 1
    assert beta.functor.on_object(discrete_space(("a", "b"))).n == 2


def test_lifted_unit_mirrors_the_filter_unit_profile():
    m = lifted_ideal_monad()
    s = sierpinski()
    lifted = m.unit.component(s)
    plain = unit_map(s)
    assert len(set(lifted.assignment)) == len(set(plain.assignment))


def test_monad_morphism_component_is_the_lifted_join():
    sigma = sobrification_to_filters()
    s = sierpinski()
    expected = spectrum_map(counit_hom(open_set_frame(s)))
    assert sigma.component(s) == expected


def test_collapse_components_are_homeomorphisms():
    u = space_universe()
    collapse = compactification_collapse()
    for x in all_spaces_upto(2):
        comp = collapse.component(x)
        assert u.invert(comp) is not None


def test_frame_suite_is_green():
    for check in frame_suite(max_poset=3):
        assert check.ok, str(check)


def test_locale_suite_is_green():
    for check in locale_suite(max_poset=3):
        assert check.ok, str(check)


def test_space_suite_is_green():
    for check in space_suite(max_points=3):
        assert check.ok, str(check)


def test_adjunction_suite_is_green():
    for check in adjunction_suite(max_poset=3, max_points=3):
        assert check.ok, str(check)


def test_lifting_suite_is_green():
    for check in lifting_suite(max_poset=3, max_points=2):
        assert check.ok, str(check)


def test_compactification_suite_is_green():
    for check in compactification_suite(max_poset=2, max_points=2):
        assert check.ok, str(check)


def test_degeneracy_suite_is_green():
    for check in degeneracy_suite(max_poset=3, max_points=3):
        assert check.ok, str(check)


def test_suite_registry_routes_by_name():
    names = sorted(LAW_SUITES)
    assert names == [
        "adjunction",
        "compactification",
        "degeneracy",
        "frames",
        "lifting",
        "locales",
        "spaces",
    ]
    checks = run_suite("frames", max_poset=2, max_points=2)
    assert checks and all(c.ok for c in checks)
    with pytest.raises(ValueError):
        run_suite("nonsense")


@given(st.data())
@settings(max_examples=25, deadline=None)
def test_filter_and_lifted_units_are_natural_on_sampled_maps(data):
    maps = space_morphisms(2)
    f = data.draw(st.sampled_from(maps))
    for monad in (filter_monad_on_spaces(), lifted_ideal_monad()):
        check = check_naturality(monad.unit, [f])
        assert check.ok, str(check)


@given(st.sampled_from(lattice_universe(3)))
@settings(max_examples=24, deadline=None)
def test_triangle_identity_holds_on_sampled_lattices(lat):
    adj = open_spectrum_adjunction()
    top = space_universe()
    spec = adj.right.on_object(lat)
    lhs = top.compose(
        adj.right.on_morphism(adj.counit.component(lat)),
        adj.unit.component(spec),
    )
    assert lhs == top.identity(spec)


@given(st.sampled_from(all_spaces_upto(3)))
@settings(max_examples=35, deadline=None)
def test_lifted_monad_unit_laws_hold_on_sampled_spaces(x):
    m = lifted_ideal_monad()
    u = space_universe()
    mx = m.functor.on_object(x)
    left = u.compose(m.mult.component(x), m.unit.component(mx))
    right = u.compose(m.mult.component(x), m.functor.on_morphism(m.unit.component(x)))
    assert left == u.identity(mx)
    assert right == u.identity(mx)


def test_ideal_monads_share_their_functor_object_map():
    frm = ideal_monad_on_frames()
    loc = ideal_monad_on_locales()
    for lat in lattice_universe(2):
        assert frm.functor.on_object(lat) == loc.functor.on_object(lat)

"""Open-prime-filter monad, separation quotients, compactification square."""

import pytest
from hypothesis import given, settings, strategies as st

from stonekit.errors import NoCanonicalAlgebra
from stonekit.frame import spectrum_map
from stonekit.spaces import (
    ContinuousMap,
    compose_maps,
    discrete_space,
    disjoint_union,
    homeomorphic,
    identity_map,
    indiscrete_space,
    is_homeomorphism,
    is_t0,
    open_preimage_hom,
    sierpinski,
)
from stonekit.topspace import (
    OpenPrimeFilter,
    canonical_algebra,
    check_filter_algebra,
    compactification_square,
    filter_algebra_structures,
    filter_map,
    filter_space,
    filter_space_view,
    hausdorff_reflection,
    is_sober,
    mult_map,
    neighborhood_filter,
    open_frame_of_filters_iso,
    open_prime_filters,
    pairing_map,
    sobrification,
    t0_quotient,
    ultrafilter_comparison,
    ultrafilter_space,
    unit_map,
)
from stonekit.universes import all_continuous_maps, all_spaces, all_spaces_upto


def test_filter_space_of_sierpinski():
    assert homeomorphic(filter_space(sierpinski()), sierpinski())


def test_filter_space_of_indiscrete_is_a_point():
    assert filter_space(indiscrete_space(["a", "b"])).n == 1


def test_filter_space_of_discrete_pair():
    assert homeomorphic(
        filter_space(discrete_space(["a", "b"])), discrete_space(["a", "b"])
    )


def test_filter_points_name_their_contents():
    fs = filter_space(sierpinski())
    assert fs.points == ("{{0,1}}", "{{1},{0,1}}")


def test_neighborhood_filters_frozen():
    s = sierpinski()
    assert neighborhood_filter(s, "0").members == 0b100
    assert neighborhood_filter(s, "1").members == 0b110


def test_indiscrete_points_share_their_filter():
    x = indiscrete_space(["a", "b"])
    assert neighborhood_filter(x, "a") == neighborhood_filter(x, "b")


def test_filter_validation_messages():
    s = sierpinski()
    with pytest.raises(ValueError, match="empty set"):
        OpenPrimeFilter(s, 0b111)
    with pytest.raises(ValueError, match="up-closed"):
        OpenPrimeFilter(s, 0b010)
    with pytest.raises(ValueError, match="empty"):
        OpenPrimeFilter(s, 0)


def test_unit_is_continuous_and_injective_on_t0():
    s = sierpinski()
    eta = unit_map(s)
    assert len(set(eta.assignment)) == s.n


def test_monad_laws_small_spaces():
    for x in all_spaces_upto(2):
        fx = filter_space(x)
        mu = mult_map(x)
        assert compose_maps(mu, unit_map(fx)) == identity_map(fx)
        assert compose_maps(mu, filter_map(unit_map(x))) == identity_map(fx)
        assert compose_maps(mu, mult_map(fx)) == compose_maps(mu, filter_map(mu))


def test_unit_naturality_on_all_small_maps():
    spaces = all_spaces_upto(2)
    for x in spaces:
        for y in spaces:
            for f in all_continuous_maps(x, y):
                assert compose_maps(filter_map(f), unit_map(x)) == compose_maps(
                    unit_map(y), f
                )


def test_mult_naturality_on_sierpinski_endos():
    s = sierpinski()
    for f in all_continuous_maps(s, s):
        lhs = compose_maps(mult_map(s), filter_map(filter_map(f)))
        rhs = compose_maps(filter_map(f), mult_map(s))
        assert lhs == rhs


def test_functoriality_of_filter_map():
    s = sierpinski()
    d = discrete_space(["a", "b"])
    f = ContinuousMap(d, s, (0, 1))
    g = ContinuousMap(s, s, (1, 1))
    assert filter_map(compose_maps(g, f)) == compose_maps(filter_map(g), filter_map(f))
    assert filter_map(identity_map(s)) == identity_map(filter_space(s))


# ---------------------------------------------------------------------------
# canonical algebras


def test_canonical_algebra_on_sierpinski():
    alpha = canonical_algebra(sierpinski())
    report = check_filter_algebra(alpha)
    assert report.ok


def test_no_algebra_on_indiscrete_pair():
    with pytest.raises(NoCanonicalAlgebra) as exc:
        canonical_algebra(indiscrete_space(["a", "b"]))
    assert set(exc.value.witness) == {"a", "b"}


def test_no_algebra_on_four_point_non_t0():
    x = disjoint_union(indiscrete_space(["a", "b"]), discrete_space(["c", "d"]))
    assert not is_t0(x)
    with pytest.raises(NoCanonicalAlgebra):
        canonical_algebra(x)


def test_algebra_structures_unique_iff_t0():
    for x in all_spaces_upto(2):
        found = filter_algebra_structures(x)
        if is_t0(x):
            assert found == (canonical_algebra(x),)
        else:
            assert found == ()


def test_every_map_between_t0_spaces_is_an_algebra_morphism():
    spaces = [x for x in all_spaces_upto(2) if is_t0(x)]
    for x in spaces:
        for y in spaces:
            ax, ay = canonical_algebra(x), canonical_algebra(y)
            for f in all_continuous_maps(x, y):
                assert compose_maps(f, ax) == compose_maps(ay, filter_map(f))


# ---------------------------------------------------------------------------
# separation quotients


def test_t0_quotient_of_indiscrete():
    q_space, q = t0_quotient(indiscrete_space(["a", "b"]))
    assert q_space.n == 1
    assert q.assignment == (0, 0)


def test_t0_quotient_is_identity_like_on_t0():
    s = sierpinski()
    q_space, q = t0_quotient(s)
    assert is_homeomorphism(q)
    assert q_space.points == ("{0}", "{1}")


def test_t0_quotient_universality():
    x = disjoint_union(indiscrete_space(["a", "b"]), discrete_space(["c"]))
    q_space, q = t0_quotient(x)
    targets = [s for s in all_spaces_upto(2) if is_t0(s)]
    for z in targets:
        for f in all_continuous_maps(x, z):
            lifts = [
                g
                for g in all_continuous_maps(q_space, z)
                if compose_maps(g, q) == f
            ]
            assert len(lifts) == 1


def test_sober_iff_t0_at_finite_scale():
    for x in all_spaces(3):
        assert is_sober(x) == is_t0(x)


def test_sobrification_of_t0_space_is_identity_up_to_homeo():
    s = sierpinski()
    sober, unit = sobrification(s)
    assert is_homeomorphism(unit)


def test_sobrification_collapses_indiscrete():
    sober, unit = sobrification(indiscrete_space(["a", "b"]))
    assert sober.n == 1
    assert unit.assignment == (0, 0)


def test_filter_space_is_sobrification_of_t0_quotient():
    for x in all_spaces(2):
        q_space, _ = t0_quotient(x)
        sober, _ = sobrification(q_space)
        assert homeomorphic(filter_space(x), sober)


# ---------------------------------------------------------------------------
# pairing


def test_pairing_is_homeomorphism_small():
    for x in all_spaces_upto(2):
        assert is_homeomorphism(pairing_map(x))


def test_pairing_naturality_small():
    from stonekit.dlat import ideal_functor_hom

    spaces = all_spaces_upto(2)
    for x in spaces:
        for y in spaces:
            for f in all_continuous_maps(x, y):
                # transported filter map must agree with the spectral route
                lhs = compose_maps(pairing_map(y), filter_map(f))
                rhs_map = spectrum_map(ideal_functor_hom(open_preimage_hom(f)))
                rhs = compose_maps(rhs_map, pairing_map(x))
                assert lhs == rhs


def test_open_frame_of_filters_iso_small():
    for x in all_spaces_upto(2):
        h = open_frame_of_filters_iso(x)
        assert sorted(h.assignment) == list(range(h.target.n))


# ---------------------------------------------------------------------------
# Hausdorff reflection and the compactification square


def test_hausdorff_reflection_examples():
    r, _ = hausdorff_reflection(sierpinski())
    assert r.n == 1
    r2, _ = hausdorff_reflection(discrete_space(["a", "b"]))
    assert r2.n == 2
    mixed = disjoint_union(sierpinski(), discrete_space(["p"]))
    r3, proj = hausdorff_reflection(mixed)
    assert r3.n == 2
    assert proj.assignment == (0, 0, 1)


def test_hausdorff_reflection_is_idempotent():
    for x in all_spaces_upto(2):
        r, _ = hausdorff_reflection(x)
        rr, again = hausdorff_reflection(r)
        assert is_homeomorphism(again)


def test_hausdorff_universality_to_discrete():
    x = disjoint_union(sierpinski(), discrete_space(["p"]))
    r, proj = hausdorff_reflection(x)
    for d in (discrete_space(["0"]), discrete_space(["0", "1"])):
        for f in all_continuous_maps(x, d):
            lifts = [
                g
                for g in all_continuous_maps(r, d)
                if compose_maps(g, proj) == f
            ]
            assert len(lifts) == 1


def test_compactification_square_on_samples():
    for x in (
        sierpinski(),
        discrete_space(["a", "b"]),
        indiscrete_space(["a", "b"]),
        disjoint_union(sierpinski(), discrete_space(["p"])),
    ):
        report = compactification_square(x)
        assert report.ok
        assert report.spectral_side.n == report.reflection_side.n


def test_compactification_of_sierpinski_is_a_point():
    report = compactification_square(sierpinski())
    assert report.spectral_side.n == 1


# ---------------------------------------------------------------------------
# ultrafilters


def test_ultrafilter_space_is_the_space_itself():
    for x in (sierpinski(), discrete_space(["a", "b"]), indiscrete_space(["a", "b"])):
        assert ultrafilter_space(x) == x


def test_ultrafilter_comparison_small():
    for x in all_spaces_upto(2):
        assert ultrafilter_comparison(x)


@settings(max_examples=40)
@given(st.sampled_from(all_spaces(3)))
def test_filter_space_count_equals_t0_classes(x):
    # eta is onto: filters biject with minimal-neighborhood classes
    assert filter_space(x).n == len({x.min_nbhd(i) for i in range(x.n)})


@settings(max_examples=40)
@given(st.sampled_from(all_spaces(3)))
def test_unit_laws_on_random_three_point_spaces(x):
    fx = filter_space(x)
    mu = mult_map(x)
    assert compose_maps(mu, unit_map(fx)) == identity_map(fx)
    assert compose_maps(mu, filter_map(unit_map(x))) == identity_map(fx)

"""Way-below, stable compactness, regularity, spectra, the ideal comonad."""

import pytest
from hypothesis import given, strategies as st

from stonekit.dlat import (
    LatticeHom,
    all_lattice_homs,
    compose_homs,
    downset_lattice,
    homs_to_2,
    ideal_view,
    lattice_isomorphic,
    principal_embedding,
    two_lattice,
)
from stonekit.errors import BudgetExceeded
from stonekit.frame import (
    CoalgebraCandidate,
    center_lattice,
    center_view,
    check_coalgebra,
    coalgebra_structures,
    comultiplication_hom,
    comultiplication_ideal,
    comultiplication_via_functor,
    corestrict_to_center,
    counit_hom,
    gamma_coalgebra,
    is_boolean,
    is_compact,
    is_proper_hom,
    is_regular,
    is_spatial,
    is_stably_compact,
    pseudocomplement,
    point_character,
    spatiality_hom,
    spectrum,
    spectrum_view,
    stably_compact_report,
    way_below,
    well_inside_masks,
)
from stonekit.order import antichain, chain, order_closure
from stonekit.spaces import discrete_space, homeomorphic, sierpinski
from stonekit.universes import lattice_universe


def diamond():
    return downset_lattice(antichain(["a", "b"]))


def chain3():
    return downset_lattice(chain(["a", "b"]))


def six():
    """Downsets of (a < b, c separate): smallest center strictly between."""
    return downset_lattice(order_closure(["a", "b", "c"], [("a", "b")]))


# ---------------------------------------------------------------------------
# way-below


def test_way_below_collapses_to_order_on_samples():
    for lat in (two_lattice(), chain3(), diamond(), six()):
        assert way_below(lat).below == lat.poset.down


def test_way_below_pairs_readable():
    wb = way_below(chain3())
    assert wb.holds("{}", "{a}")
    assert wb.holds("{a}", "{a}")
    assert not wb.holds("{a,b}", "{a}")


def test_every_universe_lattice_is_compact():
    assert all(is_compact(lat) for lat in lattice_universe(3))


def test_universe_is_stably_compact():
    for lat in lattice_universe(3):
        report = stably_compact_report(lat)
        assert report.ok, report.witness


def test_stably_compact_bool():
    assert is_stably_compact(diamond())


# ---------------------------------------------------------------------------
# regularity and the center


def test_pseudocomplement_in_chain():
    c = chain3()
    assert pseudocomplement(c, c.index("{a}")) == c.bot
    assert pseudocomplement(c, c.bot) == c.top
    assert pseudocomplement(c, c.top) == c.bot


def test_well_inside_chain_frozen():
    # only bottom sits well inside the middle level
    c = chain3()
    inside = well_inside_masks(c)
    assert inside[c.index("{a}")] == 1 << c.bot
    assert inside[c.top] == (1 << c.n) - 1


def test_regularity_examples():
    assert not is_regular(chain3())
    assert is_regular(diamond())
    assert is_regular(two_lattice())


def test_regular_iff_boolean_on_universe():
    for lat in lattice_universe(3):
        assert is_regular(lat) == is_boolean(lat)


def test_center_of_chain_is_two():
    assert lattice_isomorphic(center_lattice(chain3()), two_lattice())


def test_center_of_six_frozen():
    center = center_view(six())
    assert center.lattice.n == 4
    assert set(center.lattice.elements) == {"{}", "{c}", "{a,b}", "{a,b,c}"}


def test_center_of_boolean_is_everything():
    assert center_lattice(diamond()) == diamond()


def test_center_couniversality_by_enumeration():
    target = six()
    incl = center_view(target).inclusion
    for source in (two_lattice(), diamond(), downset_lattice(antichain(list("abc")))):
        assert is_boolean(source)
        for hom in all_lattice_homs(source, target):
            through = corestrict_to_center(hom)
            assert through is not None  # Boolean images land in the center
            assert compose_homs(incl, through) == hom
            # inclusion is injective, so the factorization is forced
            assert all(
                incl.assignment[v] == hom.assignment[i]
                for i, v in enumerate(through.assignment)
            )


def test_corestriction_fails_outside_center():
    c = chain3()
    mid = LatticeHom(c, c, tuple(range(c.n)))
    assert corestrict_to_center(mid) is None


# ---------------------------------------------------------------------------
# spectrum


def test_spectrum_of_two_is_a_point():
    assert spectrum(two_lattice()).n == 1


def test_spectrum_of_trivial_lattice_is_empty():
    one = downset_lattice(antichain([]))
    assert spectrum(one).n == 0


def test_spectrum_of_chain_is_sierpinski():
    assert homeomorphic(spectrum(chain3()), sierpinski())


def test_spectrum_of_diamond_is_discrete_pair():
    assert homeomorphic(spectrum(diamond()), discrete_space(["a", "b"]))


def test_spectrum_points_name_their_filters():
    view = spectrum_view(chain3())
    assert view.space.points == ("{{a,b}}", "{{a},{a,b}}")
    assert view.space.opens == (0, 2, 3)


def test_point_characters_enumerate_homs():
    lat = diamond()
    chars = [point_character(lat, p) for p in spectrum(lat).points]
    assert tuple(chars) == homs_to_2(lat)


def test_spatiality_on_universe_samples():
    for lat in lattice_universe(3):
        assert is_spatial(lat)


def test_spatiality_hom_sends_elements_to_basic_opens():
    lat = chain3()
    h = spatiality_hom(lat)
    assert h.apply("{}") == "{}"
    assert sorted(h.assignment) == list(range(lat.n))


# ---------------------------------------------------------------------------
# ideal comonad


def test_comultiplication_pointwise_frozen():
    d = diamond()
    view = ideal_view(d)
    c_of_a = comultiplication_ideal(d, view.ideal_at(view.index_of(0b0011)))
    # ideals whose join lands under {a}: just bottom and the principal of {a}
    member_masks = {view.masks[k] for k in range(view.lattice.n) if (c_of_a.members >> k) & 1}
    assert member_masks == {0b0001, 0b0011}


def test_comultiplication_routes_agree():
    for lat in (two_lattice(), chain3(), diamond(), six()):
        assert comultiplication_hom(lat) == comultiplication_via_functor(lat)


def test_counit_after_comultiplication_is_identity():
    for lat in (chain3(), diamond()):
        view = ideal_view(lat)
        counit_level_up = counit_hom(view.lattice)
        assert compose_homs(counit_level_up, comultiplication_hom(lat)).assignment == tuple(
            range(view.lattice.n)
        )


def test_gamma_equals_principal_embedding_at_finite_scale():
    for lat in (two_lattice(), chain3(), diamond(), six()):
        assert gamma_coalgebra(lat).structure == principal_embedding(lat)


def test_gamma_is_a_coalgebra():
    for lat in lattice_universe(3):
        report = check_coalgebra(gamma_coalgebra(lat))
        assert report.ok, report.witness


def test_broken_coalgebra_reported():
    c = chain3()
    view = ideal_view(c)
    gamma = gamma_coalgebra(c).structure
    squash = list(gamma.assignment)
    squash[c.index("{a}")] = gamma.assignment[c.bot]  # middle level to bottom ideal
    report = check_coalgebra(
        CoalgebraCandidate(c, LatticeHom(c, view.lattice, tuple(squash)))
    )
    assert not report.counit_law
    assert report.witness == "counit law"


def test_gamma_unique_by_exhaustive_search():
    for lat in (two_lattice(), chain3(), diamond()):
        found = coalgebra_structures(lat)
        assert found == (gamma_coalgebra(lat).structure,)


def test_coalgebra_search_budget():
    big = lattice_universe(4)[-1]
    with pytest.raises(BudgetExceeded):
        coalgebra_structures(big, limit=10)


def test_all_finite_homs_are_proper():
    lats = [two_lattice(), chain3(), diamond()]
    for src in lats:
        for tgt in lats:
            for hom in all_lattice_homs(src, tgt):
                assert is_proper_hom(hom)


@given(st.sampled_from(lattice_universe(3)))
def test_way_below_matches_order_universewide(lat):
    assert way_below(lat).below == lat.poset.down

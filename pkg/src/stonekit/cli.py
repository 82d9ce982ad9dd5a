"""Command line interface.

Documents go in, documents and reports come out. Compute subcommands
read one lattice or space document, print the result in the same format
with a summary comment on top, and exit 0. The ``laws`` subcommand runs
one named law suite over enumerated universes and prints one line per
checked instance: instance id, law id, PASS or FAIL, and a witness on
failure; it exits 0 exactly when nothing failed. ``export dot`` renders
a structure as a graph description.

Exit codes: 0 success, 1 law or validation failure, 2 usage or parse
errors (including budget guards hit without --force).
"""

import argparse
import random
import sys
from typing import Iterable, List, Tuple

from .bitsets import bits
from .catengine import (
    AlgebraInstance,
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
    inverse_comparison,
    lift_monad,
)
from .dlat import DistLattice, ideal_lattice
from .documents import dumps, load_lattice, load_space, loads
from .errors import BudgetExceeded, ParseError, StonekitError
from .frame import (
    center_lattice,
    comultiplication_hom,
    comultiplication_via_functor,
    check_coalgebra,
    gamma_coalgebra,
    is_boolean,
    is_regular,
    is_spatial,
    is_stably_compact,
    spectrum,
    way_below,
)
from .instances import (
    center_monad_on_locales,
    compact_reflection_monad,
    compactification_collapse,
    filter_monad_on_spaces,
    frame_morphisms,
    frame_universe,
    ideal_comonad_on_frames,
    ideal_monad_on_frames,
    ideal_monad_on_locales,
    lifted_ideal_monad,
    open_spectrum_adjunction,
    sobrification_monad,
    sobrification_to_filters,
    space_morphisms,
    space_universe,
)
from .spaces import (
    FinSpace,
    compose_maps,
    homeomorphic,
    is_homeomorphism,
    is_t0,
    specialization_preorder,
)
from .topspace import (
    canonical_algebra,
    compactification_square,
    filter_map,
    filter_space,
    hausdorff_reflection,
    mult_map,
    open_frame_of_filters_iso,
    pairing_map,
    sobrification,
    t0_quotient,
    ultrafilter_comparison,
    ultrafilter_space,
    unit_map,
)
from .universes import MAX_POINTS, all_spaces_upto, lattice_universe

MAX_LATTICE = 16
DEFAULT_SEED = 271828
SAMPLES_PER_SIZE = 20

Row = Tuple[str, str, bool, object]


# ---------------------------------------------------------------------------
# document plumbing


def _read_text(path: str) -> str:
    with open(path, "r", encoding="utf-8") as handle:
        return handle.read()


def _space_summary(name: str, x: FinSpace) -> str:
    t0 = "T0" if is_t0(x) else "not T0"
    return f'# space "{name}": {x.n} points, {len(x.opens)} opens, {t0}'


def _lattice_summary(name: str, lat: DistLattice) -> str:
    flags = []
    if is_boolean(lat):
        flags.append("Boolean")
    flags.append("distributive")
    return f'# lattice "{name}": {lat.n} elements, ' + ", ".join(flags)


def _emit(summary: str, obj, name: str) -> int:
    sys.stdout.write(summary + "\n")
    sys.stdout.write(dumps(obj, name))
    return 0


def _cmd_validate(args) -> int:
    kind, name, obj = loads(_read_text(args.file))
    if kind == "lattice":
        return _emit(_lattice_summary(name, obj), obj, name)
    return _emit(_space_summary(name, obj), obj, name)


def _cmd_spectrum(args) -> int:
    name, lat = load_lattice(_read_text(args.file))
    space = spectrum(lat)
    out = f"spectrum of {name}"
    return _emit(f"# spectrum: {space.n} points, {len(space.opens)} opens", space, out)


def _cmd_ideals(args) -> int:
    name, lat = load_lattice(_read_text(args.file))
    ideals = ideal_lattice(lat)
    return _emit(
        f"# ideals: {ideals.n} ideals of {lat.n} elements, all principal",
        ideals,
        f"ideals of {name}",
    )


def _cmd_filters(args) -> int:
    name, x = load_space(_read_text(args.file))
    fx = filter_space(x)
    return _emit(
        f"# filters: {fx.n} filters, {len(fx.opens)} opens",
        fx,
        f"filters of {name}",
    )


def _cmd_sobrify(args) -> int:
    name, x = load_space(_read_text(args.file))
    sober, unit = sobrification(x)
    verdict = "already sober" if is_homeomorphism(unit) else "points adjusted"
    return _emit(
        f"# sobrification: {x.n} -> {sober.n} points, {verdict}",
        sober,
        f"sobrification of {name}",
    )


def _cmd_t0(args) -> int:
    name, x = load_space(_read_text(args.file))
    quotient, _ = t0_quotient(x)
    return _emit(
        f"# t0: {x.n} -> {quotient.n} points",
        quotient,
        f"t0 quotient of {name}",
    )


def _cmd_hausdorff(args) -> int:
    name, x = load_space(_read_text(args.file))
    reflection, _ = hausdorff_reflection(x)
    return _emit(
        f"# hausdorff: {x.n} -> {reflection.n} points, discrete",
        reflection,
        f"hausdorff reflection of {name}",
    )


def _cmd_center(args) -> int:
    name, lat = load_lattice(_read_text(args.file))
    center = center_lattice(lat)
    return _emit(
        f"# center: {center.n} of {lat.n} elements complemented",
        center,
        f"center of {name}",
    )


def _cmd_waybelow(args) -> int:
    name, lat = load_lattice(_read_text(args.file))
    below = way_below(lat).below
    pairs = [
        (lat.elements[a], lat.elements[b])
        for b in range(lat.n)
        for a in bits(below[b])
    ]
    stable = "yes" if is_stably_compact(lat) else "no"
    regular = "yes" if is_regular(lat) else "no"
    sys.stdout.write(
        f'# waybelow of "{name}": {len(pairs)} pairs; '
        f"stably compact: {stable}; regular: {regular}\n"
    )
    for a, b in pairs:
        sys.stdout.write(f"{a} << {b}\n")
    return 0


def _cmd_cechstone(args) -> int:
    name, x = load_space(_read_text(args.file))
    report = compactification_square(x)
    left, right = report.spectral_side, report.reflection_side
    verdict = "ISO" if report.ok else "MISMATCH"
    if left.n == right.n:
        sides = f"both sides: {left.n} point" + ("s" if left.n != 1 else "")
    else:
        sides = f"sides: {left.n} and {right.n} points"
    sys.stdout.write(f'# cechstone "{name}": {sides}, {verdict}\n')
    sys.stdout.write(dumps(left, f"compactification of {name}"))
    return 0 if report.ok else 1


# ---------------------------------------------------------------------------
# graph export


def _quote(name: str) -> str:
    return '"' + name.replace("\\", "\\\\").replace('"', '\\"') + '"'


def _lattice_dot(name: str, lat: DistLattice) -> str:
    lines = [f"digraph {_quote(name)} {{", "  rankdir=BT;"]
    for element in lat.elements:
        lines.append(f"  {_quote(element)};")
    for low, high in lat.poset.cover_pairs():
        lines.append(f"  {_quote(low)} -> {_quote(high)};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _space_dot(name: str, x: FinSpace) -> str:
    up = specialization_preorder(x)
    lines = [f"digraph {_quote(name)} {{", "  rankdir=BT;"]
    for point in x.points:
        lines.append(f"  {_quote(point)};")
    for i in range(x.n):
        for j in range(x.n):
            if i == j or not (up[i] >> j) & 1:
                continue
            if (up[j] >> i) & 1:
                if i < j:
                    lines.append(
                        f"  {_quote(x.points[i])} -> {_quote(x.points[j])} [dir=both];"
                    )
                continue
            strict = any(
                k != i and k != j and (up[i] >> k) & 1 and (up[k] >> j) & 1
                and not (up[k] >> i) & 1 and not (up[j] >> k) & 1
                for k in range(x.n)
            )
            if not strict:
                lines.append(f"  {_quote(x.points[i])} -> {_quote(x.points[j])};")
    legend = ", ".join(
        "{" + ",".join(x.points[i] for i in bits(m)) + "}" for m in x.opens
    )
    lines.append(f"  label={_quote('opens: ' + legend)};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _cmd_export(args) -> int:
    kind, name, obj = loads(_read_text(args.file))
    if kind == "lattice":
        sys.stdout.write(_lattice_dot(name, obj))
    else:
        sys.stdout.write(_space_dot(name, obj))
    return 0


# ---------------------------------------------------------------------------
# law suites: one row per checked instance


def _space_pool(max_points: int, seed: int, force: bool) -> Tuple[FinSpace, ...]:
    if max_points > MAX_POINTS and not force:
        raise BudgetExceeded(
            f"--max-points {max_points} exceeds the guard rail {MAX_POINTS}; "
            "pass --force to sample anyway"
        )
    pool = list(all_spaces_upto(min(max_points, 4)))
    for size in range(5, max_points + 1):
        pool.extend(_sampled_spaces(size, seed))
    return tuple(pool)


def _sampled_spaces(size: int, seed: int) -> List[FinSpace]:
    """Seeded sample of topologies on `size` points, via random preorders."""
    rng = random.Random(seed * 1_000_003 + size)
    names = tuple(chr(ord("p") + i) for i in range(size))
    seen = set()
    out: List[FinSpace] = []
    while len(out) < SAMPLES_PER_SIZE:
        up = [1 << i for i in range(size)]
        for i in range(size):
            for j in range(size):
                if i != j and rng.random() < 0.3:
                    up[i] |= 1 << j
        changed = True
        while changed:
            changed = False
            for i in range(size):
                grown = up[i]
                for j in bits(up[i]):
                    grown |= up[j]
                if grown != up[i]:
                    up[i] = grown
                    changed = True
        opens = tuple(
            sorted(
                m
                for m in range(1 << size)
                if all(up[i] & ~m == 0 for i in bits(m))
            )
        )
        if opens in seen:
            continue
        seen.add(opens)
        out.append(FinSpace(names, opens))
    return out


def _lattice_pool(max_lattice: int, force: bool) -> Tuple[DistLattice, ...]:
    if max_lattice > MAX_LATTICE and not force:
        raise BudgetExceeded(
            f"--max-lattice {max_lattice} exceeds the guard rail {MAX_LATTICE}; "
            "pass --force to raise it"
        )
    bound = 4 if max_lattice <= MAX_LATTICE else 5
    return tuple(
        l for l in lattice_universe(bound, force=True) if l.n <= max_lattice
    )


def _space_ids(spaces) -> List[str]:
    total = len(spaces)
    return [
        f"space {i + 1}/{total} ({x.n} points, {len(x.opens)} opens)"
        for i, x in enumerate(spaces)
    ]


def _lattice_ids(lats) -> List[str]:
    total = len(lats)
    return [
        f"lattice {i + 1}/{total} ({l.n} elements)" for i, l in enumerate(lats)
    ]


def _map_ids(maps) -> List[str]:
    total = len(maps)
    return [f"map {i + 1}/{total}" for i, f in enumerate(maps)]


def _hom_ids(homs) -> List[str]:
    total = len(homs)
    return [f"hom {i + 1}/{total}" for i, h in enumerate(homs)]


def _monad_rows(prefix, monad, objects, ids) -> Iterable[Row]:
    u = monad.universe
    for iid, x in zip(ids, objects):
        fid = monad.functor.on_morphism(u.identity(x)) == u.identity(
            monad.functor.on_object(x)
        )
        yield iid, f"{prefix}.functor-identity", fid, None
        laws = check_monad_laws(monad, [x])
        for law_name, check in zip(
            ("left-unit", "right-unit", "associativity"), laws
        ):
            yield iid, f"{prefix}.{law_name}", check.ok, check.witness


def _naturality_rows(prefix, pairs, morphisms, ids) -> Iterable[Row]:
    for iid, f in zip(ids, morphisms):
        for nt, law_name in pairs:
            check = check_naturality(nt, [f])
            yield iid, f"{prefix}.{law_name}", check.ok, check.witness


def _composition_row(prefix, functor, morphisms) -> Row:
    _, comp = check_functor_laws(functor, (), morphisms)
    return (
        "all composable pairs",
        f"{prefix}.functor-composition",
        comp.ok,
        comp.witness,
    )


def _suite_monad_f(spaces, lats, maps, homs) -> Iterable[Row]:
    m = filter_monad_on_spaces()
    yield from _monad_rows("monad-f", m, spaces, _space_ids(spaces))
    yield from _naturality_rows(
        "monad-f",
        ((m.unit, "unit-naturality"), (m.mult, "mult-naturality")),
        maps,
        _map_ids(maps),
    )
    yield _composition_row("monad-f", m.functor, maps)


def _suite_monad_i(spaces, lats, maps, homs) -> Iterable[Row]:
    t = ideal_monad_on_frames()
    yield from _monad_rows("monad-i", t, lats, _lattice_ids(lats))
    yield from _naturality_rows(
        "monad-i",
        ((t.unit, "unit-naturality"), (t.mult, "mult-naturality")),
        homs,
        _hom_ids(homs),
    )
    yield _composition_row("monad-i", t.functor, homs)


def _suite_comonad_k(spaces, lats, maps, homs) -> Iterable[Row]:
    k = ideal_comonad_on_frames()
    ids = _lattice_ids(lats)
    for iid, lat in zip(ids, lats):
        laws = check_comonad_laws(k, [lat])
        for law_name, check in zip(
            ("left-counit", "right-counit", "coassociativity"), laws
        ):
            yield iid, f"comonad-k.{law_name}", check.ok, check.witness
        two_routes = comultiplication_hom(lat) == comultiplication_via_functor(lat)
        yield iid, "comonad-k.comult-two-routes", two_routes, None
        report = check_coalgebra(gamma_coalgebra(lat))
        yield iid, "comonad-k.downset-coalgebra", report.ok, report.witness
    yield from _naturality_rows(
        "comonad-k",
        ((k.counit, "counit-naturality"), (k.comult, "comult-naturality")),
        homs,
        _hom_ids(homs),
    )


def _suite_adjunction_os(spaces, lats, maps, homs) -> Iterable[Row]:
    adj = open_spectrum_adjunction()
    top = space_universe()
    for iid, x in zip(_space_ids(spaces), spaces):
        triangle, _ = check_adjunction(adj, [x], [])
        yield iid, "adjunction-os.triangle-open", triangle.ok, triangle.witness
        unit_iso = top.invert(adj.unit.component(x)) is not None
        yield iid, "adjunction-os.unit-iso-iff-t0", unit_iso == is_t0(x), None
    for iid, lat in zip(_lattice_ids(lats), lats):
        _, triangle = check_adjunction(adj, [], [lat])
        yield iid, "adjunction-os.triangle-spectrum", triangle.ok, triangle.witness
        yield iid, "adjunction-os.counit-iso", is_spatial(lat), None
    yield from _naturality_rows(
        "adjunction-os", ((adj.unit, "unit-naturality"),), maps, _map_ids(maps)
    )
    yield from _naturality_rows(
        "adjunction-os", ((adj.counit, "counit-naturality"),), homs, _hom_ids(homs)
    )


def _suite_lifting(spaces, lats, maps, homs) -> Iterable[Row]:
    adj = open_spectrum_adjunction()
    t = ideal_monad_on_locales()
    m = lifted_ideal_monad()
    top = space_universe()
    loc = frame_universe()
    yield from _monad_rows("lifting", m, spaces, _space_ids(spaces))
    h = sobrification_monad()
    for iid, x in zip(_space_ids(spaces), spaces):
        agrees = (
            h.functor.on_object(x) == sobrification(x)[0]
            and h.unit.component(x) == sobrification(x)[1]
        )
        yield iid, "lifting.sobrification-agrees", agrees, None
        if is_t0(x):
            back_p = top.invert(pairing_map(x))
            alpha = compose_maps(canonical_algebra(x), back_p)
            m_alg = AlgebraInstance(m, x, alpha)
            ok = all(c.ok for c in check_algebra(m_alg))
            t_alg = inverse_comparison(adj, t, m_alg)
            ok = ok and all(c.ok for c in check_algebra(t_alg))
            again = comparison_algebra(adj, t, m, t_alg)
            eta = adj.unit.component(x)
            ok = (
                ok
                and top.invert(eta) is not None
                and check_algebra_morphism(m_alg, again, eta)
            )
            yield iid, "lifting.comparison-round-trip", ok, None
    for iid, lat in zip(_lattice_ids(lats), lats):
        unit_sq, mult_sq = check_lift_law(adj, t, m, [lat])
        yield iid, "lifting.law-unit-square", unit_sq.ok, unit_sq.witness
        yield iid, "lifting.law-mult-square", mult_sq.ok, mult_sq.witness
        t_alg = AlgebraInstance(t, lat, gamma_coalgebra(lat).structure)
        m_alg = comparison_algebra(adj, t, m, t_alg)
        ok = all(c.ok for c in check_algebra(m_alg))
        back = inverse_comparison(adj, t, m_alg)
        eps = adj.counit.component(lat)
        ok = (
            ok
            and loc.invert(eps) is not None
            and check_algebra_morphism(back, t_alg, eps)
        )
        yield iid, "lifting.inverse-round-trip", ok, None
    sigma = sobrification_to_filters()
    for law_name, check in zip(
        ("morphism-unit", "morphism-mult"), check_monad_morphism(sigma, h, m, spaces)
    ):
        yield "all pool spaces", f"lifting.{law_name}", check.ok, check.witness
    yield from _naturality_rows(
        "lifting",
        ((m.unit, "unit-naturality"), (m.mult, "mult-naturality")),
        maps,
        _map_ids(maps),
    )


def _suite_pairing(spaces, lats, maps, homs) -> Iterable[Row]:
    m = lifted_ideal_monad()
    frm = frame_universe()
    for iid, x in zip(_space_ids(spaces), spaces):
        p = pairing_map(x)
        yield iid, "pairing.homeomorphism", is_homeomorphism(p), None
        unit_ok = compose_maps(p, unit_map(x)) == m.unit.component(x)
        yield iid, "pairing.unit-transport", unit_ok, None
        doubled = compose_maps(
            m.functor.on_morphism(p), pairing_map(filter_space(x))
        )
        mult_ok = compose_maps(m.mult.component(x), doubled) == compose_maps(
            p, mult_map(x)
        )
        yield iid, "pairing.mult-transport", mult_ok, None
        frame_iso = frm.invert(open_frame_of_filters_iso(x)) is not None
        yield iid, "pairing.open-frame-iso", frame_iso, None
    for iid, f in zip(_map_ids(maps), maps):
        lhs = compose_maps(pairing_map(f.target), filter_map(f))
        rhs = compose_maps(m.functor.on_morphism(f), pairing_map(f.source))
        yield iid, "pairing.naturality", lhs == rhs, None


def _suite_cechstone(spaces, lats, maps, homs) -> Iterable[Row]:
    beta = compact_reflection_monad()
    m = lifted_ideal_monad()
    collapse = compactification_collapse()
    top = space_universe()
    yield from _monad_rows("cechstone", beta, spaces, _space_ids(spaces))
    for iid, x in zip(_space_ids(spaces), spaces):
        report = compactification_square(x)
        yield iid, "cechstone.square-iso", report.ok, None
        matches = homeomorphic(
            beta.functor.on_object(x), hausdorff_reflection(filter_space(x))[0]
        )
        yield iid, "cechstone.matches-clopen-quotient", matches, None
        yield (
            iid,
            "cechstone.collapse-iso",
            top.invert(collapse.component(x)) is not None,
            None,
        )
        route = compose_maps(
            collapse.component(x),
            compose_maps(
                _lifted_center_unit(m.functor.on_object(x)), m.unit.component(x)
            ),
        )
        yield iid, "cechstone.unit-factors", route == beta.unit.component(x), None
    yield from _naturality_rows(
        "cechstone",
        ((beta.unit, "unit-naturality"), (beta.mult, "mult-naturality")),
        maps,
        _map_ids(maps),
    )


def _lifted_center_unit(space_obj):
    lifted = lift_monad(
        open_spectrum_adjunction(), center_monad_on_locales(), "spectral center monad"
    )
    return lifted.unit.component(space_obj)


def _suite_ultrafilter(spaces, lats, maps, homs) -> Iterable[Row]:
    for iid, x in zip(_space_ids(spaces), spaces):
        ux = ultrafilter_space(x)
        yield iid, "ultrafilter.principal-points", ux == FinSpace(x.points, x.opens), None
        yield iid, "ultrafilter.filters-recovered", ultrafilter_comparison(x), None


SUITES = {
    "monad-f": _suite_monad_f,
    "monad-i": _suite_monad_i,
    "comonad-k": _suite_comonad_k,
    "adjunction-os": _suite_adjunction_os,
    "lifting": _suite_lifting,
    "pairing": _suite_pairing,
    "cechstone": _suite_cechstone,
    "ultrafilter": _suite_ultrafilter,
}


def _cmd_laws(args) -> int:
    spaces = _space_pool(args.max_points, args.seed, args.force)
    lats = _lattice_pool(args.max_lattice, args.force)
    maps = space_morphisms(min(args.max_points, 2))
    homs = frame_morphisms(2)
    failures = 0
    count = 0
    for instance, law, ok, witness in SUITES[args.suite](spaces, lats, maps, homs):
        count += 1
        if ok:
            sys.stdout.write(f"{instance}\t{law}\tPASS\n")
        else:
            failures += 1
            detail = "" if witness is None else f"\t{witness}"
            sys.stdout.write(f"{instance}\t{law}\tFAIL{detail}\n")
    sys.stdout.write(f"# {args.suite}: {count} checks, {failures} failures\n")
    return 1 if failures else 0


# ---------------------------------------------------------------------------
# argument parsing


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="stonekit",
        description="Finite lattices, spaces, spectra, and the law suites relating them.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    for name, handler, doc in (
        ("validate", _cmd_validate, "parse and echo a document, canonicalized"),
        ("spectrum", _cmd_spectrum, "space of prime filters of a lattice"),
        ("ideals", _cmd_ideals, "lattice of ideals of a lattice"),
        ("filters", _cmd_filters, "space of open prime filters of a space"),
        ("sobrify", _cmd_sobrify, "sobrification of a space"),
        ("t0", _cmd_t0, "T0 quotient of a space"),
        ("hausdorff", _cmd_hausdorff, "Hausdorff reflection of a space"),
        ("center", _cmd_center, "Boolean center of a lattice"),
        ("waybelow", _cmd_waybelow, "way-below pairs and compactness report"),
        ("cechstone", _cmd_cechstone, "compactification both ways, compared"),
    ):
        cmd = sub.add_parser(name, help=doc)
        cmd.add_argument("file", help="lattice or space document")
        cmd.set_defaults(handler=handler)

    laws = sub.add_parser("laws", help="run a law suite, one line per instance")
    laws.add_argument("--suite", required=True, choices=sorted(SUITES))
    laws.add_argument("--max-points", type=int, default=3)
    laws.add_argument("--max-lattice", type=int, default=8)
    laws.add_argument("--seed", type=int, default=DEFAULT_SEED)
    laws.add_argument(
        "--force", action="store_true", help="raise the enumeration guard rails"
    )
    laws.set_defaults(handler=_cmd_laws)

    export = sub.add_parser("export", help="render a structure as graph text")
    export.add_argument("format", choices=["dot"])
    export.add_argument("file", help="lattice or space document")
    export.set_defaults(handler=_cmd_export)
    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except ParseError as exc:
        where = "" if exc.line is None else f"line {exc.line}: "
        print(f"error: {where}{exc.message}", file=sys.stderr)
        return 2
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except StonekitError as exc:
        print(f"invalid: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())

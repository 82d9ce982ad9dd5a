"""Exhaustive enumeration of small labeled posets, topologies, lattices.

These drive the law-checking suites: every claim quantified over "all
posets on <= 4 elements" or "all topologies on <= 3 points" runs over the
tuples produced here. Enumeration is by labeled structure, so the counts
match the standard sequences (posets 1, 1, 3, 19, 219; topologies 1, 1, 4,
29, 355) and the tests assert them.
"""

from functools import lru_cache
from itertools import product
from typing import Tuple

from .bitsets import bits, mask_of
from .dlat import DistLattice, downset_lattice
from .errors import BudgetExceeded
from .order import FinPoset, make_poset
from .spaces import ContinuousMap, FinSpace, is_continuous_assignment

POSET_NAMES = "abcde"
POINT_NAMES = "vwxyz"

MAX_POSET = 5
MAX_POINTS = 5


def _relation_candidates(n: int, antisymmetric: bool):
    """Reflexive transitive up-masks over n elements, optionally antisymmetric."""
    offdiag = [(i, j) for i in range(n) for j in range(n) if i != j]
    for pick in range(1 << len(offdiag)):
        up = [1 << i for i in range(n)]
        for b, (i, j) in enumerate(offdiag):
            if (pick >> b) & 1:
                up[i] |= 1 << j
        ok = True
        for i in range(n):
            for j in bits(up[i]):
                if up[j] & ~up[i]:
                    ok = False
                    break
            if not ok:
                break
        if not ok:
            continue
        if antisymmetric and any(
            (up[i] >> j) & 1 and (up[j] >> i) & 1
            for i in range(n)
            for j in range(i + 1, n)
        ):
            continue
        yield tuple(up)


def _guard(n: int, cap: int, what: str, force: bool) -> None:
    if n > cap and not force:
        raise BudgetExceeded(f"{what} on {n} elements exceeds the cap {cap}")


@lru_cache(maxsize=None)
def all_posets(n: int, force: bool = False) -> Tuple[FinPoset, ...]:
    """All labeled posets on n elements, elements named a, b, c, ..."""
    _guard(n, MAX_POSET, "poset enumeration", force)
    names = list(POSET_NAMES[:n])
    out = []
    for up in _relation_candidates(n, antisymmetric=True):
        down = [0] * n
        for i in range(n):
            for j in bits(up[i]):
                down[j] |= 1 << i
        out.append(make_poset(names, down))
    return tuple(out)


def all_posets_upto(n: int, force: bool = False) -> Tuple[FinPoset, ...]:
    out: list[FinPoset] = []
    for k in range(n + 1):
        out.extend(all_posets(k, force))
    return tuple(out)


@lru_cache(maxsize=None)
def all_spaces(n: int, force: bool = False) -> Tuple[FinSpace, ...]:
    """All labeled topologies on n points, via their specialization preorders.

    Finite topologies are exactly the up-set families of preorders, so
    enumerating preorders gives each topology once.
    """
    _guard(n, MAX_POINTS, "topology enumeration", force)
    names = tuple(POINT_NAMES[:n])
    out = []
    for up in _relation_candidates(n, antisymmetric=False):
        opens = [
            m
            for m in range(1 << n)
            if all(up[i] & ~m == 0 for i in bits(m))
        ]
        out.append(FinSpace(names, tuple(sorted(opens))))
    return tuple(out)


def all_spaces_upto(n: int, force: bool = False) -> Tuple[FinSpace, ...]:
    out: list[FinSpace] = []
    for k in range(n + 1):
        out.extend(all_spaces(k, force))
    return tuple(out)


def all_topology_families_bruteforce(n: int) -> Tuple[Tuple[int, ...], ...]:
    """Independent oracle: filter every family of subsets by the axioms."""
    if n > 4:
        raise BudgetExceeded("brute-force topology oracle is capped at 4 points")
    full = (1 << n) - 1
    inner = [m for m in range(1 << n) if m not in (0, full)]
    out = []
    for pick in range(1 << len(inner)):
        fam = {0, full} | {inner[b] for b in bits(pick)}
        if all(a | b in fam and a & b in fam for a in fam for b in fam):
            out.append(tuple(sorted(fam)))
    return tuple(sorted(set(out)))


@lru_cache(maxsize=None)
def lattice_universe(max_poset: int = 4, force: bool = False) -> Tuple[DistLattice, ...]:
    """Downset lattices of all posets on <= max_poset elements (243 at 4)."""
    return tuple(downset_lattice(p) for p in all_posets_upto(max_poset, force))


def all_continuous_maps(x: FinSpace, y: FinSpace, limit: int = 200_000):
    """Every continuous map x -> y; raises BudgetExceeded past limit."""
    total = max(y.n, 1) ** x.n
    if total > limit:
        raise BudgetExceeded(f"{total} assignments exceed the limit {limit}")
    if x.n == 0:
        yield ContinuousMap(x, y, ())
        return
    if y.n == 0:
        return
    for assignment in product(range(y.n), repeat=x.n):
        if is_continuous_assignment(x, y, assignment):
            yield ContinuousMap(x, y, assignment)


def all_monotone_assignments(p: FinPoset, q: FinPoset, limit: int = 200_000):
    """Monotone index assignments p -> q (used for sampling lattice maps)."""
    total = max(q.n, 1) ** p.n
    if total > limit:
        raise BudgetExceeded(f"{total} assignments exceed the limit {limit}")
    pairs = [(i, j) for j in range(p.n) for i in bits(p.down[j]) if i != j]
    for assignment in product(range(q.n), repeat=p.n):
        if all(q.leq_index(assignment[i], assignment[j]) for i, j in pairs):
            yield assignment

"""Bitmask helpers for subsets of a fixed finite carrier.

A subset of a carrier with canonical element order e_0, ..., e_{n-1} is an
int whose bit i says whether e_i is in the subset.
"""

from typing import Iterator, Sequence


def bits(mask: int) -> Iterator[int]:
    """Indices of the set bits, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(indices) -> int:
    out = 0
    for i in indices:
        out |= 1 << i
    return out


def is_subset(a: int, b: int) -> bool:
    return a & ~b == 0


def format_subset(names: Sequence[str], mask: int) -> str:
    """Render a subset as `{a,b}` in carrier order; empty set is `{}`."""
    return "{" + ",".join(names[i] for i in bits(mask)) + "}"

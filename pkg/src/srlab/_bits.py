"""Bitmask helpers shared by the complex/homology internals.

Faces are stored as int bitmasks over an ambient vertex set {1..n}:
vertex label v corresponds to bit v-1.  All helpers are pure.
"""

from __future__ import annotations

from itertools import combinations


def mask_of(labels) -> int:
    """Bitmask of an iterable of 1-based vertex labels."""
    m = 0
    for v in labels:
        m |= 1 << (v - 1)
    return m


def labels_of(mask: int) -> tuple[int, ...]:
    """Sorted 1-based labels of a bitmask."""
    out = []
    while mask:
        b = mask & -mask
        out.append(b.bit_length())
        mask ^= b
    return tuple(out)


def bits_of(mask: int) -> list[int]:
    """Single-bit submasks of ``mask`` in ascending order."""
    out = []
    while mask:
        b = mask & -mask
        out.append(b)
        mask ^= b
    return out


def submasks_one_less(mask: int) -> list[int]:
    """All masks obtained by clearing exactly one set bit."""
    out = []
    m = mask
    while m:
        b = m & -m
        out.append(mask ^ b)
        m ^= b
    return out


def compress_map(occupied: int) -> dict[int, int]:
    """Map each set bit of ``occupied`` to 1 << (its rank)."""
    table = {}
    i = 0
    while occupied:
        b = occupied & -occupied
        table[b] = 1 << i
        occupied ^= b
        i += 1
    return table


def compress_masks(masks) -> tuple[tuple[int, ...], int]:
    """Relabel masks onto their occupied bits, contiguously from bit 0.

    Returns (sorted compressed masks, number of occupied bits).  Used to
    canonicalize complexes that share a shape but sit on different
    ambient vertices.
    """
    occ = 0
    for m in masks:
        occ |= m
    k = occ.bit_count()
    if occ == (1 << k) - 1:
        return tuple(sorted(masks)), k
    table = compress_map(occ)
    out = []
    for m in masks:
        c = 0
        mm = m
        while mm:
            b = mm & -mm
            c |= table[b]
            mm ^= b
        out.append(c)
    return tuple(sorted(out)), k


def antichain(masks) -> tuple[int, ...]:
    """Inclusion-maximal elements of a set of masks, sorted."""
    uniq = sorted(set(masks), key=lambda m: (m.bit_count(), m), reverse=True)
    keep: list[int] = []
    for m in uniq:
        if not any(m & k == m for k in keep):
            keep.append(m)
    return tuple(sorted(keep))


def size_subsets(n: int, k: int) -> list[int]:
    """All k-subsets of {1..n} as masks, sorted ascending."""
    return sorted(mask_of(c) for c in combinations(range(1, n + 1), k))

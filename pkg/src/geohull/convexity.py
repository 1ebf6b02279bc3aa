"""Geodetic (shortest-path) convexity primitives.

A vertex w lies in the interval of {u, v} exactly when
dist(u, w) + dist(w, v) == dist(u, v); membership is decided through that
identity rather than by enumerating paths (the path-enumerating version
lives in the test suite as an independent oracle).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .graph import Graph, mask_members, vertex_mask


# -- bitmask layer (shared with the hull-number search) ---------------------

def interval_mask(g: Graph, mask: int) -> int:
    """One interval application over a vertex bitmask."""
    btw = g.between_table()
    members = mask_members(mask)
    result = mask
    for i, u in enumerate(members):
        row = btw[u]
        for v in members[i + 1:]:
            result |= row[v]
    return result


def extend_hull_mask(g: Graph, base: int, extra: int) -> int:
    """Hull of ``base | extra``, assuming ``base`` is already interval-closed.

    With ``base == 0`` this is the plain hull.  Starting the fixed-point
    iteration from a closed set lets the search grow hulls incrementally:
    new pairs are only formed between frontier vertices and the rest.
    """
    btw = g.between_table()
    hull = base | extra
    frontier = mask_members(extra & ~base)
    members = mask_members(base) + frontier
    while frontier:
        grown = 0
        for u in frontier:
            row = btw[u]
            for v in members:
                grown |= row[v]
        grown &= ~hull
        if not grown:
            break
        hull |= grown
        frontier = mask_members(grown)
        members += frontier
    return hull


def hull_mask(g: Graph, mask: int) -> int:
    """Least interval-closed superset of a vertex bitmask."""
    return extend_hull_mask(g, 0, mask)


# -- set-level operations ----------------------------------------------------

def interval(g: Graph, vertices: Iterable[int]) -> frozenset[int]:
    """All vertices on shortest paths between members; always a superset."""
    return frozenset(mask_members(interval_mask(g, vertex_mask(g, vertices))))


def hull(g: Graph, vertices: Iterable[int]) -> frozenset[int]:
    """Smallest convex superset: the fixed point of repeated intervals."""
    return frozenset(mask_members(hull_mask(g, vertex_mask(g, vertices))))


def is_convex(g: Graph, vertices: Iterable[int]) -> bool:
    """True iff the interval of the set equals the set."""
    mask = vertex_mask(g, vertices)
    return interval_mask(g, mask) == mask


def is_concave(g: Graph, vertices: Iterable[int]) -> bool:
    """True iff the set avoids the interval of every outside vertex pair.

    Equivalent to the complement being convex.
    """
    mask = vertex_mask(g, vertices)
    btw = g.between_table()
    outside = mask_members(g.full_mask & ~mask)
    for i, u in enumerate(outside):
        row = btw[u]
        for v in outside[i + 1:]:
            if row[v] & mask:
                return False
    return True


def is_hull_set(g: Graph, vertices: Iterable[int]) -> bool:
    """True iff the hull of the set is the whole vertex set."""
    return hull_mask(g, vertex_mask(g, vertices)) == g.full_mask


@dataclass(frozen=True)
class IntervalDependency:
    """A vertex forced by a pair: consequence lies between the premise pair."""

    premise: tuple[int, int]
    consequence: int


def interval_dependencies(g: Graph) -> list[IntervalDependency]:
    """Every ({u,v}, w) with w strictly inside the interval of {u, v}.

    Emitted in ascending (u, v, w) order.  Adjacent pairs contribute
    nothing: their interval is just the pair itself.
    """
    btw = g.between_table()
    n = g.vertex_count
    out = []
    for u in range(n):
        row = btw[u]
        for v in range(u + 1, n):
            inner = row[v] & ~((1 << u) | (1 << v))
            for w in mask_members(inner):
                out.append(IntervalDependency((u, v), w))
    return out

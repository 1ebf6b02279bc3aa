"""Exact hull-number computation, plus a naive subset-search oracle.

The exact search starts from the set M of simplicial vertices: a simplicial
vertex lies on no shortest path between two other vertices, so it can never
be generated and belongs to every hull set.  On top of M it runs iterative
deepening on the number r of extra picks.  Within a round, partial sets T
are extended only by candidates w with an index above the last pick and
with w outside hull(T).  That membership prune is complete for minimum-size
search: if w is in hull(T) for some T contained in S minus {w}, then
hull(S minus {w}) already contains w and therefore equals hull(S), so S was
not minimum and skipping it loses nothing.

A second complete prune uses the monotonicity of hulls: a branch is dead as
soon as hull(T together with every still-allowed candidate) misses a vertex,
because no subset of those candidates can reach more.  Feasibility of the
candidate suffix is monotone in its starting index, so each node binary
searches the last viable start instead of probing every child, and a child's
own suffix feasibility is already implied by the parent's check.

The first solution found in this ascending-index depth-first order is the
lexicographically smallest minimum witness, and the search is sequential,
so results are deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .chordal import simplicial_vertices
from .convexity import hull_mask
from .errors import BudgetExceeded, Disconnected, TooLarge
from .graph import Graph, mask_members, vertex_mask


@dataclass(frozen=True)
class HullNumberResult:
    hull_number: int
    witness: frozenset[int]


class _Search:
    def __init__(self, g: Graph, node_budget: int | None):
        self.g = g
        self.full = g.full_mask
        self.btw = g.between_table()
        self.budget = node_budget
        self.evaluations = 0
        self.lower_bound = 0

    def close(self, base: int, base_members: list[int],
              add: int) -> tuple[int, list[int]]:
        """Hull of ``base | add`` given closed ``base`` with member list.

        Counts one evaluation against the budget.  The member list of the
        result may be incomplete when the hull reaches the full set; by then
        nothing downstream needs it.
        """
        self.evaluations += 1
        if self.budget is not None and self.evaluations > self.budget:
            raise BudgetExceeded(
                f"budget of {self.budget} hull evaluations exhausted; "
                f"hull number is at least {self.lower_bound}",
                lower_bound=self.lower_bound,
                evaluations=self.evaluations,
            )
        btw = self.btw
        full = self.full
        hull = base | add
        frontier = mask_members(add & ~base)
        members = base_members + frontier
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
            if hull == full:
                break
            frontier = mask_members(grown)
            members = members + frontier
        return hull, members

    def run(self) -> HullNumberResult:
        mandatory = vertex_mask(self.g, simplicial_vertices(self.g))
        base_size = mandatory.bit_count()
        self.lower_bound = max(base_size, 1)
        start, start_members = self.close(0, [], mandatory)
        if start == self.full:
            return HullNumberResult(base_size, frozenset(mask_members(mandatory)))
        candidates = mask_members(self.full & ~start)
        for extra in range(1, len(candidates) + 1):
            self.lower_bound = base_size + extra
            picks = self.descend(start, start_members, candidates, extra)
            if picks is not None:
                witness = frozenset(mask_members(mandatory) + list(picks))
                return HullNumberResult(base_size + extra, witness)
        raise AssertionError("adding every non-hull vertex must succeed")

    def descend(self, hull: int, members: list[int],
                allowed: list[int], remaining: int):
        """First extension of ``hull`` by ``remaining`` picks from ``allowed``.

        ``allowed`` is ascending and disjoint from ``hull``; the caller has
        already established that the whole of it closes to the full set.
        """
        full = self.full
        # Cumulative suffix masks: suffix[i] covers allowed[i:].
        suffix = [0] * len(allowed)
        acc = 0
        for i in range(len(allowed) - 1, -1, -1):
            acc |= 1 << allowed[i]
            suffix[i] = acc
        # Largest start index whose suffix still closes to the full set;
        # children beyond it cannot be part of any solution.  Suffixes are
        # nested, so each probe grows the closure of the nearest previously
        # probed index above it instead of starting over from ``hull``.
        probed: list[tuple[int, int, list[int]]] = []  # (index, mask, members)

        def probe(i: int) -> bool:
            base_mask, base_members = hull, members
            for j, mask_j, members_j in probed:
                if j > i:
                    base_mask, base_members = mask_j, members_j
                    break
            mask_i, members_i = self.close(
                base_mask, base_members, suffix[i] & ~base_mask)
            if mask_i != full:
                # Full results may carry truncated member lists; they are
                # also never useful as a base, since feasibility means the
                # search continues strictly above this index.
                probed.append((i, mask_i, members_i))
                probed.sort()
            return mask_i == full

        lo, hi = 0, len(allowed) - 1
        if probe(hi):
            last_viable = hi
        else:
            while hi - lo > 1:
                mid = (lo + hi) // 2
                if probe(mid):
                    lo = mid
                else:
                    hi = mid
            last_viable = lo
        probed.clear()
        for i in range(last_viable + 1):
            w = allowed[i]
            grown, grown_members = self.close(hull, members, 1 << w)
            if remaining == 1:
                if grown == full:
                    return (w,)
            else:
                child_allowed = [v for v in allowed[i + 1:]
                                 if not grown >> v & 1]
                if child_allowed:
                    rest = self.descend(grown, grown_members,
                                        child_allowed, remaining - 1)
                    if rest is not None:
                        return (w,) + rest
        return None


def hull_number_exact(g: Graph, node_budget: int | None = None) -> HullNumberResult:
    """Minimum hull-set size and its lexicographically first witness.

    ``node_budget`` caps the number of hull evaluations; exceeding it
    raises BudgetExceeded carrying the best proven lower bound.
    """
    if not g.is_connected:
        raise Disconnected("hull number is defined for connected graphs only")
    return _Search(g, node_budget).run()


def hull_number_bruteforce(g: Graph, max_vertices: int = 14) -> HullNumberResult:
    """Subset enumeration in (size, lexicographic) order; the test oracle."""
    if not g.is_connected:
        raise Disconnected("hull number is defined for connected graphs only")
    n = g.vertex_count
    if n > max_vertices:
        raise TooLarge(f"{n} vertices exceeds the brute-force cap of {max_vertices}")
    full = g.full_mask
    for size in range(1, n + 1):
        for subset in combinations(range(n), size):
            mask = 0
            for v in subset:
                mask |= 1 << v
            if hull_mask(g, mask) == full:
                return HullNumberResult(size, frozenset(subset))
    raise AssertionError("the full vertex set is always a hull set")

"""CNF-to-graph reduction with structural verification.

From a restricted CNF instance (see :mod:`geohull.cnf`) this module builds a
chordal graph whose hull number is at most 4n exactly when the instance is
satisfiable.  The graph consists of a hub clique — one vertex per clause
plus three per variable (y, ybar, z) — and, per variable, a nine-vertex
gadget wired so that minimum hull sets are forced to pick, besides the 3n
simplicial gadget tips, exactly one of {x_i, z_i, xbar_i} per variable, and
picking x_i / xbar_i is what lets the hull reach the vertices of clauses
containing that literal.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from itertools import combinations

from .chordal import is_perfect_elimination_ordering, simplicial_vertices
from .cnf import (Assignment, RestrictedCnf, occurrence_table, satisfies,
                  is_satisfiable, validate_restricted)
from .convexity import is_concave, is_hull_set
from .errors import GeohullError, InvalidInstance, NotAWitness, TooLarge
from .graph import Graph
from .solver import hull_number_exact

# Fixed per-variable role order; vertex layout is clause vertices first
# (by clause index), then one block per variable in this order.
ROLE_ORDER = ("y", "ybar", "z", "x", "xp", "x1", "x2",
              "xp1", "xp2", "xbar", "xbarp", "xbarpp")
BLOCK_SIZE = len(ROLE_ORDER)
_OFFSET = {kind: off for off, kind in enumerate(ROLE_ORDER)}


@dataclass(frozen=True)
class ReductionGraph:
    """The built graph plus the role of every vertex and the source instance."""

    graph: Graph
    cnf: RestrictedCnf
    roles: tuple[tuple[str, int], ...]

    @property
    def variable_count(self) -> int:
        return self.cnf.variable_count

    @property
    def clause_count(self) -> int:
        return self.cnf.clause_count

    @property
    def k(self) -> int:
        """The hull-number threshold: 4n."""
        return 4 * self.variable_count

    def clause_vertex(self, j: int) -> int:
        """Vertex of clause j (1-based)."""
        if not 1 <= j <= self.clause_count:
            raise ValueError(f"clause index {j} out of range")
        return j - 1

    def vertex(self, kind: str, i: int) -> int:
        """Vertex of role ``kind`` for variable i (1-based)."""
        if kind == "c":
            return self.clause_vertex(i)
        if not 1 <= i <= self.variable_count:
            raise ValueError(f"variable index {i} out of range")
        return self.clause_count + BLOCK_SIZE * (i - 1) + _OFFSET[kind]

    def role_token(self, v: int) -> str:
        kind, num = self.roles[v]
        return f"{kind}{num}"

    def hub_vertices(self) -> frozenset[int]:
        """The clique every other vertex hangs off: clause, y, ybar, z vertices."""
        hub = set(range(self.clause_count))
        for i in range(1, self.variable_count + 1):
            hub.update((self.vertex("y", i), self.vertex("ybar", i),
                        self.vertex("z", i)))
        return frozenset(hub)

    def variable_triple(self, i: int) -> tuple[int, int, int]:
        """The concave triple of variable i; hull sets must hit it."""
        return (self.vertex("x", i), self.vertex("z", i), self.vertex("xbar", i))

    def clause_region(self, j: int) -> frozenset[int]:
        """The concave region of clause j: its vertex plus the gadget vertices
        that can pull it into a hull."""
        region = {self.clause_vertex(j)}
        for i, (a, b, c) in enumerate(occurrence_table(self.cnf), start=1):
            if j - 1 == a:
                region.update((self.vertex("x", i), self.vertex("xp", i),
                               self.vertex("x1", i)))
            if j - 1 == b:
                region.update((self.vertex("x", i), self.vertex("xp", i),
                               self.vertex("x2", i)))
            if j - 1 == c:
                region.update((self.vertex("xbar", i), self.vertex("xbarp", i)))
        return frozenset(region)

    def designated_simplicial(self) -> frozenset[int]:
        """The 3n gadget tips that are simplicial by construction."""
        out = set()
        for i in range(1, self.variable_count + 1):
            out.update((self.vertex("xp1", i), self.vertex("xp2", i),
                        self.vertex("xbarpp", i)))
        return frozenset(out)

    def elimination_ordering(self) -> tuple[int, ...]:
        """The staged ordering that witnesses chordality.

        Tips first, then their supports, then xp, then x and xbar, and the
        hub clique last; ascending variable index within each stage.
        """
        order: list[int] = []
        stages = (("xp1", "xp2", "xbarpp"), ("x1", "x2", "xbarp"),
                  ("xp",), ("x", "xbar"))
        for stage in stages:
            for i in range(1, self.variable_count + 1):
                order.extend(self.vertex(kind, i) for kind in stage)
        order.extend(sorted(self.hub_vertices()))
        return tuple(order)


def gadget_edges(rg: ReductionGraph, i: int) -> list[tuple[int, int]]:
    """The 26 gadget edges of variable i, normalized (min, max)."""
    if not 1 <= i <= rg.variable_count:
        raise ValueError(f"variable index {i} out of range")
    a, b, c = occurrence_table(rg.cnf)[i - 1]
    edges = _variable_gadget(rg.vertex, i, a, b, c)
    return sorted((u, v) if u < v else (v, u) for u, v in edges)


def _variable_gadget(vx, i: int, a: int, b: int, c: int) -> list[tuple[int, int]]:
    """Edges added for variable i whose positive literal sits in clauses
    a and b and whose negation sits in clause c (all 0-based)."""
    x, xp = vx("x", i), vx("xp", i)
    x1, x2 = vx("x1", i), vx("x2", i)
    xp1, xp2 = vx("xp1", i), vx("xp2", i)
    xbar, xbarp, xbarpp = vx("xbar", i), vx("xbarp", i), vx("xbarpp", i)
    y, ybar, z = vx("y", i), vx("ybar", i), vx("z", i)
    ca, cb, cc = a, b, c
    return [
        # Positive side.  x sees z, y and its two clause vertices, so the
        # pair {x, xbarpp} spans distance 3 through the hub and its interval
        # captures z, ybar and both clause vertices; {xp, z} recovers x.
        (x, xp), (x, z), (x, y), (x, ca), (x, cb),
        # xp sees both supports, y and the same clause vertices; {x1, x2}
        # meet only at xp and y, which recovers xp.
        (xp, x1), (xp, x2), (xp, y), (xp, ca), (xp, cb),
        # Each support hangs between its tip and one clause vertex, so
        # {xp1, ca} recovers x1 and {xp2, cb} recovers x2.
        (x1, xp1), (x1, y), (x1, ca),
        (x2, xp2), (x2, y), (x2, cb),
        # Tips touch only their support and y: simplicial by construction.
        (xp1, y), (xp2, y),
        # Negated side, one support level shorter: {xbar, xp1} spans
        # distance 3, {xbarpp, cc} recovers xbarp, {xbarp, z} recovers xbar.
        (xbar, xbarp), (xbar, z), (xbar, ybar), (xbar, cc),
        (xbarp, xbarpp), (xbarp, ybar), (xbarp, cc),
        (xbarpp, ybar),
    ]


def build_reduction(cnf: RestrictedCnf) -> ReductionGraph:
    """Build the reduction graph of a valid restricted instance."""
    violations = validate_restricted(cnf)
    if violations:
        raise InvalidInstance("; ".join(violations))
    n, m = cnf.variable_count, cnf.clause_count
    vertex_count = BLOCK_SIZE * n + m

    roles: list[tuple[str, int]] = [("c", j) for j in range(1, m + 1)]
    for i in range(1, n + 1):
        roles.extend((kind, i) for kind in ROLE_ORDER)

    def vx(kind: str, i: int) -> int:
        if kind == "c":
            return i - 1
        return m + BLOCK_SIZE * (i - 1) + _OFFSET[kind]

    hub = list(range(m))
    for i in range(1, n + 1):
        hub.extend((vx("y", i), vx("ybar", i), vx("z", i)))
    edges = list(combinations(sorted(hub), 2))
    for i, (a, b, c) in enumerate(occurrence_table(cnf), start=1):
        edges.extend(_variable_gadget(vx, i, a, b, c))

    names = {idx: f"{kind}{num}" for idx, (kind, num) in enumerate(roles)}
    graph = Graph(vertex_count, edges, names)
    return ReductionGraph(graph=graph, cnf=cnf, roles=tuple(roles))


# -- witness translation ------------------------------------------------------

def assignment_to_hull_set(rg: ReductionGraph, assignment: Assignment) -> frozenset[int]:
    """The canonical 4n-vertex candidate hull set of a truth assignment:
    every gadget tip, plus x_i for true variables and xbar_i for false ones."""
    members = set(rg.designated_simplicial())
    for i in range(1, rg.variable_count + 1):
        members.add(rg.vertex("x" if assignment[i - 1] else "xbar", i))
    return frozenset(members)


def induced_assignment(rg: ReductionGraph, vertices: frozenset[int] | set[int]) -> Assignment:
    """Assignment read off a vertex set: variable i is true iff x_i is in it."""
    return tuple(rg.vertex("x", i) in vertices
                 for i in range(1, rg.variable_count + 1))


def hull_set_to_assignment(rg: ReductionGraph,
                           vertices: frozenset[int] | set[int]) -> Assignment:
    """Assignment recovered from a hull set of size at most 4n.

    Raises NotAWitness when the set is too large or is not a hull set.
    """
    if len(vertices) > rg.k:
        raise NotAWitness(f"set of size {len(vertices)} exceeds k = {rg.k}")
    if not is_hull_set(rg.graph, vertices):
        raise NotAWitness("set is not a hull set")
    return induced_assignment(rg, vertices)


# -- reports ------------------------------------------------------------------

@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str

    @property
    def line(self) -> str:
        return f"{'PASS' if self.passed else 'FAIL'} {self.name}: {self.detail}"


@dataclass(frozen=True)
class StructureReport:
    checks: tuple[CheckResult, ...]
    notes: tuple[str, ...]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def lines(self) -> list[str]:
        out = [c.line for c in self.checks]
        out.extend(f"NOTE {note}" for note in self.notes)
        return out

    def __str__(self) -> str:
        return "\n".join(self.lines())


def verify_structure(rg: ReductionGraph) -> StructureReport:
    """Run the eight structural checks the construction promises."""
    checks = []

    def record(name: str, fn):
        try:
            passed, detail = fn()
        except GeohullError as exc:
            passed, detail = False, f"error: {exc}"
        checks.append(CheckResult(name, passed, detail))

    g = rg.graph
    n, m = rg.variable_count, rg.clause_count

    def check_order():
        expected = BLOCK_SIZE * n + m
        return g.vertex_count == expected, \
            f"{g.vertex_count} vertices, expected {BLOCK_SIZE}n+m = {expected}"

    def check_diameter():
        d = max(max(row) for row in g.distances())
        return d == 3, f"diameter {d}, expected 3"

    def check_hub_eccentricity():
        dist = g.distances()
        bad = [v for v in sorted(rg.hub_vertices()) if max(dist[v]) != 2]
        return not bad, ("all hub vertices have eccentricity 2" if not bad
                         else f"hub vertices with eccentricity != 2: {bad}")

    def check_cross_distances():
        dist = g.distances()
        bad = []
        for i in range(1, n + 1):
            if dist[rg.vertex("x", i)][rg.vertex("xbarp", i)] != 3:
                bad.append(("x", "xbarp", i))
            if dist[rg.vertex("xbar", i)][rg.vertex("xp1", i)] != 3:
                bad.append(("xbar", "xp1", i))
        return not bad, ("dist(x_i, xbarp_i) = dist(xbar_i, xp1_i) = 3 for all i"
                         if not bad else f"pairs at wrong distance: {bad}")

    def check_elimination_ordering():
        ok = is_perfect_elimination_ordering(g, rg.elimination_ordering())
        return ok, ("staged ordering is a perfect elimination ordering"
                    if ok else "staged ordering is not a perfect elimination ordering")

    def check_simplicial():
        actual = simplicial_vertices(g)
        expected = rg.designated_simplicial()
        return actual == expected, \
            (f"exactly the {3 * n} designated tips are simplicial"
             if actual == expected
             else f"simplicial set {sorted(actual)} != designated {sorted(expected)}")

    def check_triples():
        bad = [i for i in range(1, n + 1)
               if not is_concave(g, rg.variable_triple(i))]
        return not bad, ("{x_i, z_i, xbar_i} is concave for every i" if not bad
                         else f"non-concave triples for variables: {bad}")

    def check_regions():
        bad = [j for j in range(1, m + 1)
               if not is_concave(g, rg.clause_region(j))]
        return not bad, ("every clause region is concave" if not bad
                         else f"non-concave regions for clauses: {bad}")

    record("order", check_order)
    record("diameter", check_diameter)
    record("hub-eccentricity", check_hub_eccentricity)
    record("cross-distances", check_cross_distances)
    record("elimination-ordering", check_elimination_ordering)
    record("simplicial", check_simplicial)
    record("variable-triples", check_triples)
    record("clause-regions", check_regions)

    notes = ("gadget size: each variable contributes 9 vertices and 26 edges",)
    return StructureReport(tuple(checks), notes)


@dataclass(frozen=True)
class EquivalenceReport:
    satisfiable: bool
    hull_number: int
    k: int
    witness: frozenset[int]
    checks: tuple[CheckResult, ...]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def lines(self) -> list[str]:
        out = [f"satisfiable={'true' if self.satisfiable else 'false'}",
               f"h={self.hull_number}",
               f"k={self.k}"]
        out.extend(c.line for c in self.checks)
        return out

    def __str__(self) -> str:
        return "\n".join(self.lines())


def equivalence_check(cnf: RestrictedCnf,
                      max_variables: int = 12,
                      node_budget: int | None = None) -> EquivalenceReport:
    """Confirm satisfiable <=> hull number <= 4n on one instance.

    Satisfiability comes from exhaustive assignment enumeration, the hull
    number from the exact solver; when a small witness exists its shape is
    checked as well (all tips present, one triple member per variable, and
    the read-off assignment satisfies the instance).
    """
    violations = validate_restricted(cnf)
    if violations:
        raise InvalidInstance("; ".join(violations))
    if cnf.variable_count > max_variables:
        raise TooLarge(
            f"{cnf.variable_count} variables exceeds the enumeration cap "
            f"of {max_variables}")
    rg = build_reduction(cnf)
    sat = is_satisfiable(cnf, max_variables)
    result = hull_number_exact(rg.graph, node_budget)
    h, k = result.hull_number, rg.k

    checks = []
    equivalent = sat == (h <= k)
    checks.append(CheckResult(
        "equivalence", equivalent,
        f"satisfiable={'true' if sat else 'false'} and h{'<=' if h <= k else '>'}k"))
    if h <= k:
        witness = result.witness
        tips = rg.designated_simplicial()
        checks.append(CheckResult(
            "witness-simplicial", tips <= witness,
            "witness contains every simplicial vertex" if tips <= witness
            else "witness misses a simplicial vertex"))
        picks = witness - tips
        triples = [frozenset(rg.variable_triple(i))
                   for i in range(1, rg.variable_count + 1)]
        one_each = (all(len(t & witness) == 1 for t in triples)
                    and picks <= frozenset().union(*triples))
        checks.append(CheckResult(
            "witness-triples", one_each,
            "witness picks exactly one of {x_i, z_i, xbar_i} per variable"
            if one_each else "witness picks do not hit each triple exactly once"))
        try:
            assignment = hull_set_to_assignment(rg, witness)
            ok = satisfies(cnf, assignment)
        except NotAWitness:
            ok = False
        checks.append(CheckResult(
            "witness-assignment", ok,
            "assignment read off the witness satisfies the instance" if ok
            else "assignment read off the witness does not satisfy the instance"))
    return EquivalenceReport(sat, h, k, result.witness, tuple(checks))


# -- labels sidecar -----------------------------------------------------------

def format_labels(rg: ReductionGraph) -> str:
    """One "<index> <role>" line per vertex, ascending."""
    return "\n".join(f"{v} {rg.role_token(v)}"
                     for v in range(rg.graph.vertex_count)) + "\n"


def with_graph(rg: ReductionGraph, graph: Graph) -> ReductionGraph:
    """Same roles and instance over a different graph (mutation testing)."""
    return replace(rg, graph=graph)

"""Isomorph-free exhaustive graph generation by canonical augmentation.

Graphs on n vertices are generated by extending each accepted graph on
j < n vertices with one new vertex and every attachment set, subject to
two symmetry gates that together emit exactly one representative per
isomorphism class without any global seen-set:

  * attachment sets are deduplicated per parent up to the parent's
    automorphism group (one subset per orbit);
  * a child is kept only when the added vertex lies in the orbit of the
    canonical-deletion vertex, taken as the vertex in the last position
    of the canonical labeling.

Because refinement orders cells by degree, the canonical-deletion vertex
always carries the extremal degree, which gives two cheap rejection
tests before any canonical search: the new vertex must attain the
extremal degree, and must land in the last cell of the refined
partition.  When the refined partition is discrete the graph is rigid
and the acceptance decision needs no search at all.

Filters push down only hereditary consequences (degree caps, edge-count
reachability, regularity deficiency bounds, forbidden-subgraph
freeness); exact conditions such as the edge count are enforced at
emission, so pruning never changes the emitted set.

The ``desc`` flag flips the cell-ordering convention of the canonical
form, producing a second, independently structured augmentation tree
used for cross-checks.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from .canon import _refine, _search, orbits_from_generators
from .graphs import Graph, contains_subgraph, is_connected

HARD_CAP = 11


class EnumerationError(ValueError):
    pass


@dataclass
class GenFilter:
    """Declarative class filter for exhaustive generation."""

    n: int
    max_degree: int | None = None
    edge_count: int | None = None
    regular_k: int | None = None
    connected: bool | None = None
    # search support: graphs containing any of these are never emitted;
    # freeness is hereditary, so it is safe to prune mid-tree.
    forbidden: tuple = ()

    def validate(self):
        if self.n < 1:
            raise EnumerationError("order must be >= 1")
        if self.regular_k is not None:
            k = self.regular_k
            if not 0 <= k < self.n:
                raise EnumerationError("regular degree must satisfy 0 <= k < n")
            if self.max_degree is not None and self.max_degree < k:
                raise EnumerationError("max_degree below regular_k")
            if self.edge_count is not None and 2 * self.edge_count != self.n * k:
                raise EnumerationError("edge_count inconsistent with regular_k")

    def infeasible(self):
        """True when no graph can satisfy the filter (flagged, not raised)."""
        if self.regular_k is not None and (self.n * self.regular_k) % 2 != 0:
            return True
        cap = self.n * (self.n - 1) // 2
        if self.max_degree is not None:
            cap = min(cap, self.n * self.max_degree // 2)
        if self.edge_count is not None and self.edge_count > cap:
            return True
        return False


@dataclass
class GenStats:
    classes: int = 0
    nodes: int = 0
    pruned: dict = field(default_factory=dict)
    seconds: float = 0.0
    infeasible: bool = False

    def bump(self, reason, amount=1):
        self.pruned[reason] = self.pruned.get(reason, 0) + amount


class _Stop(Exception):
    pass


def _extend(rows, j, s):
    bit = 1 << j
    new = list(rows)
    m = s
    while m:
        low = m & -m
        new[low.bit_length() - 1] |= bit
        m ^= low
    new.append(s)
    return tuple(new)


def _subset_orbit_reps(j, gens):
    if not gens:
        return range(1 << j)
    seen = bytearray(1 << j)
    reps = []
    for s in range(1 << j):
        if seen[s]:
            continue
        reps.append(s)
        seen[s] = 1
        stack = [s]
        while stack:
            t = stack.pop()
            for a in gens:
                u = 0
                m = t
                while m:
                    low = m & -m
                    u |= 1 << a[low.bit_length() - 1]
                    m ^= low
                if not seen[u]:
                    seen[u] = 1
                    stack.append(u)
    return reps


def _accept(rows, nc, desc):
    """Canonical-augmentation acceptance for the vertex added last.

    Returns (accepted, generators); generators are only meaningful on
    acceptance and feed the child's own subset deduplication.
    """
    j = nc - 1
    deg_j = rows[j].bit_count()
    if desc:
        for r in rows:
            if r.bit_count() < deg_j:
                return False, None
    else:
        for r in rows:
            if r.bit_count() > deg_j:
                return False, None
    cells = _refine(rows, nc, [list(range(nc))], desc)
    last = cells[-1]
    if j not in last:
        return False, None
    if len(cells) == nc:
        # discrete refinement: rigid graph, j is the canonical-last vertex
        return True, []
    perm, _, autos = _search(rows, nc, cells, desc)
    w = perm[nc - 1]
    if w == j:
        return True, autos
    orb = orbits_from_generators(nc, autos)
    return orb[w] == orb[j], autos


class _Run:
    def __init__(self, filt, visitor, desc):
        self.n = filt.n
        self.r = filt.max_degree if filt.max_degree is not None else filt.n - 1
        if filt.regular_k is not None:
            self.r = min(self.r, filt.regular_k)
        self.k = filt.regular_k
        self.m = filt.edge_count
        if self.k is not None:
            self.m = self.n * self.k // 2
        self.connected = filt.connected
        self.forbidden = filt.forbidden
        self.visitor = visitor
        self.desc = desc
        self.stats = GenStats()
        # max edges addable by vertices j+1..n-1 given the degree cap
        self.future = [0] * (self.n + 1)
        for j in range(self.n - 1, -1, -1):
            self.future[j] = self.future[j + 1] + min(j, self.r)

    def emit(self, rows):
        g = Graph(self.n, rows)
        if self.connected is not None and is_connected(g) != self.connected:
            self.stats.bump("connectivity")
            return
        self.stats.classes += 1
        if self.visitor is not None:
            if self.visitor(g):
                raise _Stop

    def child_ok(self, rows, j, s, edges):
        """Hereditary pushdown for attaching set ``s`` to vertex j."""
        size = s.bit_count()
        if size > self.r:
            self.stats.bump("degree")
            return False
        for v in range(j):
            if (s >> v) & 1 and rows[v].bit_count() >= self.r:
                self.stats.bump("degree")
                return False
        e2 = edges + size
        if self.m is not None:
            if e2 > self.m or e2 + self.future[j + 1] < self.m:
                self.stats.bump("edges")
                return False
        if self.k is not None:
            f = self.n - j - 1
            total_def = 0
            for v in range(j):
                d = rows[v].bit_count() + ((s >> v) & 1)
                deficit = self.k - d
                if deficit > f:
                    self.stats.bump("deficiency")
                    return False
                total_def += deficit
            deficit = self.k - size
            if deficit > f:
                self.stats.bump("deficiency")
                return False
            total_def += deficit
            if total_def > f * self.k or (total_def - f * self.k) % 2 != 0:
                self.stats.bump("deficiency")
                return False
        return True

    def descend(self, rows, j, gens, edges):
        self.stats.nodes += 1
        if j == self.n:
            self.emit(rows)
            return
        for s in _subset_orbit_reps(j, gens):
            if not self.child_ok(rows, j, s, edges):
                continue
            child = _extend(rows, j, s)
            if self.forbidden:
                cg = Graph(j + 1, child)
                if any(contains_subgraph(cg, h, anchor=j) for h in self.forbidden):
                    self.stats.bump("forbidden")
                    continue
            ok, child_gens = _accept(child, j + 1, self.desc)
            if not ok:
                self.stats.bump("canonical")
                continue
            self.descend(child, j + 1, child_gens, edges + s.bit_count())


def enumerate_graphs(filt, visitor=None, desc=False, force=False):
    """Run the generator; the visitor sees one Graph per class.

    A visitor returning a truthy value stops the run early.  Orders
    beyond the hard cap (n = 11) require ``force``.
    """
    filt.validate()
    if filt.n > HARD_CAP and not force:
        raise EnumerationError(
            f"order {filt.n} beyond enumeration cap {HARD_CAP}; pass force=True"
        )
    t0 = time.perf_counter()
    run = _Run(filt, visitor, desc)
    if filt.infeasible():
        run.stats.infeasible = True
    else:
        try:
            if filt.n == 0:
                pass
            else:
                run.descend((0,), 1, [], 0)
        except _Stop:
            pass
    run.stats.seconds = time.perf_counter() - t0
    return run.stats


def enumerate_regular(n, k, visitor=None, desc=False, forbidden=(), force=False):
    """One representative per isomorphism class of k-regular graphs.

    Enumerates the sparser of the graph and its complement; forbidden
    patterns prune during generation on the direct side and are checked
    after complementing on the dense side.
    """
    if not 0 <= k < n:
        raise EnumerationError("regular degree must satisfy 0 <= k < n")
    if (n * k) % 2 != 0:
        stats = GenStats(infeasible=True)
        return stats
    kc = n - 1 - k
    if kc < k:
        from .graphs import complement

        def wrapped(g):
            gc = complement(g)
            if forbidden and any(contains_subgraph(gc, h) for h in forbidden):
                return None
            return visitor(gc) if visitor is not None else None

        # stats.classes counts all k-regular classes here; callers needing
        # exact H-free counts tally matches inside their visitor.
        return enumerate_graphs(
            GenFilter(n=n, regular_k=kc), visitor=wrapped, desc=desc, force=force
        )
    return enumerate_graphs(
        GenFilter(n=n, regular_k=k, forbidden=tuple(forbidden)),
        visitor=visitor,
        desc=desc,
        force=force,
    )

"""Dense simple-graph kernel on integer bitmask adjacency rows.

A graph on n vertices is stored as a tuple of n Python ints; bit v of
``rows[u]`` is set iff uv is an edge.  Arbitrary-precision ints give one
representation that is fast for the search range (n <= 11) and still
workable for construction validation (n up to a few thousand), where the
hot census loops reduce to big-int AND + popcount.

All operations treat graphs as immutable values; every function returns
fresh objects and never mutates its inputs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations

import numpy as np


class GraphError(ValueError):
    """Raised for invalid graph construction or malformed encodings."""


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph: ``n`` vertices, bitmask adjacency rows."""

    n: int
    rows: tuple

    def degree(self, v):
        return self.rows[v].bit_count()

    def degree_sequence(self):
        return tuple(sorted(r.bit_count() for r in self.rows))

    @property
    def edge_count(self):
        return sum(r.bit_count() for r in self.rows) // 2

    def has_edge(self, u, v):
        return (self.rows[u] >> v) & 1 == 1

    def neighbors(self, v):
        return bits(self.rows[v])

    def edges(self):
        for u in range(self.n):
            r = self.rows[u] >> (u + 1)
            v = u + 1
            while r:
                if r & 1:
                    yield (u, v)
                r >>= 1
                v += 1

    def is_regular(self, k=None):
        if self.n == 0:
            return True
        d = self.rows[0].bit_count()
        if k is not None and d != k:
            return False
        return all(r.bit_count() == d for r in self.rows)

    def check_invariants(self):
        """Symmetry, empty diagonal, handshaking; raises on violation."""
        for u, r in enumerate(self.rows):
            if r < 0 or r >> self.n:
                raise GraphError(f"row {u} has bits beyond vertex range")
            if (r >> u) & 1:
                raise GraphError(f"self-loop at {u}")
        for u in range(self.n):
            for v in bits(self.rows[u]):
                if not (self.rows[v] >> u) & 1:
                    raise GraphError(f"asymmetric edge {u}-{v}")
        if sum(r.bit_count() for r in self.rows) % 2 != 0:
            raise GraphError("odd degree sum")


def bits(mask):
    """Yield set-bit positions of a nonnegative int, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def from_edges(n, edges):
    """Build a graph from an edge list; duplicates are idempotent."""
    if n < 0:
        raise GraphError("vertex count must be nonnegative")
    rows = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"vertex out of range in edge ({u},{v})")
        if u == v:
            raise GraphError(f"self-loop at {u}")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, tuple(rows))


def from_rows(n, rows):
    return Graph(n, tuple(rows))


def complement(g):
    """Complement off the diagonal; an involution."""
    full = (1 << g.n) - 1
    return Graph(g.n, tuple((full ^ r) & ~(1 << v) for v, r in enumerate(g.rows)))


def induced_subgraph(g, vertices):
    """Induced subgraph on ``vertices`` (kept in the given order)."""
    idx = {v: i for i, v in enumerate(vertices)}
    rows = [0] * len(vertices)
    for i, v in enumerate(vertices):
        r = g.rows[v]
        for w in bits(r):
            j = idx.get(w)
            if j is not None:
                rows[i] |= 1 << j
    return Graph(len(vertices), tuple(rows))


def relabel(g, perm):
    """Relabeled copy; ``perm[i]`` is the old vertex at new position i."""
    pos = [0] * g.n
    for i, v in enumerate(perm):
        pos[v] = i
    rows = [0] * g.n
    for i, v in enumerate(perm):
        r = 0
        for w in bits(g.rows[v]):
            r |= 1 << pos[w]
        rows[i] = r
    return Graph(g.n, tuple(rows))


def disjoint_union(*graphs):
    rows = []
    offset = 0
    for g in graphs:
        rows.extend(r << offset for r in g.rows)
        offset += g.n
    return Graph(offset, tuple(rows))


# ---------------------------------------------------------------------------
# named builders


def empty_graph(n):
    return Graph(n, (0,) * n)


def complete_graph(n):
    full = (1 << n) - 1
    return Graph(n, tuple(full ^ (1 << v) for v in range(n)))


def cycle_graph(n):
    if n < 3:
        raise GraphError("cycle needs at least 3 vertices")
    return from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n):
    return from_edges(n, [(i, i + 1) for i in range(n - 1)])


def complete_bipartite(a, b):
    left = ((1 << b) - 1) << a
    right = (1 << a) - 1
    return Graph(a + b, tuple([left] * a + [right] * b))


def star_graph(leaves):
    """Star K_{1,leaves}: vertex 0 is the center."""
    return complete_bipartite(1, leaves)


def complete_multipartite(sizes):
    n = sum(sizes)
    full = (1 << n) - 1
    rows = []
    start = 0
    for s in sizes:
        part = ((1 << s) - 1) << start
        rows.extend([full ^ part] * s)
        start += s
    return Graph(n, tuple(rows))


def petersen_graph():
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges += [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    edges += [(i, 5 + i) for i in range(5)]
    return from_edges(10, edges)


# ---------------------------------------------------------------------------
# census operations


def count_cliques(g, t):
    """Number of t-vertex cliques (unlabeled subgraph count)."""
    if not 1 <= t <= g.n:
        if t > g.n:
            return 0
        raise GraphError("clique size must be >= 1")
    if t == 1:
        return g.n
    rows = g.rows

    def rec(cand, depth):
        if depth == 1:
            return cand.bit_count()
        total = 0
        m = cand
        while m:
            low = m & -m
            v = low.bit_length() - 1
            m ^= low
            total += rec(rows[v] & m, depth - 1)
        return total

    return rec((1 << g.n) - 1, t)


def total_cliques(g):
    """Number of cliques with at least 2 vertices."""
    rows = g.rows

    def rec(cand):
        total = 0
        m = cand
        while m:
            low = m & -m
            v = low.bit_length() - 1
            m ^= low
            total += 1 + rec(rows[v] & m)
        return total

    return rec((1 << g.n) - 1) - g.n


def common_neighbors(g, u, v):
    """Common neighborhood of two distinct vertices, as a sorted tuple."""
    if u == v:
        raise GraphError("vertices must be distinct")
    return tuple(bits(g.rows[u] & g.rows[v]))


def count_stars(g, s):
    """Number of K_{1,s} subgraphs: sum of C(deg v, s)."""
    if s < 1:
        raise GraphError("star size must be >= 1")
    return sum(math.comb(r.bit_count(), s) for r in g.rows)


def count_complete_bipartite(g, a, b):
    """Number of K_{a,b} subgraphs, each copy counted once."""
    if a < 1 or b < 1:
        raise GraphError("biclique sides must be >= 1")
    rows = g.rows
    total = 0
    for side in combinations(range(g.n), a):
        common = (1 << g.n) - 1
        for v in side:
            common &= rows[v]
        total += math.comb(common.bit_count(), b)
    if a == b:
        # each copy seen from both sides
        assert total % 2 == 0
        total //= 2
    return total


def triangle_count(g):
    """Triangle census by per-edge common-neighborhood popcount."""
    rows = g.rows
    total = 0
    for u in range(g.n):
        ru = rows[u]
        above = ru >> (u + 1) << (u + 1)
        m = above
        while m:
            low = m & -m
            v = low.bit_length() - 1
            m ^= low
            total += (ru & rows[v] & m).bit_count()
    return total


def _twin_reduced(g):
    """Induced subgraph keeping one vertex per identical-row class.

    Equal rows force non-adjacency, so this deletes false twins only;
    both the odd girth and triangle existence are preserved.
    """
    seen = {}
    reps = []
    for v, r in enumerate(g.rows):
        if r not in seen:
            seen[r] = v
            reps.append(v)
    if len(reps) == g.n:
        return g
    return induced_subgraph(g, reps)


def is_triangle_free(g):
    h = _twin_reduced(g)
    rows = h.rows
    for u in range(h.n):
        ru = rows[u]
        m = ru >> (u + 1) << (u + 1)
        while m:
            low = m & -m
            v = low.bit_length() - 1
            m ^= low
            if ru & rows[v]:
                return False
    return True


def odd_girth(g):
    """Length of a shortest odd cycle, or None iff bipartite.

    BFS from every vertex of the twin-reduced graph; an edge inside the
    layer at distance d witnesses an odd closed walk of length 2d+1.
    """
    h = _twin_reduced(g)
    rows = h.rows
    n = h.n
    best = None
    for s in range(n):
        seen = 1 << s
        layer = 1 << s
        d = 0
        while layer:
            if best is not None and 2 * d + 1 >= best:
                break
            m = layer
            hit = False
            nxt = 0
            while m:
                low = m & -m
                v = low.bit_length() - 1
                m ^= low
                r = rows[v]
                if r & layer:
                    hit = True
                    break
                nxt |= r
            if hit:
                cand = 2 * d + 1
                if best is None or cand < best:
                    best = cand
                break
            layer = nxt & ~seen
            seen |= layer
            d += 1
    return best


def two_coloring(g):
    """Proper 2-coloring as a list of 0/1, or None if not bipartite."""
    color = [-1] * g.n
    for s in range(g.n):
        if color[s] != -1:
            continue
        color[s] = 0
        queue = [s]
        while queue:
            u = queue.pop()
            for v in bits(g.rows[u]):
                if color[v] == -1:
                    color[v] = 1 - color[u]
                    queue.append(v)
                elif color[v] == color[u]:
                    return None
    return color


def is_connected(g):
    if g.n <= 1:
        return True
    seen = 1
    frontier = 1
    rows = g.rows
    while frontier:
        nxt = 0
        m = frontier
        while m:
            low = m & -m
            v = low.bit_length() - 1
            m ^= low
            nxt |= rows[v]
        frontier = nxt & ~seen
        seen |= frontier
    return seen == (1 << g.n) - 1


def connected_components(g):
    """Vertex sets of the components, as bitmasks."""
    left = (1 << g.n) - 1
    comps = []
    rows = g.rows
    while left:
        start = left & -left
        seen = start
        frontier = start
        while frontier:
            nxt = 0
            m = frontier
            while m:
                low = m & -m
                v = low.bit_length() - 1
                m ^= low
                nxt |= rows[v]
            frontier = nxt & ~seen
            seen |= frontier
        comps.append(seen)
        left &= ~seen
    return comps


# ---------------------------------------------------------------------------
# subgraph containment


def _pattern_order(h):
    """Order pattern vertices: max degree first, then connectivity-first."""
    if h.n == 0:
        return []
    order = []
    placed = 0
    degs = [r.bit_count() for r in h.rows]
    while len(order) < h.n:
        best_v, best_key = None, None
        for v in range(h.n):
            if (placed >> v) & 1:
                continue
            attached = (h.rows[v] & placed).bit_count()
            key = (attached, degs[v])
            if best_key is None or key > best_key:
                best_key, best_v = key, v
        order.append(best_v)
        placed |= 1 << best_v
    return order


def contains_subgraph(g, h, anchor=None):
    """True iff h embeds into g as a (not necessarily induced) subgraph.

    Backtracking over pattern vertices in degree/connectivity order with
    neighborhood-intersection candidate masks.  With ``anchor`` set, only
    embeddings whose image contains that vertex of g are accepted.
    """
    if h.n > g.n:
        return False
    if h.n == 0:
        return True
    order = _pattern_order(h)
    hdeg = [r.bit_count() for r in h.rows]
    gdeg = [r.bit_count() for r in g.rows]
    grows = g.rows
    full = (1 << g.n) - 1
    deg_ok = [0] * (h.n + 1)
    for d in range(h.n + 1):
        mask = 0
        for v in range(g.n):
            if gdeg[v] >= d:
                mask |= 1 << v
        deg_ok[d] = mask

    image = [0] * h.n  # pattern vertex -> g vertex

    def rec(i, used):
        if i == len(order):
            return anchor is None or (used >> anchor) & 1 == 1
        p = order[i]
        cand = full & ~used & deg_ok[hdeg[p]]
        for q in order[:i]:
            if (h.rows[p] >> q) & 1:
                cand &= grows[image[q]]
        if anchor is not None and i == len(order) - 1 and not (used >> anchor) & 1:
            cand &= 1 << anchor
        m = cand
        while m:
            low = m & -m
            v = low.bit_length() - 1
            m ^= low
            image[p] = v
            if rec(i + 1, used | low):
                return True
        return False

    return rec(0, 0)


def count_subgraph_embeddings(g, h):
    """Number of injective edge-preserving maps from h into g."""
    if h.n > g.n:
        return 0
    order = _pattern_order(h)
    hdeg = [r.bit_count() for r in h.rows]
    grows = g.rows
    full = (1 << g.n) - 1
    image = [0] * h.n

    def rec(i, used):
        if i == len(order):
            return 1
        p = order[i]
        cand = full & ~used
        for q in order[:i]:
            if (h.rows[p] >> q) & 1:
                cand &= grows[image[q]]
        total = 0
        m = cand
        while m:
            low = m & -m
            v = low.bit_length() - 1
            m ^= low
            if grows[v].bit_count() >= hdeg[p]:
                image[p] = v
                total += rec(i + 1, used | low)
        return total

    return rec(0, 0)


# ---------------------------------------------------------------------------
# cycle counting


def _adjacency_matrix(g):
    a = np.zeros((g.n, g.n), dtype=np.int64)
    for u in range(g.n):
        for v in bits(g.rows[u]):
            a[u, v] = 1
    return a


def _count_cycles_dfs(g, m):
    """Anchored simple-path search; each cycle found twice, halved."""
    rows = g.rows
    total = 0
    for a in range(g.n):
        higher = -1 << (a + 1)  # vertices above the anchor

        def rec(v, depth, visited):
            nonlocal total
            if depth == m - 1:
                if (rows[v] >> a) & 1:
                    total += 1
                return
            cand = rows[v] & higher & ~visited
            mm = cand
            while mm:
                low = mm & -mm
                w = low.bit_length() - 1
                mm ^= low
                rec(w, depth + 1, visited | low)

        start = rows[a] & higher
        while start:
            low = start & -start
            v = low.bit_length() - 1
            start ^= low
            rec(v, 1, (1 << a) | low)
    assert total % 2 == 0
    return total // 2


def count_cycles(g, m):
    """Number of m-cycle subgraphs, 3 <= m <= 8, each counted once.

    Short cycles go through closed-walk trace identities; longer ones
    fall back to anchored path search.
    """
    if not 3 <= m <= 8:
        raise GraphError("cycle length must be between 3 and 8")
    if g.n < m:
        return 0
    if m == 3:
        return triangle_count(g)
    a = _adjacency_matrix(g)
    deg = a.sum(axis=1)
    a2 = a @ a
    if m == 4:
        # tr(A^4) = 2*sum(d^2) - sum(d) + 8*c4
        tr4 = int((a2 * a2).sum())
        return (tr4 - 2 * int((deg * deg).sum()) + int(deg.sum())) // 8
    if m == 5:
        a3 = a2 @ a
        tr3 = int(np.trace(a3))
        tr5 = int((a2 * (a3.T)).sum())
        wedge = int((np.diag(a3) * (deg - 2)).sum())
        return (tr5 - 5 * tr3 - 5 * wedge) // 10
    return _count_cycles_dfs(g, m)


# ---------------------------------------------------------------------------
# graph6 encoding


def _g6_order_bytes(n):
    if n < 0:
        raise GraphError("negative order")
    if n <= 62:
        return bytes([n + 63])
    if n <= 258047:
        return bytes([126, ((n >> 12) & 63) + 63, ((n >> 6) & 63) + 63, (n & 63) + 63])
    raise GraphError("order too large for this graph6 encoder")


def graph6_encode(g):
    """Standard graph6 string (column-packed upper-triangle bits)."""
    out = bytearray(_g6_order_bytes(g.n))
    acc = 0
    nbits = 0
    for j in range(1, g.n):
        col = g.rows[j]
        for i in range(j):
            acc = (acc << 1) | ((col >> i) & 1)
            nbits += 1
            if nbits == 6:
                out.append(acc + 63)
                acc = 0
                nbits = 0
    if nbits:
        out.append((acc << (6 - nbits)) + 63)
    return out.decode("ascii")


def graph6_decode(text):
    """Decode a graph6 string; raises GraphError on malformed input."""
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    data = s.encode("ascii")
    if not data:
        raise GraphError("empty graph6 string")
    if any(b < 63 or b > 126 for b in data):
        raise GraphError("graph6 byte out of range")
    if data[0] != 126:
        n = data[0] - 63
        body = data[1:]
    else:
        if len(data) >= 2 and data[1] == 126:
            raise GraphError("graph6 orders beyond 258047 unsupported")
        if len(data) < 4:
            raise GraphError("truncated graph6 order")
        n = ((data[1] - 63) << 12) | ((data[2] - 63) << 6) | (data[3] - 63)
        body = data[4:]
    nbits = n * (n - 1) // 2
    if len(body) != (nbits + 5) // 6:
        raise GraphError("graph6 body length mismatch")
    bits_acc = 0
    for b in body:
        bits_acc = (bits_acc << 6) | (b - 63)
    pad = len(body) * 6 - nbits
    if pad and bits_acc & ((1 << pad) - 1):
        raise GraphError("nonzero graph6 padding bits")
    bits_acc >>= pad
    rows = [0] * n
    pos = nbits - 1
    for j in range(1, n):
        for i in range(j):
            if (bits_acc >> pos) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            pos -= 1
    return Graph(n, tuple(rows))


def parse_edge_list(text):
    """Parse "u v" per-line edge text; first line may be the order "n N"."""
    edges = []
    n = None
    maxv = -1
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] == "n" and len(parts) == 2 and n is None and not edges:
            n = int(parts[1])
            continue
        if len(parts) != 2:
            raise GraphError(f"bad edge line: {line!r}")
        u, v = int(parts[0]), int(parts[1])
        edges.append((u, v))
        maxv = max(maxv, u, v)
    if n is None:
        n = maxv + 1
    return from_edges(n, edges)


def format_edge_list(g):
    lines = [f"n {g.n}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"

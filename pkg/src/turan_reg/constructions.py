"""Deterministic generators for the extremal and equality constructions.

Every builder returns the graph together with a machine-readable
certificate listing the properties it claims (order, regularity, odd
girth, triangle census, embeddings) and the measured values; a violated
property aborts construction with that property named.  Verification
always goes through the generic census operations, never through the
builder's own bookkeeping.

Matchings that the underlying results merely assert to exist are pinned
down as rotations (i paired with i+c, indices cyclic), which keeps every
output reproducible; where a simple rotation schedule cannot realize the
required deletion the builder reports infeasibility instead of
searching.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .formulas import conjectured_triangle_min, forced_triangle_window
from .graphs import (
    Graph,
    induced_subgraph,
    is_triangle_free,
    odd_girth,
    triangle_count,
)


class ConstructionError(ValueError):
    """Invalid parameters or a failed self-validation check."""

    def __init__(self, message, prop=None):
        super().__init__(message)
        self.prop = prop


@dataclass
class ConstructionResult:
    name: str
    params: dict
    graph: Graph
    certificate: dict = field(default_factory=dict)


def _certify(name, params, graph, checks):
    """Evaluate (property, expected, actual) triples; abort on mismatch."""
    report = []
    for prop, expected, actual in checks:
        ok = expected == actual
        report.append(
            {"property": prop, "expected": expected, "actual": actual, "ok": ok}
        )
        if not ok:
            raise ConstructionError(
                f"{name}: property {prop!r} violated "
                f"(expected {expected!r}, measured {actual!r})",
                prop=prop,
            )
    cert = {
        "name": name,
        "params": params,
        "order": graph.n,
        "size": graph.edge_count,
        "checks": report,
    }
    return ConstructionResult(name, params, graph, cert)


def _measured_regularity(g, k):
    degs = {r.bit_count() for r in g.rows}
    return degs == {k} if g.n else True


# ---------------------------------------------------------------------------
# blow-ups along an odd cycle


def _blowup_part_sizes(ell, x, y):
    m_parts = 2 * ell + 1
    sizes = []
    if ell % 2 == 1:  # M = 3 mod 4
        for i in range(1, m_parts + 1):
            if i % 2 == 1:
                sizes.append(x)
            elif i % 4 == 2:
                sizes.append(x + y)
            else:
                sizes.append(x - y)
    else:  # M = 1 mod 4
        for i in range(1, m_parts + 1):
            if i % 2 == 0:
                sizes.append(x)
            elif i % 4 == 1:
                sizes.append(x + y)
            else:
                sizes.append(x - y)
    return sizes


def _build_cycle_blowup(sizes, matchings_removed):
    """Blow-up of an odd cycle with rotational matchings removed between
    the first and last part (their sizes must agree)."""
    m_parts = len(sizes)
    starts = [0]
    for s in sizes[:-1]:
        starts.append(starts[-1] + s)
    n = sum(sizes)
    masks = []
    for i, s in enumerate(sizes):
        masks.append(((1 << s) - 1) << starts[i])
    rows = [0] * n
    for i in range(m_parts):
        j = (i + 1) % m_parts
        for v in range(starts[i], starts[i] + sizes[i]):
            rows[v] |= masks[j]
        for v in range(starts[j], starts[j] + sizes[j]):
            rows[v] |= masks[i]
    # remove rotational matchings between part 0 and the last part
    s = sizes[0]
    if sizes[-1] != s:
        raise ConstructionError("matching parts differ in size", prop="part-sizes")
    if matchings_removed > s:
        raise ConstructionError("more matchings than part size", prop="matchings")
    base = starts[-1]
    for c in range(matchings_removed):
        for i in range(s):
            a = i
            b = base + (i + c) % s
            rows[a] &= ~(1 << b)
            rows[b] &= ~(1 << a)
    return Graph(n, tuple(rows))


def odd_girth_blowup(n, ell):
    """Regular graph of odd order n with odd girth exactly 2*ell+1.

    Writes n = (2*ell+1)x + y with x > y >= 0, joins consecutive stable
    sets around the (2*ell+1)-cycle with the parity-balanced size pattern
    and removes y rotational matchings between the first and last part.
    """
    if ell < 2:
        raise ConstructionError("ell must be >= 2")
    if n % 2 == 0:
        raise ConstructionError("order must be odd")
    m_len = 2 * ell + 1
    x, y = divmod(n, m_len)
    if x <= y:
        raise ConstructionError(
            f"n={n}: need x > y in n = {m_len}x + y (got x={x}, y={y})"
        )
    sizes = _blowup_part_sizes(ell, x, y)
    g = _build_cycle_blowup(sizes, y)
    return _certify(
        "odd-girth-blowup",
        {"n": n, "ell": ell, "x": x, "y": y, "part_sizes": sizes},
        g,
        [
            ("order", n, g.n),
            ("regular", True, _measured_regularity(g, 2 * x)),
            ("degree", 2 * x, g.rows[0].bit_count()),
            ("odd-girth", m_len, odd_girth(g)),
        ],
    )


def pentagon_blowup(n):
    """Triangle-free 2*floor(n/5)-regular graph of odd order n.

    The five stable sets have sizes (x+y, x, x-y, x, x+y) for n = 5x+y;
    the first and last parts carry a complete bipartite graph minus y
    rotational matchings.
    """
    if n % 2 == 0:
        raise ConstructionError("order must be odd")
    x, y = divmod(n, 5)
    if y >= x:
        raise ConstructionError(f"n={n}: need y < x in n = 5x + y (got x={x}, y={y})")
    result = odd_girth_blowup(n, 2)
    g = result.graph
    return _certify(
        "pentagon-blowup",
        {"n": n, "x": x, "y": y, "part_sizes": result.params["part_sizes"]},
        g,
        [
            ("order", n, g.n),
            ("regular", True, _measured_regularity(g, 2 * x)),
            ("degree", 2 * x, g.rows[0].bit_count()),
            ("triangle-free", True, is_triangle_free(g)),
        ],
    )


def circulant_small_odd(n):
    """Odd-difference circulant for the leftover small odd orders."""
    if n % 2 == 0 or not 5 <= n <= 19 or n == 15:
        raise ConstructionError("order must be odd, 5 <= n <= 19 and not 15")
    k_half = n // 5
    diffs = [2 * h + 1 for h in range(k_half)]
    rows = [0] * n
    for i in range(n):
        for d in diffs:
            rows[i] |= 1 << ((i + d) % n)
            rows[i] |= 1 << ((i - d) % n)
    g = Graph(n, tuple(rows))
    return _certify(
        "circulant-small-odd",
        {"n": n, "differences": diffs},
        g,
        [
            ("order", n, g.n),
            ("regular", True, _measured_regularity(g, 2 * k_half)),
            ("degree", 2 * k_half, g.rows[0].bit_count()),
            ("triangle-free", True, is_triangle_free(g)),
        ],
    )


# ---------------------------------------------------------------------------
# apex constructions around a near-balanced bipartite core


def apex_construction(n, k):
    """k-regular graph of odd order whose every triangle uses one vertex.

    A balanced complete bipartite graph on n-1 vertices loses
    y = (n-1)/2 - k complete matchings plus half of one more matching on
    k vertices, whose endpoints all attach to a fresh apex vertex.  The
    deleted matchings rotate the first k/2 positions and the remaining
    positions separately, so each one removes a full k/2 edges from
    inside the future apex neighborhood; the triangle count is then
    exactly (k/2)(k/2 - y - 1), about n^2/50 at the bottom of the degree
    window.
    """
    if n % 2 == 0:
        raise ConstructionError("order must be odd")
    if k % 2 != 0:
        raise ConstructionError("degree must be even")
    if not (2 * (n // 5) < k <= 2 * (n // 4)):
        raise ConstructionError(
            f"degree k={k} outside the window (2*floor(n/5), 2*floor(n/4)] for n={n}"
        )
    x = (n - 1) // 2
    y = x - k
    half = k // 2
    # the degree window forces y < half, so rotations 0..y fit in the block
    if y >= half:
        raise ConstructionError("matching schedule infeasible", prop="matchings")
    apex = n - 1
    rows = [0] * n
    left_mask = (1 << x) - 1
    right_mask = left_mask << x
    for i in range(x):
        rows[i] = right_mask
        rows[x + i] = left_mask

    def block_target(i, c):
        if i < half:
            return (i + c) % half
        return half + (i - half + c) % (x - half)

    for c in range(y):
        for i in range(x):
            a, b = i, x + block_target(i, c)
            rows[a] &= ~(1 << b)
            rows[b] &= ~(1 << a)
    # one more matching of size k/2, rotation y inside the first block
    for i in range(half):
        a, b = i, x + (i + y) % half
        rows[a] &= ~(1 << b)
        rows[b] &= ~(1 << a)
        rows[a] |= 1 << apex
        rows[b] |= 1 << apex
        rows[apex] |= (1 << a) | (1 << b)
    g = Graph(n, tuple(rows))
    off_apex = induced_subgraph(g, list(range(n - 1)))
    return _certify(
        "apex",
        {"n": n, "k": k, "x": x, "y": y},
        g,
        [
            ("order", n, g.n),
            ("regular", True, _measured_regularity(g, k)),
            ("apex-deleted-bipartite", None, odd_girth(off_apex)),
            ("triangles", half * (half - y - 1), triangle_count(g)),
        ],
    )


def triangle_min_extremal(k):
    """The unique triangle-minimizing k-regular graph on 2k+1 vertices.

    K_{k,k} minus a k/2-matching, with every matching endpoint joined to
    one extra vertex; it has exactly (k/2)(k/2-1) triangles.
    """
    if k % 2 != 0 or k < 4:
        raise ConstructionError("degree must be even and >= 4")
    n = 2 * k + 1
    apex = n - 1
    rows = [0] * n
    left_mask = (1 << k) - 1
    right_mask = left_mask << k
    for i in range(k):
        rows[i] = right_mask
        rows[k + i] = left_mask
    half = k // 2
    for i in range(half):
        a, b = i, k + i
        rows[a] &= ~(1 << b)
        rows[b] &= ~(1 << a)
        rows[a] |= 1 << apex
        rows[b] |= 1 << apex
        rows[apex] |= (1 << a) | (1 << b)
    g = Graph(n, tuple(rows))
    return _certify(
        "triangle-min-extremal",
        {"k": k, "n": n},
        g,
        [
            ("order", n, g.n),
            ("regular", True, _measured_regularity(g, k)),
            ("triangles", (k // 2) * (k // 2 - 1), triangle_count(g)),
        ],
    )


def split_apex_equality(n, k):
    """Conjectured equality graph: balanced bipartite plus a split apex.

    An apex joins k/2 vertices of each side of K_{p,p} (n = 2p+1); a
    (q+1)-regular rotational bipartite graph between the apex's two
    neighbor blocks and a q-regular one between the non-neighbor blocks
    are deleted, leaving a k-regular graph.  Infeasible rotation
    schedules are reported, never patched.
    """
    if not forced_triangle_window(n, k):
        raise ConstructionError(
            f"(n={n}, k={k}) outside the conjectured window"
        )
    p = (n - 1) // 2
    q = p - k
    half = k // 2
    rest = p - half
    if q + 1 > half:
        raise ConstructionError(
            f"deletion schedule infeasible: needs q+1={q + 1} rotations on "
            f"blocks of size {half}"
        )
    if q > rest:
        raise ConstructionError(
            f"deletion schedule infeasible: needs q={q} rotations on blocks "
            f"of size {rest}"
        )
    apex = n - 1
    rows = [0] * n
    left_mask = (1 << p) - 1
    right_mask = left_mask << p
    for i in range(p):
        rows[i] = right_mask
        rows[p + i] = left_mask
    for i in range(half):
        rows[i] |= 1 << apex
        rows[p + i] |= 1 << apex
        rows[apex] |= (1 << i) | (1 << (p + i))
    # (q+1)-regular deletion between the two neighbor blocks
    for c in range(q + 1):
        for i in range(half):
            a, b = i, p + (i + c) % half
            rows[a] &= ~(1 << b)
            rows[b] &= ~(1 << a)
    # q-regular deletion between the two non-neighbor blocks
    for c in range(q):
        for i in range(rest):
            a, b = half + i, p + half + (i + c) % rest
            rows[a] &= ~(1 << b)
            rows[b] &= ~(1 << a)
    g = Graph(n, tuple(rows))
    return _certify(
        "split-apex-equality",
        {"n": n, "k": k, "p": p, "q": q},
        g,
        [
            ("order", n, g.n),
            ("regular", True, _measured_regularity(g, k)),
            ("triangles", conjectured_triangle_min(n, k), triangle_count(g)),
        ],
    )


# ---------------------------------------------------------------------------
# multipartite regular construction


def _multipartite_decompose(n, r):
    for x in range(n // (r - 1) - (n // (r - 1)) % 2, 0, -2):
        y = n - (r - 1) * x
        if 0 <= y <= 2 * r - 3 and (r - 2) * x > y:
            return x, y
    raise ConstructionError(f"no valid even-x decomposition for n={n}, r={r}")


def _core_y_factor_layers(t, x, y):
    """Rotation layers removing a y-factor from complete t-partite K_{x,..,x}.

    Layers are cyclic 2-factors (shift c: part a vertex i to part a+1
    vertex i+c) plus, for odd y, one half-shift perfect matching.  Shift
    x/2 is reserved for the matching; for two parts the shifts c and x-c
    coincide, halving the supply.
    """
    two_factors_needed = y // 2
    shifts = []
    limit = (x + 1) // 2 if t == 2 else x
    start = 1 if t == 2 else 0
    for c in range(start, limit):
        if len(shifts) == two_factors_needed:
            break
        if c == x // 2:
            continue
        shifts.append(c)
    if len(shifts) < two_factors_needed:
        raise ConstructionError(
            f"y-factor schedule infeasible: {two_factors_needed} cyclic "
            f"2-factors needed, {len(shifts)} shifts available (t={t}, x={x})"
        )
    return shifts, y % 2 == 1


def multipartite_regular(n, r):
    """(r-2)x-regular (r-1)-partite graph on n = (r-1)x + y vertices.

    A complete (r-2)-partite core K_{x,...,x} loses a y-factor realized
    by rotation layers and is then completely joined to a stable set of
    size x+y.
    """
    if r < 4:
        raise ConstructionError("r must be >= 4")
    x, y = _multipartite_decompose(n, r)
    t = r - 2
    core = t * x
    shifts, need_matching = _core_y_factor_layers(t, x, y)
    rows = [0] * n
    core_mask = (1 << core) - 1
    top_mask = ((1 << (x + y)) - 1) << core
    part_masks = [((1 << x) - 1) << (a * x) for a in range(t)]
    for a in range(t):
        others = (core_mask ^ part_masks[a]) | top_mask
        for v in range(a * x, (a + 1) * x):
            rows[v] = others
    for v in range(core, n):
        rows[v] = core_mask

    def drop(a, b):
        # doubles as the disjointness check: a repeated or same-part pair
        # would hit an already-missing edge
        if not (rows[a] >> b) & 1:
            raise ConstructionError("y-factor touched a non-edge", prop="y-factor")
        rows[a] &= ~(1 << b)
        rows[b] &= ~(1 << a)

    for c in shifts:
        for a in range(t):
            bpart = (a + 1) % t
            for i in range(x):
                drop(a * x + i, bpart * x + (i + c) % x)
    if need_matching:
        hhalf = x // 2
        for a in range(t):
            bpart = (a + 1) % t
            for i in range(hhalf):
                drop(a * x + hhalf + i, bpart * x + i)
    g = Graph(n, tuple(rows))
    parts_stable = all(
        (g.rows[v] & part_masks[a]) == 0
        for a in range(t)
        for v in range(a * x, (a + 1) * x)
    ) and all((g.rows[v] & top_mask) == 0 for v in range(core, n))
    return _certify(
        "multipartite-regular",
        {"n": n, "r": r, "x": x, "y": y, "parts": [x] * t + [x + y]},
        g,
        [
            ("order", n, g.n),
            ("regular", True, _measured_regularity(g, t * x)),
            ("degree", t * x, g.rows[0].bit_count()),
            ("parts-stable", True, parts_stable),
        ],
    )


# ---------------------------------------------------------------------------
# bipartite-with-matching family


def kbe_graph(x, y):
    """Complete bipartite K_{2x,y} plus a perfect matching in the 2x side."""
    if x < 1:
        raise ConstructionError("x must be >= 1")
    if not 0 <= y <= 2 * x:
        raise ConstructionError("y must satisfy 0 <= y <= 2x")
    n = 2 * x + y
    rows = [0] * n
    ymask = ((1 << y) - 1) << (2 * x)
    bigmask = (1 << (2 * x)) - 1
    for v in range(2 * x):
        rows[v] = ymask
    for v in range(2 * x, n):
        rows[v] = bigmask
    for i in range(x):
        a, b = 2 * i, 2 * i + 1
        rows[a] |= 1 << b
        rows[b] |= 1 << a
    g = Graph(n, tuple(rows))
    return _certify(
        "kbe",
        {"x": x, "y": y},
        g,
        [
            ("order", n, g.n),
            ("size", 2 * x * y + x, g.edge_count),
        ],
    )


def odd_half_construction(n):
    """Near-n/2-regular graph of odd order embedding in some K^=_{2a,a}.

    K_{x+1,x} with floor((x+1)/2) extra disjoint edges in the larger
    side; for even x a maximum matching among the degree-(x+1) vertices
    is removed to restore regularity.
    """
    if n % 2 == 0 or n < 5:
        raise ConstructionError("order must be odd and >= 5")
    x = (n - 1) // 2
    big, small = x + 1, x
    rows = [0] * n
    small_mask = ((1 << small) - 1) << big
    big_mask = (1 << big) - 1
    for v in range(big):
        rows[v] = small_mask
    for v in range(big, n):
        rows[v] = big_mask
    pairs = (x + 1) // 2
    for i in range(pairs):
        a, b = 2 * i, 2 * i + 1
        rows[a] |= 1 << b
        rows[b] |= 1 << a
    if x % 2 == 0:
        # degree-(x+1) vertices: the 2*pairs matched big-side vertices and
        # all small-side vertices; remove the rotational matching between
        # them (2*pairs = x = small side size)
        for i in range(2 * pairs):
            a, b = i, big + i
            rows[a] &= ~(1 << b)
            rows[b] &= ~(1 << a)
        degree = x
    else:
        degree = x + 1
    g = Graph(n, tuple(rows))
    # explicit embedding into K^=_{2a,a} with a = x: big side vertex i
    # sits at matched position i, small side vertex big+j at position 2a+j;
    # cross edges always embed, so only the inner structure needs checking
    embeds = True
    for v in range(big):
        inner = g.rows[v] & big_mask
        partner = v ^ 1
        if inner not in (0, 1 << partner) or (inner and partner >= big):
            embeds = False
    for v in range(big, n):
        if g.rows[v] & small_mask:
            embeds = False
    return _certify(
        "odd-half",
        {"n": n, "x": x, "embedding_a": x},
        g,
        [
            ("order", n, g.n),
            ("regular", True, _measured_regularity(g, degree)),
            ("degree", degree, g.rows[0].bit_count()),
            ("kbe-subgraph", True, embeds),
        ],
    )


def star_forest_complement(n, parts):
    """Complement of the disjoint union of stars S_{a_i+1}."""
    if any(a < 1 for a in parts):
        raise ConstructionError("star leaf counts must be >= 1")
    if sum(a + 1 for a in parts) != n:
        raise ConstructionError("star orders must partition n exactly")
    rows = [0] * n
    full = (1 << n) - 1
    start = 0
    for a in parts:
        center = start
        cmask = 1 << center
        for leaf in range(start + 1, start + a + 1):
            rows[leaf] = cmask
            rows[center] |= 1 << leaf
        start += a + 1
    g = Graph(n, tuple((full ^ rows[v]) & ~(1 << v) for v in range(n)))
    max_deg = max((r.bit_count() for r in g.rows), default=0)
    return _certify(
        "star-forest-complement",
        {"n": n, "parts": list(parts)},
        g,
        [
            ("order", n, g.n),
            ("max-degree-bound", True, max_deg <= n - 2),
        ],
    )


BUILDERS = {
    "pentagon-blowup": (pentagon_blowup, ("n",)),
    "circulant-small-odd": (circulant_small_odd, ("n",)),
    "odd-girth-blowup": (odd_girth_blowup, ("n", "ell")),
    "apex": (apex_construction, ("n", "k")),
    "multipartite-regular": (multipartite_regular, ("n", "r")),
    "kbe": (kbe_graph, ("x", "y")),
    "odd-half": (odd_half_construction, ("n",)),
    "triangle-min-extremal": (triangle_min_extremal, ("k",)),
    "split-apex-equality": (split_apex_equality, ("n", "k")),
    "star-forest-complement": (star_forest_complement, ("n", "parts")),
}


def build(name, **params):
    if name not in BUILDERS:
        raise ConstructionError(f"unknown construction {name!r}")
    fn, argnames = BUILDERS[name]
    missing = [a for a in argnames if a not in params]
    if missing:
        raise ConstructionError(f"{name} needs parameters {missing}")
    return fn(**{a: params[a] for a in argnames})

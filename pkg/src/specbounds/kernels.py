"""Hot loops: Jacobi sweeps and bitset subset searches.

Every function here is written in the subset of Python that numba compiles,
so the same source serves as the pure fallback (see ``_accel``).  Vertex sets
are int64 bitmasks; callers guarantee n <= 62.
"""
import numpy as np

from ._accel import kernel


@kernel
def popcount(x):
    c = 0
    while x:
        x &= x - 1
        c += 1
    return c


@kernel
def low_index(x):
    # index of the lowest set bit; x must be nonzero
    i = 0
    low = x & -x
    while low > 1:
        low >>= 1
        i += 1
    return i


# --------------------------------------------------------------------------
# dense symmetric eigensolver


@kernel
def jacobi_eigh(a, tol, max_sweeps):
    """Cyclic Jacobi on a symmetric matrix.

    Returns ``(w, v, sweeps, off)`` with eigenvalues on ``w`` (unsorted),
    eigenvectors in the columns of ``v`` and the final off-diagonal
    Frobenius norm.
    """
    n = a.shape[0]
    a = a.copy()
    v = np.eye(n)
    sweeps = 0
    off = 0.0
    while True:
        s2 = 0.0
        for p in range(n):
            for q in range(p + 1, n):
                s2 += a[p, q] * a[p, q]
        off = np.sqrt(2.0 * s2)
        if off < tol or sweeps >= max_sweeps:
            break
        sweeps += 1
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                t = 1.0 / (abs(theta) + np.sqrt(theta * theta + 1.0))
                if theta < 0.0:
                    t = -t
                c = 1.0 / np.sqrt(t * t + 1.0)
                s = t * c
                col_p = a[:, p].copy()
                col_q = a[:, q].copy()
                a[:, p] = c * col_p - s * col_q
                a[:, q] = s * col_p + c * col_q
                row_p = a[p, :].copy()
                row_q = a[q, :].copy()
                a[p, :] = c * row_p - s * row_q
                a[q, :] = s * row_p + c * row_q
                a[p, q] = 0.0
                a[q, p] = 0.0
                vp = v[:, p].copy()
                vq = v[:, q].copy()
                v[:, p] = c * vp - s * vq
                v[:, q] = s * vp + c * vq
    w = np.empty(n)
    for i in range(n):
        w[i] = a[i, i]
    return w, v, sweeps, off


# --------------------------------------------------------------------------
# induced bipartite subgraphs


@kernel
def component_classes(adj, mask, start):
    """2-colour the component of ``start`` inside ``mask`` by layered BFS.

    Returns ``(side0, side1, ok)``; ``side0`` holds ``start``.  ``ok`` is
    False as soon as an edge inside one colour class is seen.
    """
    side0 = np.int64(1) << start
    side1 = np.int64(0)
    seen = side0
    frontier = side0
    parity = 0
    while frontier:
        nb = np.int64(0)
        f = frontier
        while f:
            low = f & -f
            nb |= adj[low_index(low)]
            f ^= low
        nb &= mask
        new = nb & ~seen
        if parity == 0:
            if nb & side0:
                return side0, side1, False
            side1 |= new
        else:
            if nb & side1:
                return side0, side1, False
            side0 |= new
        seen |= new
        frontier = new
        parity ^= 1
    return side0, side1, True


@kernel
def aligned_bipartition(adj, mask):
    """Split a bipartite ``mask`` into (left, right) minimising |left|*|right|.

    Each component puts its larger colour class on the left; on a tie the
    class holding the component's lowest vertex goes left.  Returns
    ``(left, right, ok)``.
    """
    left = np.int64(0)
    right = np.int64(0)
    rem = mask
    while rem:
        start = low_index(rem)
        s0, s1, ok = component_classes(adj, mask, start)
        if not ok:
            return left, right, False
        if popcount(s0) >= popcount(s1):
            left |= s0
            right |= s1
        else:
            left |= s1
            right |= s0
        rem &= ~(s0 | s1)
    return left, right, True


@kernel
def has_isolated(adj, mask):
    rem = mask
    while rem:
        low = rem & -rem
        if adj[low_index(low)] & mask == 0:
            return True
        rem ^= low
    return False


@kernel
def bipartite_search(adj, n):
    """Exhaustive search over induced bipartite vertex subsets.

    Lexicographic include-first backtracking; a branch dies as soon as the
    added vertex closes an odd cycle.  Subsets with no edges or with an
    isolated vertex are not candidates.  Returns

        (eta_e, eta_p, eta_left, eta_right, iota_e, iota_s, iota_mask, count)

    where eta maximises e/sqrt(p) and iota maximises e/s (half the average
    degree); both compared by integer cross-multiplication, first optimum in
    search order wins.  ``count`` is the number of candidates visited.
    """
    eta_e = 0
    eta_p = 1
    eta_left = np.int64(0)
    eta_right = np.int64(0)
    iota_e = 0
    iota_s = 1
    iota_mask = np.int64(0)
    count = 0

    masks = np.zeros(n + 1, dtype=np.int64)
    edges = np.zeros(n + 1, dtype=np.int64)
    stage = np.zeros(n + 1, dtype=np.int64)
    d = 0
    while d >= 0:
        if d == n:
            S = masks[n]
            e = edges[n]
            d -= 1
            if e == 0 or has_isolated(adj, S):
                continue
            count += 1
            left, right, ok = aligned_bipartition(adj, S)
            p = popcount(left) * popcount(right)
            if e * e * eta_p > eta_e * eta_e * p:
                eta_e = e
                eta_p = p
                eta_left = left
                eta_right = right
            s = popcount(S)
            if e * iota_s > iota_e * s:
                iota_e = e
                iota_s = s
                iota_mask = S
            continue
        st = stage[d]
        if st == 0:
            stage[d] = 1
            S = masks[d]
            grown = S | (np.int64(1) << d)
            s0, s1, ok = component_classes(adj, grown, d)
            if ok:
                masks[d + 1] = grown
                edges[d + 1] = edges[d] + popcount(adj[d] & S)
                stage[d + 1] = 0
                d += 1
        elif st == 1:
            stage[d] = 2
            masks[d + 1] = masks[d]
            edges[d + 1] = edges[d]
            stage[d + 1] = 0
            d += 1
        else:
            d -= 1
    return eta_e, eta_p, eta_left, eta_right, iota_e, iota_s, iota_mask, count


@kernel
def densest_subset(adj, n):
    """Max of e(S)/|S| over nonempty S by Gray-code sweep of all subsets.

    Returns ``(e, s, mask)``; starts from the single vertex 0.
    """
    best_e = 0
    best_s = 1
    best_mask = np.int64(1)
    S = np.int64(0)
    e = 0
    s = 0
    total = np.int64(1) << n
    i = np.int64(1)
    while i < total:
        v = low_index(i)
        bit = np.int64(1) << v
        if S & bit:
            S ^= bit
            e -= popcount(adj[v] & S)
            s -= 1
        else:
            e += popcount(adj[v] & S)
            S |= bit
            s += 1
        if s > 0 and e * best_s > best_e * s:
            best_e = e
            best_s = s
            best_mask = S
        i += 1
    return best_e, best_s, best_mask


# --------------------------------------------------------------------------
# independence and colouring


@kernel
def max_independent_set(adj, n, incumbent):
    """Branch and bound for a maximum independent set.

    Branches on a max-degree vertex of the remaining candidates (take it,
    or drop it).  Prunes with |chosen| + |P| - ceil(m(P)/maxdeg(P)), which
    holds because every edge of G[P] touches a vertex outside any
    independent set of G[P].
    """
    best_mask = incumbent
    best = popcount(incumbent)
    full = (np.int64(1) << n) - 1
    stack_p = np.zeros(2 * n + 2, dtype=np.int64)
    stack_c = np.zeros(2 * n + 2, dtype=np.int64)
    stack_p[0] = full
    stack_c[0] = 0
    top = 1
    while top > 0:
        top -= 1
        P = stack_p[top]
        C = stack_c[top]
        csize = popcount(C)
        psize = popcount(P)
        if csize + psize <= best:
            continue
        maxdeg = -1
        pivot = -1
        deg_sum = 0
        rem = P
        while rem:
            low = rem & -rem
            v = low_index(low)
            dv = popcount(adj[v] & P)
            deg_sum += dv
            if dv > maxdeg:
                maxdeg = dv
                pivot = v
            rem ^= low
        if maxdeg <= 0:
            # P empty or independent: a leaf
            best = csize + psize
            best_mask = C | P
            continue
        m = deg_sum // 2
        if csize + psize - (m + maxdeg - 1) // maxdeg <= best:
            continue
        bit = np.int64(1) << pivot
        stack_p[top] = P & ~bit
        stack_c[top] = C
        top += 1
        stack_p[top] = P & ~bit & ~adj[pivot]
        stack_c[top] = C | bit
        top += 1
    return best_mask


@kernel
def k_coloring(adj, n, k):
    """Proper colouring with at most k colours, or all -1 if none exists.

    Vertices are coloured in index order, colours tried lowest first, and a
    vertex may open at most one new colour (symmetry breaking).
    """
    colors = np.full(n, -1, dtype=np.int64)
    if n == 0:
        return colors
    classes = np.zeros(k, dtype=np.int64)
    maxused = np.full(n + 1, -1, dtype=np.int64)
    pos = 0
    while pos >= 0 and pos < n:
        v = pos
        c0 = 0
        if colors[v] >= 0:
            classes[colors[v]] &= ~(np.int64(1) << v)
            c0 = colors[v] + 1
            colors[v] = -1
        limit = min(k - 1, maxused[pos] + 1)
        found = -1
        for c in range(c0, limit + 1):
            if adj[v] & classes[c] == 0:
                found = c
                break
        if found < 0:
            pos -= 1
            continue
        colors[v] = found
        classes[found] |= np.int64(1) << v
        maxused[pos + 1] = max(maxused[pos], found)
        pos += 1
    if pos < 0:
        colors[:] = -1
    return colors

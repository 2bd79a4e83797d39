"""Compiled bit-row kernels shared by the structure, parameter and scan code.

A graph is passed as ``(rows, n)`` where ``rows`` is an ``int64`` array and
bit ``u`` of ``rows[v]`` marks the edge ``uv``.
"""

from __future__ import annotations

import numpy as np
from numba import njit

MAX_POWER_ITER = 1_000_000

EDGES, DEGREE_POWER, SPECTRAL, SIGNLESS, CLIQUES, STARS = range(6)


@njit(cache=True)
def popcount(x):
    c = 0
    while x:
        x &= x - 1
        c += 1
    return c


@njit(cache=True)
def lowbit(x):
    i = 0
    while not (x >> i) & 1:
        i += 1
    return i


@njit(cache=True)
def reach(rows, start, allowed):
    seen = np.int64(1) << start
    frontier = seen
    while frontier:
        nxt = np.int64(0)
        f = frontier
        while f:
            v = lowbit(f)
            f &= f - 1
            nxt |= rows[v]
        frontier = nxt & allowed & ~seen
        seen |= frontier
    return seen


@njit(cache=True)
def full_mask(n):
    return (np.int64(1) << n) - 1


@njit(cache=True)
def is_connected(rows, n):
    if n == 0:
        return False
    full = full_mask(n)
    return reach(rows, 0, full) == full


@njit(cache=True)
def is_2_connected(rows, n):
    if n < 3 or not is_connected(rows, n):
        return False
    full = full_mask(n)
    for v in range(n):
        rest = full & ~(np.int64(1) << v)
        start = lowbit(rest)
        if reach(rows, start, rest) != rest:
            return False
    return True


@njit(cache=True)
def edge_count(rows, n):
    s = 0
    for v in range(n):
        s += popcount(rows[v])
    return s // 2


# -- paths, cycles, matchings ---------------------------------------------
@njit(cache=True)
def longest_path_order(rows, n):
    """Maximum number of vertices on a simple path (DFS, bitmask visited set)."""
    if n == 0:
        return 0
    full = full_mask(n)
    best = 1
    stack_v = np.zeros(n, np.int64)
    cand = np.zeros(n, np.int64)
    for s in range(n):
        depth = 0
        stack_v[0] = s
        visited = np.int64(1) << s
        cand[0] = rows[s] & ~visited
        while depth >= 0:
            if cand[depth] == 0:
                visited &= ~(np.int64(1) << stack_v[depth])
                depth -= 1
                continue
            u = lowbit(cand[depth])
            cand[depth] &= cand[depth] - 1
            depth += 1
            stack_v[depth] = u
            visited |= np.int64(1) << u
            if depth + 1 > best:
                best = depth + 1
                if best == n:
                    return n
            free = full & ~visited
            # vertices still reachable from u bound any extension
            bound = depth + popcount(reach(rows, u, free | (np.int64(1) << u)))
            if bound <= best:
                cand[depth] = 0
            else:
                cand[depth] = rows[u] & free
    return best


@njit(cache=True)
def circumference(rows, n):
    """Length of a longest cycle, 0 for forests."""
    best = 0
    stack_v = np.zeros(max(n, 1), np.int64)
    cand = np.zeros(max(n, 1), np.int64)
    full = full_mask(n)
    for s in range(n):
        if n - s <= best:
            break
        allowed = full & ~((np.int64(2) << s) - 1)
        sbit = np.int64(1) << s
        depth = 0
        stack_v[0] = s
        visited = sbit
        cand[0] = rows[s] & allowed
        while depth >= 0:
            if cand[depth] == 0:
                visited &= ~(np.int64(1) << stack_v[depth])
                depth -= 1
                continue
            u = lowbit(cand[depth])
            cand[depth] &= cand[depth] - 1
            depth += 1
            stack_v[depth] = u
            visited |= np.int64(1) << u
            if depth >= 2 and rows[u] & sbit and depth + 1 > best:
                best = depth + 1
                if best == n - s:
                    return best
            free = allowed & ~visited
            bound = depth + popcount(reach(rows, u, free | (np.int64(1) << u)))
            if bound <= best:
                cand[depth] = 0
            else:
                cand[depth] = rows[u] & free
    return best


@njit(cache=True)
def _matching(rows, mask, memo, use_memo):
    while mask:
        v = lowbit(mask)
        if rows[v] & mask:
            break
        mask &= ~(np.int64(1) << v)
    if mask == 0:
        return 0
    if use_memo and memo[mask] >= 0:
        return memo[mask]
    v = lowbit(mask)
    nb = rows[v] & mask
    rest = mask & ~(np.int64(1) << v)
    bound = popcount(mask) // 2
    best = 0
    while nb and best < bound:
        u = lowbit(nb)
        nb &= nb - 1
        r = 1 + _matching(rows, rest & ~(np.int64(1) << u), memo, use_memo)
        if r > best:
            best = r
    if best < bound:
        r = _matching(rows, rest, memo, use_memo)
        if r > best:
            best = r
    if use_memo:
        memo[mask] = best
    return best


@njit(cache=True)
def matching_number(rows, n):
    """Exact maximum matching size by branching on the lowest non-isolated vertex."""
    if n <= 20:
        memo = np.full(np.int64(1) << n, -1, np.int8)
        return _matching(rows, full_mask(n), memo, True)
    memo = np.full(1, -1, np.int8)
    return _matching(rows, full_mask(n), memo, False)


# -- spectra ---------------------------------------------------------------
@njit(cache=True)
def _component_radius(rows, n, comp, signless, tol):
    deg = np.zeros(n, np.float64)
    maxdeg = 0
    c = comp
    while c:
        v = lowbit(c)
        c &= c - 1
        d = popcount(rows[v])
        deg[v] = d
        if d > maxdeg:
            maxdeg = d
    shift = maxdeg + 1.0
    x = np.zeros(n, np.float64)
    size = popcount(comp)
    c = comp
    while c:
        v = lowbit(c)
        c &= c - 1
        x[v] = 1.0 / np.sqrt(size)
    y = np.zeros(n, np.float64)
    rho_old = -1.0
    for _ in range(MAX_POWER_ITER):
        c = comp
        while c:
            v = lowbit(c)
            c &= c - 1
            acc = shift * x[v]
            if signless:
                acc += deg[v] * x[v]
            r = rows[v]
            while r:
                u = lowbit(r)
                r &= r - 1
                acc += x[u]
            y[v] = acc
        rho = 0.0
        norm = 0.0
        c = comp
        while c:
            v = lowbit(c)
            c &= c - 1
            rho += x[v] * y[v]
            norm += y[v] * y[v]
        norm = np.sqrt(norm)
        c = comp
        while c:
            v = lowbit(c)
            c &= c - 1
            x[v] = y[v] / norm
        if abs(rho - rho_old) < tol / 10.0:
            return rho - shift
        rho_old = rho
    raise RuntimeError("power iteration did not converge")


@njit(cache=True)
def spectral_radius(rows, n, signless, tol):
    """Largest eigenvalue of A (or A + D), maximised over components."""
    best = 0.0
    left = full_mask(n)
    while left:
        start = lowbit(left)
        comp = reach(rows, start, left)
        left &= ~comp
        if comp & (comp - 1):
            r = _component_radius(rows, n, comp, signless, tol)
            if r > best:
                best = r
    return best


# -- counting parameters ------------------------------------------------------
@njit(cache=True)
def binom(a, b):
    if b < 0 or b > a:
        return 0
    r = 1
    for i in range(b):
        r = r * (a - i) // (i + 1)
    return r


@njit(cache=True)
def _extend(rows, cand, need):
    if need == 0:
        return 1
    total = 0
    while cand:
        v = lowbit(cand)
        cand &= cand - 1
        if need == 1:
            total += 1
        else:
            total += _extend(rows, cand & rows[v], need - 1)
    return total


@njit(cache=True)
def clique_count(rows, n, s):
    """Number of s-vertex cliques; candidates restricted to higher-indexed common neighbours."""
    if s <= 0:
        return 1
    return _extend(rows, full_mask(n), s)


@njit(cache=True)
def star_count(rows, n, r):
    total = 0
    for v in range(n):
        total += binom(popcount(rows[v]), r)
    return total


@njit(cache=True)
def degree_power_int(rows, n, p):
    total = 0
    for v in range(n):
        total += popcount(rows[v]) ** p
    return total


@njit(cache=True)
def degree_power_float(rows, n, p):
    total = 0.0
    for v in range(n):
        d = popcount(rows[v])
        if d > 0:
            total += float(d) ** p
    return total


@njit(cache=True)
def param_value(rows, n, code, arg, tol):
    if code == EDGES:
        return float(edge_count(rows, n))
    if code == DEGREE_POWER:
        ip = int(arg)
        if ip == arg and ip <= 4:
            return float(degree_power_int(rows, n, ip))
        return degree_power_float(rows, n, arg)
    if code == SPECTRAL:
        return spectral_radius(rows, n, False, tol)
    if code == SIGNLESS:
        return spectral_radius(rows, n, True, tol)
    if code == CLIQUES:
        return float(clique_count(rows, n, int(arg)))
    return float(star_count(rows, n, int(arg)))


# -- Kelmans operation ---------------------------------------------------------
@njit(cache=True)
def kelmans_rows(rows, n, x, y):
    """Rows of G[x -> y]: neighbours of x outside N[y] are moved to y."""
    out = rows.copy()
    xbit = np.int64(1) << x
    ybit = np.int64(1) << y
    moved = rows[x] & ~(rows[y] | ybit)
    out[x] &= ~moved
    out[y] |= moved
    m = moved
    while m:
        w = lowbit(m)
        m &= m - 1
        out[w] = (out[w] & ~xbit) | ybit
    return out


# -- enumeration ------------------------------------------------------------------
@njit(cache=True)
def incidence(n):
    inc = np.zeros(n, np.int64)
    b = 0
    for j in range(1, n):
        for i in range(j):
            inc[i] |= np.int64(1) << b
            inc[j] |= np.int64(1) << b
            b += 1
    return inc


@njit(cache=True)
def mask_rows(mask, n, out):
    for v in range(n):
        out[v] = 0
    b = 0
    for j in range(1, n):
        for i in range(j):
            if (mask >> b) & 1:
                out[i] |= np.int64(1) << j
                out[j] |= np.int64(1) << i
            b += 1


@njit(cache=True)
def connectivity_ok(rows, n, klass):
    """klass: 0 any, 1 connected, 2 two-connected."""
    if klass == 0:
        return True
    if klass == 1:
        return is_connected(rows, n)
    return is_2_connected(rows, n)


@njit(cache=True)
def sorted_degree_masks(n, lo, hi, klass):
    """Masks in [lo, hi) whose degree sequence is non-increasing in vertex order."""
    inc = incidence(n)
    out = np.empty(1024, np.int64)
    cnt = 0
    rows = np.zeros(n, np.int64)
    for mask in range(lo, hi):
        prev = n
        ok = True
        for v in range(n):
            d = popcount(mask & inc[v])
            if d > prev:
                ok = False
                break
            prev = d
        if not ok:
            continue
        if klass:
            mask_rows(mask, n, rows)
            if not connectivity_ok(rows, n, klass):
                continue
        if cnt == out.shape[0]:
            grown = np.empty(2 * cnt, np.int64)
            grown[:cnt] = out
            out = grown
        out[cnt] = mask
        cnt += 1
    return out[:cnt].copy()


@njit(cache=True)
def labeled_masks(n, lo, hi, klass):
    """All masks in [lo, hi) passing the connectivity class."""
    out = np.empty(1024, np.int64)
    cnt = 0
    rows = np.zeros(n, np.int64)
    for mask in range(lo, hi):
        if klass:
            mask_rows(mask, n, rows)
            if not connectivity_ok(rows, n, klass):
                continue
        if cnt == out.shape[0]:
            grown = np.empty(2 * cnt, np.int64)
            grown[:cnt] = out
            out = grown
        out[cnt] = mask
        cnt += 1
    return out[:cnt].copy()


@njit(cache=True)
def structural_table(masks, n):
    """Per mask: connected, 2-connected, longest path order, circumference, matching number."""
    m = masks.shape[0]
    out = np.zeros((m, 5), np.int64)
    rows = np.zeros(n, np.int64)
    for i in range(m):
        mask_rows(masks[i], n, rows)
        out[i, 0] = is_connected(rows, n)
        out[i, 1] = is_2_connected(rows, n)
        out[i, 2] = longest_path_order(rows, n)
        out[i, 3] = circumference(rows, n)
        out[i, 4] = matching_number(rows, n)
    return out


@njit(cache=True)
def param_column(masks, n, code, arg, tol):
    m = masks.shape[0]
    out = np.zeros(m, np.float64)
    rows = np.zeros(n, np.int64)
    for i in range(m):
        mask_rows(masks[i], n, rows)
        out[i] = param_value(rows, n, code, arg, tol)
    return out


# -- feasibility sweeps -------------------------------------------------------------
@njit(cache=True)
def kelmans_sweep(masks, n, code, arg, tol, slack):
    """Count ordered pairs (u, v) with P(G[u->v]) < P(G) - slack.

    Returns (violations, checked, witness mask, witness u, witness v).
    """
    rows = np.zeros(n, np.int64)
    bad = 0
    checked = 0
    wm = -1
    wu = -1
    wv = -1
    for i in range(masks.shape[0]):
        mask_rows(masks[i], n, rows)
        base = param_value(rows, n, code, arg, tol)
        for u in range(n):
            for v in range(n):
                if u == v:
                    continue
                after = param_value(kelmans_rows(rows, n, u, v), n, code, arg, tol)
                checked += 1
                if after < base - slack:
                    bad += 1
                    if wm < 0:
                        wm = masks[i]
                        wu = u
                        wv = v
    return bad, checked, wm, wu, wv


@njit(cache=True)
def edge_addition_sweep(masks, n, code, arg, tol, margin, strict):
    """Count non-edges whose addition fails to increase P (strictly by > margin when strict)."""
    rows = np.zeros(n, np.int64)
    bad = 0
    checked = 0
    wm = -1
    wu = -1
    wv = -1
    for i in range(masks.shape[0]):
        mask_rows(masks[i], n, rows)
        base = param_value(rows, n, code, arg, tol)
        for u in range(n):
            for v in range(u + 1, n):
                if (rows[u] >> v) & 1:
                    continue
                rows[u] |= np.int64(1) << v
                rows[v] |= np.int64(1) << u
                after = param_value(rows, n, code, arg, tol)
                rows[u] &= ~(np.int64(1) << v)
                rows[v] &= ~(np.int64(1) << u)
                checked += 1
                if strict:
                    fail = not (after > base + margin)
                else:
                    fail = after < base - margin
                if fail:
                    bad += 1
                    if wm < 0:
                        wm = masks[i]
                        wu = u
                        wv = v
    return bad, checked, wm, wu, wv


# -- lemma sweeps -------------------------------------------------------------------
@njit(cache=True)
def ko_structure_sweep(masks, n):
    """Adjacent ordered pairs where G[u->v] gains circumference or longest path.

    Returns (cycle violations, path violations, checked, witness mask, u, v).
    """
    rows = np.zeros(n, np.int64)
    bad_c = 0
    bad_p = 0
    checked = 0
    wm = -1
    wu = -1
    wv = -1
    for i in range(masks.shape[0]):
        mask_rows(masks[i], n, rows)
        c0 = circumference(rows, n)
        p0 = longest_path_order(rows, n)
        for u in range(n):
            r = rows[u]
            while r:
                v = lowbit(r)
                r &= r - 1
                after = kelmans_rows(rows, n, u, v)
                checked += 1
                fail = False
                if circumference(after, n) > c0:
                    bad_c += 1
                    fail = True
                if longest_path_order(after, n) > p0:
                    bad_p += 1
                    fail = True
                if fail and wm < 0:
                    wm = masks[i]
                    wu = u
                    wv = v
    return bad_c, bad_p, checked, wm, wu, wv


@njit(cache=True)
def sun_das_sweep(masks, n, tol, margin):
    """Vertices with lambda(G)^2 > lambda(G-v)^2 + 2d(v) - 1 + margin."""
    rows = np.zeros(n, np.int64)
    bad = 0
    checked = 0
    wm = -1
    wv = -1
    worst = -np.inf
    for i in range(masks.shape[0]):
        mask_rows(masks[i], n, rows)
        lam = spectral_radius(rows, n, False, tol)
        for v in range(n):
            d = popcount(rows[v])
            if d == 0:
                continue
            sub = rows.copy()
            vbit = np.int64(1) << v
            sub[v] = 0
            for u in range(n):
                sub[u] &= ~vbit
            mu = spectral_radius(sub, n, False, tol)
            gap = lam * lam - (mu * mu + 2 * d - 1)
            checked += 1
            if gap > worst:
                worst = gap
            if gap > margin:
                bad += 1
                if wm < 0:
                    wm = masks[i]
                    wv = v
    return bad, checked, wm, wv, worst


@njit(cache=True)
def duality_sweep(masks, n):
    """Graphs where 'contains P_k' and 'G v K_1 has a cycle of length >= k+1' disagree for some k >= 2."""
    rows = np.zeros(n, np.int64)
    big = np.zeros(n + 1, np.int64)
    apex = np.int64(1) << n
    bad = 0
    wm = -1
    for i in range(masks.shape[0]):
        mask_rows(masks[i], n, rows)
        for v in range(n):
            big[v] = rows[v] | apex
        big[n] = full_mask(n)
        lp = longest_path_order(rows, n)
        cj = circumference(big, n + 1)
        for k in range(2, n + 1):
            if (lp >= k) != (cj >= k + 1):
                bad += 1
                if wm < 0:
                    wm = masks[i]
                break
    return bad, masks.shape[0], wm


@njit(cache=True)
def bondy_chvatal_sweep(masks, n):
    """Non-adjacent u, v with d(u)+d(v) >= 2k+1 and nu(G+uv) = k+1 but nu(G) = k."""
    rows = np.zeros(n, np.int64)
    bad = 0
    checked = 0
    wm = -1
    wu = -1
    wv = -1
    for i in range(masks.shape[0]):
        mask_rows(masks[i], n, rows)
        nu = matching_number(rows, n)
        for u in range(n):
            for v in range(u + 1, n):
                if (rows[u] >> v) & 1:
                    continue
                rows[u] |= np.int64(1) << v
                rows[v] |= np.int64(1) << u
                nu_plus = matching_number(rows, n)
                rows[u] &= ~(np.int64(1) << v)
                rows[v] &= ~(np.int64(1) << u)
                k = nu_plus - 1
                if popcount(rows[u]) + popcount(rows[v]) < 2 * k + 1:
                    continue
                checked += 1
                if nu != k + 1:
                    bad += 1
                    if wm < 0:
                        wm = masks[i]
                        wu = u
                        wv = v
    return bad, checked, wm, wu, wv

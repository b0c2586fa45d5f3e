"""Compiled Gray-code walk over a contiguous block of Gray ranks."""

import numpy as np
from numba import njit

CHECK_EVERY = 1 << 16


@njit(cache=True)
def _seed(c2, n, g, s, f):
    for i in range(n):
        s[i] = -1 if (g >> (n - 1 - i)) & 1 else 1
    for i in range(n):
        acc = 0
        for j in range(n):
            acc += c2[j - i + n] * s[j]
        f[i] = acc


@njit(nogil=True, cache=True)
def gray_block(c, start, stop, check_every):
    """Visit Gray codes of ranks ``start .. stop-1`` and collect fixed points.

    Returns ``(packed fixed points, checkpoints run, checkpoint failures)``.
    States are packed with position 0 in the most significant bit.
    """
    n = c.shape[0]
    out = np.empty(64, np.int64)
    if start >= stop:
        return out[:0], 0, 0
    # c2[j - i + n] == c[(j - i) mod n] for 0 <= i, j < n
    c2 = np.empty(2 * n, np.int64)
    for k in range(n):
        c2[k] = c[k]
        c2[k + n] = c[k]
    s = np.empty(n, np.int64)
    f = np.empty(n, np.int64)
    fresh = np.empty(n, np.int64)
    scratch = np.empty(n, np.int64)
    g = start ^ (start >> 1)
    _seed(c2, n, g, s, f)
    bad = 0
    for i in range(n):
        if (f[i] >= 0) != (s[i] > 0):
            bad += 1

    count = 0
    checks = 0
    fails = 0
    k = start
    while True:
        if bad == 0:
            if count == out.shape[0]:
                grown = np.empty(2 * count, np.int64)
                grown[:count] = out
                out = grown
            out[count] = g
            count += 1
        if (k - start) % check_every == 0:
            checks += 1
            _seed(c2, n, g, scratch, fresh)
            recount = 0
            for i in range(n):
                if fresh[i] != f[i] or scratch[i] != s[i]:
                    fails += 1
                    break
                if (fresh[i] >= 0) != (scratch[i] > 0):
                    recount += 1
            if recount != bad:
                fails += 1
        k += 1
        if k >= stop:
            break
        # Gray rank k differs from k-1 in bit ctz(k).
        b = 0
        t = k
        while (t & 1) == 0:
            t >>= 1
            b += 1
        g ^= 1 << b
        p = n - 1 - b
        delta = -2 * s[p]
        s[p] = -s[p]
        bad = 0
        for i in range(n):
            f[i] += delta * c2[p - i + n]
            if (f[i] >= 0) != (s[i] > 0):
                bad += 1
    return out[:count], checks, fails

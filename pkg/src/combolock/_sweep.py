"""Numba kernel for the superlevel block sweep (optional fast path).

Importing this module requires numba; combolock.variation falls back to the
pure-Python sweep when the import fails. First use compiles the kernel and
caches the result on disk, so steady-state calls cost milliseconds even for
million-dial profiles.
"""

import numba
import numpy as np


@numba.njit(cache=True)
def jit_blocks(vals):  # pragma: no cover - exercised via variation tests
    n = vals.shape[0]
    out_a = np.empty(n + 1, dtype=np.int64)
    out_b = np.empty(n + 1, dtype=np.int64)
    out_c = np.empty(n + 1, dtype=np.int64)
    stack_s = np.empty(n + 1, dtype=np.int64)
    stack_h = np.empty(n + 1, dtype=np.int64)
    top = -1
    m = 0
    prev = np.int64(0)
    for pos in range(1, n + 2):
        h = vals[pos - 1] if pos <= n else np.int64(0)
        if h > prev:
            top += 1
            stack_s[top] = pos
            stack_h[top] = h
        elif h < prev:
            start = pos
            while top >= 0 and stack_h[top] > h:
                s = stack_s[top]
                peak = stack_h[top]
                top -= 1
                below = stack_h[top] if top >= 0 else np.int64(0)
                lo = below if below > h else h
                out_a[m] = s
                out_b[m] = pos - 1
                out_c[m] = peak - lo
                m += 1
                start = s
            if h > 0 and (top < 0 or stack_h[top] < h):
                top += 1
                stack_s[top] = start
                stack_h[top] = h
        prev = h
    return out_a[:m], out_b[:m], out_c[:m]

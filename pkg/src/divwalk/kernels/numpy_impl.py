"""Vectorized chunk kernels on int64 ndarrays.

The check kernels cannot run a sequential walk the way python_impl and
numba_impl do, so they verify the same thing pairwise: one exact
recurrence step from the state at k must land on the state at k+1.  With
the chunk seeded one k back (step_in), induction over pairs reproduces
the sequential walk, chunk boundaries included.

numpy's // and % on int64 are floored like Python's, which the Y-side
step (negative numerators) depends on.  The dispatcher proves int64
sufficiency before routing here; witness products may still wrap, which
is harmless for the identity checks (equal over Z implies equal mod 2^64).
"""

from __future__ import annotations

import numpy as np

MODE_CLOSED = 0
MODE_RECURRENCE = 1
MODE_BOTH = 2


def x_zero_chunk(x0, r0, delta, k_lo, k_hi):
    k = np.arange(k_lo, k_hi + 1, dtype=np.int64)
    rp = r0 + k * delta + k * k
    return k[rp % (x0 - k) == 0]


def x_first_zero_desc_chunk(x0, r0, delta, k_hi, k_lo):
    k = np.arange(k_lo, k_hi + 1, dtype=np.int64)
    rp = r0 + k * delta + k * k
    hits = np.nonzero(rp % (x0 - k) == 0)[0]
    return int(k[hits[-1]]) if hits.size else -1


def x_check_chunk(n, x0, y0, r0, delta, k_lo, k_hi, mode, step_in):
    start = k_lo - 1 if step_in else k_lo
    k = np.arange(start, k_hi + 1, dtype=np.int64)
    div = x0 - k
    yk = y0 + k
    rp = r0 + k * delta + k * k
    o_q = n // div
    o_r = n % div
    c_r = rp % div
    c_q = yk + rp // div
    hit = c_r == 0
    bad = np.zeros(k.size, np.bool_)
    if mode != MODE_RECURRENCE:
        bad |= (c_r != o_r) | (c_q != o_q)
        bad |= ((n - (div - 1) * (yk + 1)) - rp) != (2 * k + 1 + delta)
        bad |= hit != (o_r == 0)
        a = rp // div
        bad |= hit & (a * x0 != rp + a * k)
    if mode != MODE_CLOSED:
        t = c_r[:-1] + c_q[:-1]
        bad[1:] |= (c_q[:-1] + t // div[1:]) != c_q[1:]
        bad[1:] |= (t % div[1:]) != c_r[1:]
        bad[1:] |= (rp[1:] - rp[:-1]) != (2 * k[:-1] + 1 + delta)
        if mode == MODE_RECURRENCE:
            bad |= (c_r != o_r) | (c_q != o_q)
            bad |= hit != (o_r == 0)
            a = rp // div
            bad |= hit & (a * x0 != rp + a * k)
    lo = 1 if step_in else 0
    badb = bad[lo:]
    if badb.any():
        return int(k[lo:][np.argmax(badb)]), 0
    return -1, int(np.count_nonzero(hit[lo:]))


def y_check_chunk(n, x0, y0, r0, delta, k_lo, k_hi, mode, step_in):
    start = k_lo - 1 if step_in else k_lo
    k = np.arange(start, k_hi + 1, dtype=np.int64)
    div = y0 + k
    rp = r0 + k * delta + k * k
    o_q = n // div
    o_r = n % div
    c_r = rp % div
    c_q = (x0 - k) + rp // div
    hit = c_r == 0
    bad = np.zeros(k.size, np.bool_)
    if mode != MODE_RECURRENCE:
        bad |= (c_r != o_r) | (c_q != o_q)
        bad |= ((n - (x0 - k - 1) * (div + 1)) - rp) != (2 * k + 1 + delta)
        bad |= hit != (o_r == 0)
        a = rp // div
        bad |= hit & (a * y0 != rp - a * k)
    if mode != MODE_CLOSED:
        t = c_r[:-1] - c_q[:-1]
        bad[1:] |= (c_q[:-1] + t // div[1:]) != c_q[1:]
        bad[1:] |= (t % div[1:]) != c_r[1:]
        bad[1:] |= (rp[1:] - rp[:-1]) != (2 * k[:-1] + 1 + delta)
        if mode == MODE_RECURRENCE:
            bad |= (c_r != o_r) | (c_q != o_q)
            bad |= hit != (o_r == 0)
            a = rp // div
            bad |= hit & (a * y0 != rp - a * k)
    lo = 1 if step_in else 0
    badb = bad[lo:]
    if badb.any():
        return int(k[lo:][np.argmax(badb)]), 0
    return -1, int(np.count_nonzero(hit[lo:]))


def _stream(divisors, r0, delta, k_lo, k_hi):
    k = np.arange(k_lo, k_hi + 1, dtype=np.int64)
    inc = 2 * k + 1 + delta
    rp = np.empty(k.size, np.int64)
    rp[0] = r0 + k_lo * delta + k_lo * k_lo
    if k.size > 1:
        rp[1:] = rp[0] + np.cumsum(inc[:-1])
    return int((rp % divisors(k)).sum())


def x_stream_chunk(x0, r0, delta, k_lo, k_hi):
    return _stream(lambda k: x0 - k, r0, delta, k_lo, k_hi)


def y_stream_chunk(y0, r0, delta, k_lo, k_hi):
    return _stream(lambda k: y0 + k, r0, delta, k_lo, k_hi)


def x_naive_chunk(n, x0, k_lo, k_hi):
    k = np.arange(k_lo, k_hi + 1, dtype=np.int64)
    return int((n % (x0 - k)).sum())


def y_naive_chunk(n, y0, k_lo, k_hi):
    k = np.arange(k_lo, k_hi + 1, dtype=np.int64)
    return int((n % (y0 + k)).sum())

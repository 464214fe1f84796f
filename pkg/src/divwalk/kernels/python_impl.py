"""Reference chunk kernels on plain Python ints.

Exact at any magnitude, so this backend doubles as the overflow fallback
for the fixed-width backends.  Function contracts are documented once in
the package dispatcher; the loops here are the meaning of those contracts
and the other backends must match them bit for bit.

Mode constants are duplicated from the dispatcher to keep this module
import-free; the dispatcher asserts they agree.
"""

from __future__ import annotations

MODE_CLOSED = 0
MODE_RECURRENCE = 1
MODE_BOTH = 2


def x_zero_chunk(x0, r0, delta, k_lo, k_hi):
    out = []
    rp = r0 + k_lo * delta + k_lo * k_lo
    inc = 2 * k_lo + 1 + delta
    for k in range(k_lo, k_hi + 1):
        if rp % (x0 - k) == 0:
            out.append(k)
        rp += inc
        inc += 2
    return out


def x_first_zero_desc_chunk(x0, r0, delta, k_hi, k_lo):
    rp = r0 + k_hi * delta + k_hi * k_hi
    dec = 2 * (k_hi - 1) + 1 + delta
    for k in range(k_hi, k_lo - 1, -1):
        if rp % (x0 - k) == 0:
            return k
        rp -= dec
        dec -= 2
    return -1


def x_check_chunk(n, x0, y0, r0, delta, k_lo, k_hi, mode, step_in):
    fired = 0
    seed_k = k_lo - 1 if step_in else k_lo
    sdiv = x0 - seed_k
    srp = r0 + seed_k * delta + seed_k * seed_k
    w_q = (y0 + seed_k) + srp // sdiv
    w_r = srp % sdiv
    w_rp = srp
    for k in range(k_lo, k_hi + 1):
        div = x0 - k
        yk = y0 + k
        rp = r0 + k * delta + k * k
        o_q = n // div
        o_r = n % div
        c_r = rp % div
        c_q = yk + rp // div
        if k > seed_k:
            t = w_r + w_q
            w_q = w_q + t // div
            w_r = t % div
            w_rp = w_rp + 2 * (k - 1) + 1 + delta
        if mode != MODE_RECURRENCE:
            if c_r != o_r or c_q != o_q:
                return k, fired
            if (n - (div - 1) * (yk + 1)) - rp != 2 * k + 1 + delta:
                return k, fired
            if (c_r == 0) != (o_r == 0):
                return k, fired
            if c_r == 0:
                fired += 1
                a = rp // div
                if a * x0 != rp + a * k:
                    return k, fired
        if mode != MODE_CLOSED:
            if w_r != o_r or w_q != o_q:
                return k, fired
            if mode == MODE_BOTH:
                if w_r != c_r or w_q != c_q or w_rp != rp:
                    return k, fired
            else:
                if w_rp % div != w_r:
                    return k, fired
                if (w_r == 0) != (o_r == 0):
                    return k, fired
                if w_r == 0:
                    fired += 1
                    a = w_rp // div
                    if a * x0 != w_rp + a * k:
                        return k, fired
    return -1, fired


def y_check_chunk(n, x0, y0, r0, delta, k_lo, k_hi, mode, step_in):
    fired = 0
    seed_k = k_lo - 1 if step_in else k_lo
    sdiv = y0 + seed_k
    srp = r0 + seed_k * delta + seed_k * seed_k
    w_q = (x0 - seed_k) + srp // sdiv
    w_r = srp % sdiv
    w_rp = srp
    for k in range(k_lo, k_hi + 1):
        div = y0 + k
        rp = r0 + k * delta + k * k
        o_q = n // div
        o_r = n % div
        c_r = rp % div
        c_q = (x0 - k) + rp // div
        if k > seed_k:
            t = w_r - w_q
            # floored div/mod on possibly negative t
            w_q = w_q + t // div
            w_r = t % div
            w_rp = w_rp + 2 * (k - 1) + 1 + delta
        if mode != MODE_RECURRENCE:
            if c_r != o_r or c_q != o_q:
                return k, fired
            if (n - (x0 - k - 1) * (div + 1)) - rp != 2 * k + 1 + delta:
                return k, fired
            if (c_r == 0) != (o_r == 0):
                return k, fired
            if c_r == 0:
                fired += 1
                a = rp // div
                if a * y0 != rp - a * k:
                    return k, fired
        if mode != MODE_CLOSED:
            if w_r != o_r or w_q != o_q:
                return k, fired
            if mode == MODE_BOTH:
                if w_r != c_r or w_q != c_q or w_rp != rp:
                    return k, fired
            else:
                if w_rp % div != w_r:
                    return k, fired
                if (w_r == 0) != (o_r == 0):
                    return k, fired
                if w_r == 0:
                    fired += 1
                    a = w_rp // div
                    if a * y0 != w_rp - a * k:
                        return k, fired
    return -1, fired


def x_stream_chunk(x0, r0, delta, k_lo, k_hi):
    total = 0
    rp = r0 + k_lo * delta + k_lo * k_lo
    inc = 2 * k_lo + 1 + delta
    for k in range(k_lo, k_hi + 1):
        total += rp % (x0 - k)
        rp += inc
        inc += 2
    return total


def y_stream_chunk(y0, r0, delta, k_lo, k_hi):
    total = 0
    rp = r0 + k_lo * delta + k_lo * k_lo
    inc = 2 * k_lo + 1 + delta
    for k in range(k_lo, k_hi + 1):
        total += rp % (y0 + k)
        rp += inc
        inc += 2
    return total


def x_naive_chunk(n, x0, k_lo, k_hi):
    total = 0
    for k in range(k_lo, k_hi + 1):
        total += n % (x0 - k)
    return total


def y_naive_chunk(n, y0, k_lo, k_hi):
    total = 0
    for k in range(k_lo, k_hi + 1):
        total += n % (y0 + k)
    return total

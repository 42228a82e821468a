"""Compiled inner loops: the two parsing DPs and canonical-code decoding."""

import math

import numpy as np
from numba import njit


@njit(cache=True)
def _backtrack(back_len, n):
    out = np.empty(n, dtype=np.int64)
    k = 0
    i = n
    while i > 0:
        j = back_len[i]
        out[k] = j
        k += 1
        i -= j
    return out[:k][::-1].copy()


@njit(cache=True)
def dp_h0(counts, n, m):
    """min sum of log2(m) + log2(n) - log2(cnt(y)) over m-bounded parsings.

    Scanning lengths from m down with a strict comparison keeps the longest
    phrase among equal-cost transitions.
    """
    dp = np.empty(n + 1, dtype=np.float64)
    back = np.zeros(n + 1, dtype=np.int64)
    dp[0] = 0.0
    base = math.log2(m) + math.log2(n)
    for i in range(1, n + 1):
        best = np.inf
        bj = 0
        for j in range(min(m, i), 0, -1):
            c = dp[i - j] + base - math.log2(counts[j, i - j])
            if c < best:
                best = c
                bj = j
        dp[i] = best
        back[i] = bj
    return dp[n], _backtrack(back, n)


@njit(cache=True)
def dp_h1(counts, n, m):
    """dp[i, u]: cheapest parsing of S[:i] whose last phrase has length u.

    The first phrase is charged the zeroth-order cost; a phrase y at s
    preceded by y' of length v costs log2(m) + log2(cnt(y')) - log2(cnt(y'y)).
    """
    dp = np.full((n + 1, m + 1), np.inf)
    back = np.zeros((n + 1, m + 1), dtype=np.int64)
    logm = math.log2(m)
    base = logm + math.log2(n)
    for i in range(1, n + 1):
        for u in range(1, min(m, i) + 1):
            if i == u:
                dp[i, u] = base - math.log2(counts[u, 0])
                continue
            s = i - u
            best = np.inf
            bv = 0
            for v in range(min(m, s), 0, -1):
                p = s - v
                c = dp[s, v] + logm + math.log2(counts[v, p]) - math.log2(counts[u + v, p])
                if c < best:
                    best = c
                    bv = v
            dp[i, u] = best
            back[i, u] = bv
    best = np.inf
    bu = 0
    for u in range(min(m, n), 0, -1):
        if dp[n, u] < best:
            best = dp[n, u]
            bu = u
    out = np.empty(n, dtype=np.int64)
    k = 0
    i = n
    u = bu
    while i > 0:
        out[k] = u
        k += 1
        v = back[i, u]
        i -= u
        u = v
    return best, out[:k][::-1].copy()


@njit(cache=True)
def decode_codes(buf, nbits, pos, target, plen, prev, chained, tab_start, tab_min, tab_nlen,
                 first, cnt, off, sym_start, order):
    """Decode canonical codes from bit ``pos`` of ``buf`` until the decoded
    phrases cover ``target`` symbols (``plen[sym]`` symbols per phrase).

    Table ``c`` describes one codebook: lengths ``tab_min[c] ..
    tab_min[c] + tab_nlen[c] - 1`` live at ``first/cnt/off[tab_start[c]:]``
    and its symbols at ``order[sym_start[c]:]``.  With ``chained`` the table
    for each code is the previously decoded symbol (starting from ``prev``);
    otherwise table 0 is used throughout.  Returns ``(symbols, end_pos)``;
    ``end_pos`` is -1 when the stream is truncated or not a valid code.
    """
    out = np.empty(max(target, 1), dtype=np.int64)
    k = 0
    covered = 0
    c = 0
    while covered < target:
        if chained:
            c = prev
        base = tab_start[c]
        length = tab_min[c]
        if tab_nlen[c] == 0 or pos + length > nbits:
            return out[:k], -1
        code = 0
        for _ in range(length):
            code = (code << 1) | ((buf[pos >> 3] >> (7 - (pos & 7))) & 1)
            pos += 1
        j = 0
        while True:
            d = code - first[base + j]
            if d >= 0 and d < cnt[base + j]:
                sym = order[sym_start[c] + off[base + j] + d]
                break
            j += 1
            if j >= tab_nlen[c] or pos >= nbits:
                return out[:k], -1
            code = (code << 1) | ((buf[pos >> 3] >> (7 - (pos & 7))) & 1)
            pos += 1
        out[k] = sym
        k += 1
        covered += plen[sym]
        prev = sym
    return out[:k], pos


@njit(cache=True)
def _delta_at(buf, nbits, pos):
    """One Elias Delta code at ``pos``: (value, next_pos); next_pos is -1 when
    truncated and -2 when the value does not fit in 63 bits."""
    lol = 0
    while True:
        if pos >= nbits:
            return 0, -1
        if (buf[pos >> 3] >> (7 - (pos & 7))) & 1:
            break
        lol += 1
        pos += 1
        if lol > 6:
            return 0, -2
    if pos + lol + 1 > nbits:
        return 0, -1
    width = 0
    for _ in range(lol + 1):
        width = (width << 1) | ((buf[pos >> 3] >> (7 - (pos & 7))) & 1)
        pos += 1
    if width > 63:
        return 0, -2
    if pos + width - 1 > nbits:
        return 0, -1
    value = 1
    for _ in range(width - 1):
        value = (value << 1) | ((buf[pos >> 3] >> (7 - (pos & 7))) & 1)
        pos += 1
    return value, pos


@njit(cache=True)
def decode_deltas(buf, nbits, pos, count, signed):
    """Read ``count`` Elias Delta values (``count < 0``: until the stream ends).

    With ``signed`` every value after the first is preceded by a sign bit and
    the result is the running letter list: bit 0 adds the value, bit 1 adds
    ``1 - value``.  Returns ``(values, end_pos)`` with end_pos < 0 on error.
    """
    cap = count if count >= 0 else nbits - pos
    out = np.empty(max(cap, 0), dtype=np.int64)
    k = 0
    while k < cap:
        if count < 0 and pos == nbits:
            break
        neg = False
        if signed and k > 0:
            if pos >= nbits:
                return out[:k], -1
            neg = ((buf[pos >> 3] >> (7 - (pos & 7))) & 1) == 1
            pos += 1
        value, pos = _delta_at(buf, nbits, pos)
        if pos < 0:
            return out[:k], pos
        if signed and k > 0:
            out[k] = out[k - 1] + 1 - value if neg else out[k - 1] + value
        else:
            out[k] = value
        k += 1
    return out[:k], pos


@njit(cache=True)
def decode_sized_groups(buf, nbits, pos, groups):
    """``groups`` times: a size s coded as s+1, then s values.  Returns
    ``(sizes, values, end_pos)``; end_pos < 0 on error."""
    sizes = np.zeros(groups, dtype=np.int64)
    values = np.empty(max(nbits - pos, 0), dtype=np.int64)
    k = 0
    for g in range(groups):
        s, pos = _delta_at(buf, nbits, pos)
        if pos < 0:
            return sizes, values[:k], pos
        s -= 1
        if k + s > values.size:
            return sizes, values[:k], -1
        sizes[g] = s
        for _ in range(s):
            v, pos = _delta_at(buf, nbits, pos)
            if pos < 0:
                return sizes, values[:k], pos
            values[k] = v
            k += 1
    return sizes, values[:k], pos


@njit(cache=True)
def canonical_tables(sizes, lens):
    """Per-length canonical decode tables for books laid out back to back.

    Book c owns ``lens[sym_start[c]:sym_start[c] + sizes[c]]`` (sorted code
    lengths in letter order).  Returns
    ``(tab_start, tab_min, tab_nlen, first, cnt, off, sym_start)``.
    """
    k = sizes.size
    tab_start = np.zeros(k, dtype=np.int64)
    tab_min = np.zeros(k, dtype=np.int64)
    tab_nlen = np.zeros(k, dtype=np.int64)
    sym_start = np.zeros(k, dtype=np.int64)
    total = 0
    s = 0
    for c in range(k):
        sym_start[c] = s
        tab_start[c] = total
        if sizes[c] > 0:
            tab_min[c] = lens[s]
            tab_nlen[c] = lens[s + sizes[c] - 1] - lens[s] + 1
            total += tab_nlen[c]
        s += sizes[c]
    first = np.zeros(total, dtype=np.int64)
    cnt = np.zeros(total, dtype=np.int64)
    off = np.zeros(total, dtype=np.int64)
    for c in range(k):
        s = sym_start[c]
        for i in range(sizes[c]):
            cnt[tab_start[c] + lens[s + i] - tab_min[c]] += 1
        code = 0
        seen = 0
        for j in range(tab_nlen[c]):
            t = tab_start[c] + j
            first[t] = code
            off[t] = seen
            seen += cnt[t]
            code = (code + cnt[t]) << 1
    return tab_start, tab_min, tab_nlen, first, cnt, off, sym_start


@njit(cache=True)
def huffman_grouped(sizes, freqs):
    """Huffman code lengths for several histograms laid out back to back.

    Uses the two-queue construction on each group's sorted weights; a group
    with a single entry gets length 0.
    """
    out = np.zeros(freqs.size, dtype=np.int64)
    start = 0
    for g in range(sizes.size):
        k = sizes[g]
        if k > 1:
            idx = np.argsort(freqs[start:start + k], kind="mergesort")
            total = 2 * k - 1
            weight = np.empty(total, dtype=np.int64)
            parent = np.zeros(total, dtype=np.int64)
            for i in range(k):
                weight[i] = freqs[start + idx[i]]
            leaf = 0
            inner = k
            for new in range(k, total):
                picked = np.empty(2, dtype=np.int64)
                for q in range(2):
                    if leaf < k and (inner >= new or weight[leaf] <= weight[inner]):
                        picked[q] = leaf
                        leaf += 1
                    else:
                        picked[q] = inner
                        inner += 1
                weight[new] = weight[picked[0]] + weight[picked[1]]
                parent[picked[0]] = new
                parent[picked[1]] = new
            depth = np.zeros(total, dtype=np.int64)
            for v in range(total - 2, -1, -1):
                depth[v] = depth[parent[v]] + 1
            for i in range(k):
                out[start + idx[i]] = depth[i]
        start += k
    return out


@njit(cache=True)
def canonical_codes(sizes, lengths, letters):
    """Canonical codes for entries sorted by (length, letter) within each group.

    Returns ``(codes, ok)``; ok is False when a group is not sorted that way
    or its lengths violate the Kraft inequality.
    """
    codes = np.zeros(lengths.size, dtype=np.int64)
    start = 0
    for g in range(sizes.size):
        code = 0
        for i in range(start, start + sizes[g]):
            if lengths[i] < 0 or lengths[i] > 62:
                return codes, False
            if i > start:
                if lengths[i] < lengths[i - 1]:
                    return codes, False
                if lengths[i] == lengths[i - 1] and letters[i] <= letters[i - 1]:
                    return codes, False
                code = (code + 1) << (lengths[i] - lengths[i - 1])
            if code >> lengths[i] != 0:
                return codes, False
            codes[i] = code
        start += sizes[g]
    return codes, True

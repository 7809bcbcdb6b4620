"""Independent reference computations used to derive expected test values.

Nothing here imports from v2vcodec.
"""
import itertools
import math
from functools import lru_cache


def entropy(probs):
    total = math.fsum(probs)
    return -math.fsum((p / total) * math.log2(p / total) for p in probs)


def min_prefix_cost(weights):
    """Minimum sum w_i * len_i over all binary prefix codes, by enumeration.

    Enumerates nondecreasing length vectors for weights sorted heaviest
    first and keeps those satisfying Kraft's inequality; any prefix code can
    be rearranged into this form without increasing cost.
    """
    n = len(weights)
    ws = sorted(weights, reverse=True)
    best = None
    for lengths in itertools.combinations_with_replacement(range(1, n), n):
        if sum(2.0 ** -l for l in lengths) > 1 + 1e-12:
            continue
        cost = sum(w * l for w, l in zip(ws, lengths))
        if best is None or cost < best:
            best = cost
    return best


def min_prefix_cost_classes(classes):
    """Minimum cost prefix code when symbols fall into weight classes.

    ``classes`` is a list of (weight, count). Searches every tree level by
    level: at each depth, choose how many leaves of each class to place in
    the open slots; unused slots split into two at the next depth. Every
    symbol not yet placed pays its weight once per level it descends.
    Returns (cost, {length: leaves at that length}) for one optimum.
    """
    weights = tuple(w for w, _ in classes)

    @lru_cache(maxsize=None)
    def solve(remaining, slots):
        left = sum(remaining)
        if left == 0:
            return 0, ()
        slots = min(slots, left)
        toll = sum(w * r for w, r in zip(weights, remaining))
        best = (math.inf, ())
        for take in itertools.product(*(range(min(r, slots) + 1) for r in remaining)):
            used = sum(take)
            if used > slots or (used < left and used == slots):
                continue
            if used == 0 and slots == left:
                # descending without placing anything revisits this state
                continue
            if used == left:
                sub = (0, ())
            else:
                sub = solve(tuple(r - t for r, t in zip(remaining, take)), 2 * (slots - used))
            if toll + sub[0] < best[0]:
                best = (toll + sub[0], (used,) + sub[1])
        return best

    cost, per_level = solve(tuple(c for _, c in classes), 2)
    return cost, {d: n for d, n in enumerate(per_level, 1) if n}


def reference_huffman_lengths(weights):
    """Textbook Huffman by repeated sort-and-merge on explicit trees."""
    nodes = [(w, (i,)) for i, w in enumerate(weights)]
    depth = [0] * len(weights)
    while len(nodes) > 1:
        nodes.sort(key=lambda t: t[0])
        (wa, a), (wb, b) = nodes[0], nodes[1]
        for s in a + b:
            depth[s] += 1
        nodes = nodes[2:] + [(wa + wb, a + b)]
    return depth


def reference_canonical(lengths):
    """Canonical codewords written out longhand, ordered by (length, index)."""
    order = sorted(range(len(lengths)), key=lambda i: (lengths[i], i))
    codes = {}
    value = -1
    prev_len = 0
    for i in order:
        value += 1
        value <<= lengths[i] - prev_len
        prev_len = lengths[i]
        codes[i] = bin(value)[2:].zfill(lengths[i])
    return codes


def lzw_reference(text, alphabet):
    """Plain LZW over an initial single-character dictionary; returns (codes, final size)."""
    table = {c: i for i, c in enumerate(alphabet)}
    w = ""
    out = []
    for c in text:
        if w + c in table:
            w += c
        else:
            out.append(table[w])
            table[w + c] = len(table)
            w = c
    out.append(table[w])
    return out, len(table)

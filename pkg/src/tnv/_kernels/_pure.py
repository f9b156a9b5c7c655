"""Pure-Python integer kernels; same API as the compiled ``_ckernels``."""

from math import comb


def ball_profile(entries, n):
    """Ball counts b(1..n) for an index tuple, returned as a list of length n+1.

    Slot 0 is unused.  Ball k covers boxes k+1 .. entries[k].
    """
    counts = [0] * (n + 1)
    for k, top in enumerate(entries):
        for box in range(k + 1, top + 1):
            counts[box] += 1
    return counts


def syt_diagonal_stats(parts, anchor):
    """Enumerate every standard tableau of shape ``parts`` one by one.

    Returns ``(count, sums)`` where ``sums`` maps each diagonal index
    ``k = anchor - row + col`` (1-based row/col) to the total, over all
    tableaux, of the entries lying on that diagonal.
    """
    parts = list(parts)
    rows = len(parts)
    size = sum(parts)
    if size == 0:
        return 1, {}
    filled = [0] * rows
    totals = {}
    running = {}
    count = 0

    def place(label):
        nonlocal count
        if label > size:
            count += 1
            for k, v in running.items():
                totals[k] = totals.get(k, 0) + v
            return
        for r in range(rows):
            c = filled[r]
            if c < parts[r] and (r == 0 or filled[r - 1] > c):
                filled[r] = c + 1
                k = anchor - (r + 1) + (c + 1)
                running[k] = running.get(k, 0) + label
                place(label + 1)
                running[k] -= label
                filled[r] = c

    place(1)
    return count, {k: v for k, v in totals.items() if v}


def _rank(filled, rows, cols):
    # Maya tuple of the shape (rows, cols rectangle), ranked in the
    # combinatorial number system; distinct shapes get distinct ranks.
    rank = 0
    for k in range(rows):
        entry = filled[rows - 1 - k] + k
        rank += comb(entry, k + 1)
    return rank


def chain_shape_visits(rows, cols):
    """Walk every maximal chain from the empty diagram to the rows x cols box.

    Returns ``(chains, visits)``; ``visits[r]`` is the number of chains through
    the shape whose Maya tuple has combinatorial rank ``r``.
    """
    total = comb(rows + cols, rows)
    visits = [0] * total
    filled = [0] * rows
    area = rows * cols
    path = [_rank(filled, rows, cols)]
    chains = 0

    def grow(depth):
        nonlocal chains
        if depth == area:
            chains += 1
            for r in path:
                visits[r] += 1
            return
        for r in range(rows):
            c = filled[r]
            if c < cols and (r == 0 or filled[r - 1] > c):
                filled[r] = c + 1
                path.append(_rank(filled, rows, cols))
                grow(depth + 1)
                path.pop()
                filled[r] = c

    grow(0)
    return chains, visits

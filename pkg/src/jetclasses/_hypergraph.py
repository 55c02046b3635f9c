"""Minimum vertex covers of a hypergraph given by bitmask edges.

Minimal primes of a monomial ideal are the minimal vertex covers of the
hypergraph of generator supports; the covers of minimum size are the primes
of maximal dimension.  Edges and covers are ``int`` bitmasks over variable
positions.
"""

__all__ = ["minimal_edges", "min_cover_size", "min_covers", "mask_of", "bits"]


def mask_of(exponent):
    m = 0
    for i, a in enumerate(exponent):
        if a:
            m |= 1 << i
    return m


def bits(mask):
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def minimal_edges(edges):
    """Drop duplicate edges and edges containing another edge."""
    edges = sorted(set(edges), key=lambda e: (bin(e).count("1"), e))
    kept = []
    for e in edges:
        if not any(f & e == f for f in kept):
            kept.append(e)
    return kept


def _packing_bound(edges, chosen):
    # pairwise disjoint unhit edges each need their own vertex
    used = 0
    count = 0
    for e in edges:
        if not e & chosen and not e & used:
            used |= e
            count += 1
    return count


def _search(edges, chosen, budget, found, collect):
    unhit = [e for e in edges if not e & chosen]
    if not unhit:
        found.add(chosen)
        return not collect
    if budget == 0 or _packing_bound(unhit, chosen) > budget:
        return False
    edge = min(unhit, key=lambda e: bin(e).count("1"))
    for v in bits(edge):
        if _search(unhit, chosen | (1 << v), budget - 1, found, collect):
            return True
    return False


def min_cover_size(edges):
    """Size of a minimum vertex cover; ``None`` if some edge is empty."""
    edges = minimal_edges(edges)
    if any(e == 0 for e in edges):
        return None
    k = _packing_bound(edges, 0)
    while True:
        found = set()
        if _search(edges, 0, k, found, collect=False):
            return k
        k += 1


def min_covers(edges):
    """All vertex covers of minimum size, as a sorted list of bitmasks."""
    edges = minimal_edges(edges)
    k = min_cover_size(edges)
    if k is None:
        return []
    found = set()
    _search(edges, 0, k, found, collect=True)
    return sorted(c for c in found if bin(c).count("1") == k)

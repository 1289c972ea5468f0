"""Integer non-negative rank via reduced divisors.

A divisor Lam with integer coefficients has non-negative rank when some
integer-valued phi >= 0 satisfies laplacian(phi) + Lam >= 0; equivalently
when Lam is chip-firing equivalent to an effective divisor.  We decide
this with Dhar's burning algorithm: compute the divisor reduced with
respect to a base vertex and read off effectivity there.  The answer is
independent of the base vertex.

Two stages, both in exact integer arithmetic:
  1. level firing: walking the BFS levels from the base outward-in, fire
     the sub-level set enough times (closed form, no iteration) to make
     every non-base vertex non-negative;
  2. Dhar burning from the base; each surviving unburnt set is fired the
     maximal number of times it tolerates at once.
"""

from __future__ import annotations

from typing import List, Optional

from .errors import NonIntegerDivisor
from .graphs import Divisor, Graph


def q_reduced(g: Graph, lam: Divisor, base: Optional[str] = None) -> List[int]:
    """The divisor reduced with respect to `base`, as an int list in vertex
    order.  Requires an integer divisor."""
    if not lam.is_integral():
        raise NonIntegerDivisor("reduced divisors need integer coefficients")
    n = len(g.vertices)
    q = g.index(base) if base is not None else 0
    adj = g.adjacency
    d = [int(v) for v in lam.values]

    # stage 1: make d >= 0 away from q
    dist = g.distances_from(g.vertices[q])
    maxd = max(dist)
    for k in range(maxd, 0, -1):
        level = [v for v in range(n) if dist[v] == k]
        below = [v for v in range(n) if dist[v] == k - 1]
        firings = 0
        for v in level:
            if d[v] < 0:
                gain = sum(adj[v][w] for w in below)  # >= 1 by BFS
                firings = max(firings, (-d[v] + gain - 1) // gain)
        if firings:
            inside = [v for v in range(n) if dist[v] < k]
            inside_set = set(inside)
            for v in inside:
                out = sum(adj[v][w] for w in range(n) if w not in inside_set)
                d[v] -= firings * out
            for v in range(n):
                if v not in inside_set:
                    d[v] += firings * sum(adj[v][w] for w in inside)

    # stage 2: Dhar burning from q
    while True:
        burnt = [False] * n
        burnt[q] = True
        changed = True
        while changed:
            changed = False
            for v in range(n):
                if not burnt[v]:
                    heat = sum(adj[v][w] for w in range(n) if burnt[w])
                    if heat > d[v]:
                        burnt[v] = True
                        changed = True
        unburnt = [v for v in range(n) if not burnt[v]]
        if not unburnt:
            return d
        outdeg = {v: sum(adj[v][w] for w in range(n) if burnt[w]) for v in unburnt}
        times = min((d[v] // outdeg[v] for v in unburnt if outdeg[v] > 0), default=1)
        times = max(times, 1)
        for v in unburnt:
            d[v] -= times * outdeg[v]
        for w in range(n):
            if burnt[w]:
                d[w] += times * sum(adj[w][v] for v in unburnt)


def has_nonnegative_rank(g: Graph, lam: Divisor, base: Optional[str] = None) -> bool:
    """True iff some integer phi >= 0 has laplacian(phi) + lam >= 0."""
    if not lam.is_integral():
        raise NonIntegerDivisor("non-negative rank is defined for integer divisors")
    if lam.degree() < 0:
        return False
    reduced = q_reduced(g, lam, base)
    q = g.index(base) if base is not None else 0
    return reduced[q] >= 0

"""Exact clique counting and the flag-complex Euler characteristic.

The flag complex of a graph has one (k-1)-simplex per k-vertex clique.
Its Euler characteristic is normalized as 1 minus the alternating sum of
the simplex counts, so a single vertex scores 0 and an empty graph on
m+1 vertices scores -m.  All arithmetic uses Python integers, so counts
can never overflow silently.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import LimitExceeded, UndirectedGraph

EULER_ORACLE_MAX = 20


@dataclass(frozen=True)
class CliqueCountVector:
    """counts[k-1] holds the number of k-vertex cliques; length is n."""

    counts: tuple[int, ...]

    def count(self, k: int) -> int:
        return self.counts[k - 1] if 1 <= k <= len(self.counts) else 0

    def euler(self) -> int:
        chi = 1
        for k, c in enumerate(self.counts, start=1):
            chi += c if k % 2 == 0 else -c
        return chi


def clique_counts(g: UndirectedGraph) -> CliqueCountVector:
    """Count the k-cliques for every k by ordered extension.

    A clique is only ever grown through vertices larger than its current
    maximum that neighbor every member, so each clique is reached exactly
    once and no clique list is stored.
    """
    adj = g.adjacency
    counts = [0] * g.n

    def grow(allowed: int, size: int) -> None:
        rest = allowed
        while rest:
            low = rest & -rest
            rest ^= low
            v = low.bit_length() - 1
            counts[size] += 1
            nxt = allowed & adj[v] & -(low << 1)
            if nxt:
                grow(nxt, size + 1)

    if g.n:
        grow((1 << g.n) - 1, 0)
    return CliqueCountVector(tuple(counts))


def euler_characteristic(g: UndirectedGraph) -> int:
    """1 + sum over k >= 1 of (-1)^k (number of k-cliques)."""
    return clique_counts(g).euler()


def euler_oracle(g: UndirectedGraph) -> int:
    """Independent brute force over all 2^n vertex subsets.

    Accumulates 1 plus (-1)^|S| over every nonempty clique subset S,
    testing cliqueness with a lowest-vertex recurrence; shares no code
    with clique_counts.
    """
    if g.n > EULER_ORACLE_MAX:
        raise LimitExceeded(
            f"euler_oracle is capped at n <= {EULER_ORACLE_MAX}, got {g.n}"
        )
    adj = g.adjacency
    total = 1 << g.n
    is_clique = bytearray(total)
    is_clique[0] = 1
    chi = 1
    for mask in range(1, total):
        low = mask & -mask
        rest = mask ^ low
        v = low.bit_length() - 1
        if is_clique[rest] and adj[v] & rest == rest:
            is_clique[mask] = 1
            chi += 1 if mask.bit_count() % 2 == 0 else -1
    return chi

"""Quivers without loops or 2-cycles, exchange matrices, and mutation.

Vertices are labeled 1..n to match worked examples verbatim.  Arrows are a
multiset stored as a sorted tuple of (source, target) pairs; quiver equality
is labeled equality.
"""

import json
from dataclasses import dataclass

from quiverlab.errors import (
    BadDirection,
    BadLabel,
    LoopPresent,
    NotSkewSymmetric,
    TwoCyclePresent,
)


@dataclass(frozen=True)
class Quiver:
    n: int
    arrows: tuple  # sorted tuple of (source, target), multiplicity by repetition

    def arrow_counts(self):
        """Multiset of arrows as {(s, t): multiplicity}."""
        counts = {}
        for a in self.arrows:
            counts[a] = counts.get(a, 0) + 1
        return counts

    def to_json(self):
        return json.dumps({"n": self.n, "arrows": [list(a) for a in self.arrows]})

    @classmethod
    def from_json(cls, text):
        data = json.loads(text)
        return from_arrows(data["n"], [tuple(a) for a in data["arrows"]])

    def __str__(self):
        return f"Quiver(n={self.n}, arrows={list(self.arrows)})"


def from_arrows(n, arrows):
    """Validated quiver from an arrow list; rejects loops, 2-cycles, bad labels."""
    if n < 1:
        raise BadLabel(f"need at least one vertex, got n={n}")
    pairs = []
    for s, t in arrows:
        if not (1 <= s <= n and 1 <= t <= n):
            raise BadLabel(f"arrow ({s},{t}) outside 1..{n}")
        if s == t:
            raise LoopPresent(f"loop at vertex {s}")
        pairs.append((s, t))
    present = set(pairs)
    for s, t in present:
        if (t, s) in present:
            raise TwoCyclePresent(f"2-cycle between {s} and {t}")
    return Quiver(n, tuple(sorted(pairs)))


def linear_quiver(n):
    """The linearly oriented A_n path 1 <- 2 <- ... <- n."""
    return from_arrows(n, [(i + 1, i) for i in range(1, n)])


def fan_quiver(n):
    """All arrows into vertex 1 (2 -> 1 <- 3 for n = 3)."""
    return from_arrows(n, [(i, 1) for i in range(2, n + 1)])


def to_exchange_matrix(q):
    """b_ij = #(i -> j) - #(j -> i)."""
    b = [[0] * q.n for _ in range(q.n)]
    for s, t in q.arrows:
        b[s - 1][t - 1] += 1
        b[t - 1][s - 1] -= 1
    return b


def check_skew_symmetric(b):
    n = len(b)
    for i in range(n):
        if len(b[i]) != n:
            raise NotSkewSymmetric("matrix is not square")
        for j in range(n):
            if b[i][j] != -b[j][i]:
                raise NotSkewSymmetric(f"b[{i + 1}][{j + 1}] != -b[{j + 1}][{i + 1}]")


def from_exchange_matrix(b):
    """Inverse of to_exchange_matrix: b_ij > 0 gives b_ij arrows i -> j."""
    check_skew_symmetric(b)
    n = len(b)
    arrows = []
    for i in range(n):
        for j in range(n):
            if b[i][j] > 0:
                arrows.extend([(i + 1, j + 1)] * b[i][j])
    return from_arrows(n, arrows)


def mutate_quiver(q, k):
    """Three-step mutation at vertex k: compose paths through k, reverse all
    arrows at k, cancel 2-cycles.  Involutive."""
    if not 1 <= k <= q.n:
        raise BadLabel(f"vertex {k} outside 1..{q.n}")
    counts = q.arrow_counts()
    new_counts = {}

    def add(s, t, m):
        if m:
            new_counts[(s, t)] = new_counts.get((s, t), 0) + m

    into_k = {s: m for (s, t), m in counts.items() if t == k}
    out_of_k = {t: m for (s, t), m in counts.items() if s == k}
    # Step 1: compose i -> k -> j.
    for i, mi in into_k.items():
        for j, mj in out_of_k.items():
            add(i, j, mi * mj)
    # Step 2: reverse at k; other arrows carry over.
    for (s, t), m in counts.items():
        if s == k or t == k:
            add(t, s, m)
        else:
            add(s, t, m)
    # Step 3: cancel 2-cycles.
    arrows = []
    seen = set()
    for (s, t), m in new_counts.items():
        if (t, s) in seen or (s, t) in seen:
            continue
        seen.add((s, t))
        opposite = new_counts.get((t, s), 0)
        if m > opposite:
            arrows.extend([(s, t)] * (m - opposite))
        elif opposite > m:
            arrows.extend([(t, s)] * (opposite - m))
    return from_arrows(q.n, arrows)


def mutate_matrix(b, k):
    """Matrix mutation in direction k, applied to every row (framed rows
    included); columns must number n with 1 <= k <= n."""
    rows = len(b)
    n = len(b[0]) if rows else 0
    if not 1 <= k <= n:
        raise BadDirection(f"direction {k} outside 1..{n}")
    ki = k - 1
    out = []
    for i in range(rows):
        row = []
        bik = b[i][ki]
        for j in range(n):
            if i == ki or j == ki:
                row.append(-b[i][j])
            else:
                bkj = b[ki][j]
                row.append(
                    b[i][j]
                    + max(bik, 0) * max(bkj, 0)
                    - min(bik, 0) * min(bkj, 0)
                )
        out.append(row)
    return out


def is_acyclic(q):
    """True when the arrow digraph has no oriented cycle."""
    counts = q.arrow_counts()
    indegree = {v: 0 for v in range(1, q.n + 1)}
    for (s, t), m in counts.items():
        indegree[t] += m
    stack = [v for v, d in indegree.items() if d == 0]
    seen = 0
    while stack:
        v = stack.pop()
        seen += 1
        for (s, t), m in counts.items():
            if s == v:
                indegree[t] -= m
                if indegree[t] == 0:
                    stack.append(t)
    return seen == q.n

"""Framed exchange matrices, c-vectors, green/red classification, exhaustive
maximal-green-sequence search, and the g/c duality check.

A second, independent engine mutates the framed quiver (frozen copies of the
vertices) through the three-step rule; the two engines agreeing state by
state is a property test.
"""

from dataclasses import dataclass

from quiverlab import _linalg
from quiverlab.errors import BadDirection, NZViolation, SignIncoherent
from quiverlab.quiver import check_skew_symmetric, mutate_matrix
from quiverlab.repmod import interval_modules
from quiverlab.silting import silting_pairs


@dataclass(frozen=True)
class FramedMatrix:
    """B stacked over the C-matrix (rows n+1..2n of the extended matrix)."""

    top: tuple  # n x n rows
    cmat: tuple  # n x n rows

    @property
    def n(self):
        return len(self.top)

    def stacked(self):
        return [list(r) for r in self.top] + [list(r) for r in self.cmat]

    def column_signs(self):
        """+1 / -1 per c-column; SignIncoherent on a mixed or zero column."""
        signs = []
        for j in range(self.n):
            column = [self.cmat[i][j] for i in range(self.n)]
            has_pos = any(v > 0 for v in column)
            has_neg = any(v < 0 for v in column)
            if has_pos and has_neg:
                raise SignIncoherent(f"c-column {j + 1} carries both signs")
            if not has_pos and not has_neg:
                raise SignIncoherent(f"c-column {j + 1} is zero")
            signs.append(1 if has_pos else -1)
        return signs


def framed(b):
    """Extend B by the identity C-matrix."""
    check_skew_symmetric(b)
    n = len(b)
    identity = tuple(
        tuple(1 if i == j else 0 for j in range(n)) for i in range(n)
    )
    return FramedMatrix(tuple(tuple(row) for row in b), identity)


def c_vectors(f):
    """Columns of the C-matrix (sign coherence is re-validated)."""
    f.column_signs()
    return [tuple(f.cmat[i][j] for i in range(f.n)) for j in range(f.n)]


def green_vertices(f):
    return {j + 1 for j, s in enumerate(f.column_signs()) if s > 0}


def red_vertices(f):
    return {j + 1 for j, s in enumerate(f.column_signs()) if s < 0}


def mutate_framed(f, k):
    """Mutation in direction k of the full 2n x n matrix."""
    if not 1 <= k <= f.n:
        raise BadDirection(f"direction {k} outside 1..{f.n}")
    stacked = mutate_matrix(f.stacked(), k)
    n = f.n
    out = FramedMatrix(
        tuple(tuple(row) for row in stacked[:n]),
        tuple(tuple(row) for row in stacked[n:]),
    )
    out.column_signs()  # theorems guarantee coherence; fail loudly otherwise
    return out


@dataclass
class MgsResult:
    sequences: list  # lists of directions, lexicographically sorted
    complete: bool


def find_mgs(b, max_depth=64, max_states=100000):
    """Depth-first enumeration over green mutations; a branch succeeds when
    every c-vector is negative.  Partial results carry complete=False."""
    if max_depth < 1 or max_states < 1:
        raise ValueError("budget must be positive")
    start = framed(b)
    sequences = []
    complete = True
    visited = 0

    def walk(state, prefix, on_path):
        nonlocal complete, visited
        visited += 1
        if visited > max_states:
            complete = False
            return
        greens = sorted(green_vertices(state))
        if not greens:
            sequences.append(list(prefix))
            return
        if len(prefix) >= max_depth:
            complete = False
            return
        for k in greens:
            nxt = mutate_framed(state, k)
            key = (nxt.top, nxt.cmat)
            if key in on_path:
                continue  # cannot happen along green paths; defensive
            walk(nxt, prefix + [k], on_path | {key})

    walk(start, [], frozenset({(start.top, start.cmat)}))
    return MgsResult(sorted(sequences), complete)


def replay(b, directions):
    """Framed-matrix trace of a direction sequence, initial state included."""
    state = framed(b)
    trace = [state]
    for k in directions:
        state = mutate_framed(state, k)
        trace.append(state)
    return trace


def is_green_sequence(b, directions):
    """Every step green and the final state all red."""
    state = framed(b)
    for k in directions:
        if k not in green_vertices(state):
            return False
        state = mutate_framed(state, k)
    return not green_vertices(state)


# -- framed-quiver oracle engine ----------------------------------------------


@dataclass(frozen=True)
class FramedQuiver:
    """2n vertices: 1..n mutable, n+1..2n frozen (vertex n+i is i')."""

    n: int
    arrows: tuple  # sorted (source, target) pairs, frozen-frozen excluded

    @classmethod
    def initial(cls, q):
        arrows = list(q.arrows) + [(q.n + i, i) for i in range(1, q.n + 1)]
        return cls(q.n, tuple(sorted(arrows)))

    def mutate(self, k):
        """Three-step mutation at a mutable vertex; arrows between two frozen
        vertices are discarded."""
        if not 1 <= k <= self.n:
            raise BadDirection(f"cannot mutate frozen or unknown vertex {k}")
        counts = {}
        for a in self.arrows:
            counts[a] = counts.get(a, 0) + 1
        new_counts = {}

        def add(s, t, m):
            if m and not (s > self.n and t > self.n):
                new_counts[(s, t)] = new_counts.get((s, t), 0) + m

        into_k = {s: m for (s, t), m in counts.items() if t == k}
        out_of_k = {t: m for (s, t), m in counts.items() if s == k}
        for i, mi in into_k.items():
            for j, mj in out_of_k.items():
                add(i, j, mi * mj)
        for (s, t), m in counts.items():
            if s == k or t == k:
                add(t, s, m)
            else:
                add(s, t, m)
        arrows = []
        seen = set()
        for (s, t), m in new_counts.items():
            if (s, t) in seen or (t, s) in seen:
                continue
            seen.add((s, t))
            opposite = new_counts.get((t, s), 0)
            if m > opposite:
                arrows.extend([(s, t)] * (m - opposite))
            elif opposite > m:
                arrows.extend([(t, s)] * (opposite - m))
        return FramedQuiver(self.n, tuple(sorted(arrows)))

    def to_framed_matrix(self):
        n = self.n
        rows = [[0] * n for _ in range(2 * n)]
        for s, t in self.arrows:
            if t <= n:
                rows[s - 1][t - 1] += 1
            if s <= n:
                rows[t - 1][s - 1] -= 1
        return FramedMatrix(
            tuple(tuple(r) for r in rows[:n]),
            tuple(tuple(r) for r in rows[n:]),
        )


def find_mgs_quiver_engine(q, max_depth=64, max_states=100000):
    """Same enumeration through the framed-quiver engine (oracle)."""
    sequences = []
    complete = True
    visited = 0

    def greens(fq):
        return sorted(green_vertices(fq.to_framed_matrix()))

    def walk(state, prefix):
        nonlocal complete, visited
        visited += 1
        if visited > max_states:
            complete = False
            return
        g = greens(state)
        if not g:
            sequences.append(list(prefix))
            return
        if len(prefix) >= max_depth:
            complete = False
            return
        for k in g:
            walk(state.mutate(k), prefix + [k])

    walk(FramedQuiver.initial(q), [])
    return MgsResult(sorted(sequences), complete)


# -- Nakanishi-Zelevinsky duality ----------------------------------------------


@dataclass
class NzReport:
    g_matrix: list  # columns are g-vectors, -(C^T)^{-1}
    pair: object  # the matching SiltingPair
    cvector_dims: list  # (c-vector, sign, matching module literal)


def check_nz(q, f):
    """G = -(C^T)^{-1}: its columns must be the g-vectors of exactly one
    silting pair, every c-vector must be +/- an indecomposable dimension
    vector, and the pairing g(T_i) . c_j = -delta_ij must hold."""
    n = q.n
    ct = _linalg.transpose([list(r) for r in f.cmat])
    try:
        g = [[-v for v in row] for row in _linalg.inverse_int(ct)]
    except (ValueError, ZeroDivisionError) as exc:
        raise NZViolation(f"C-matrix is not unimodular: {exc}") from exc

    g_columns = {tuple(g[i][j] for i in range(n)) for j in range(n)}
    match = None
    for pair in silting_pairs(q):
        vectors = {m.g_vec() for m in pair.members(q)}
        if vectors == g_columns:
            if match is not None:
                raise NZViolation("g-columns match more than one silting pair")
            match = pair
    if match is None:
        raise NZViolation(f"g-columns {sorted(g_columns)} match no silting pair")

    dims = {m.dim_vector(): m for m in interval_modules(q)}
    cvec_info = []
    for c in c_vectors(f):
        pos = tuple(abs(v) for v in c)
        if pos not in dims:
            raise NZViolation(f"c-vector {c} is not +/- an indecomposable dim")
        sign = 1 if any(v > 0 for v in c) else -1
        cvec_info.append((c, sign, dims[pos].literal()))

    # Pairing: columns of G against columns of C.
    for i in range(n):
        for j in range(n):
            dot = sum(g[r][i] * f.cmat[r][j] for r in range(n))
            expected = -1 if i == j else 0
            if dot != expected:
                raise NZViolation(f"pairing failed at ({i + 1},{j + 1})")
    return NzReport(g, match, cvec_info)

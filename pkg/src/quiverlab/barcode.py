"""Stable barcodes for linearly oriented A_n.

A dimension vector decomposes into the unique rigid interval multiset by
stacking v_i spots over position i and joining adjacent spots at each height,
so a bar at level h spans a maximal run of {i : v_i >= h}.
"""

from dataclasses import dataclass


def interval_ext_nonzero(c, d, a, b):
    """Ext(M_cd, M_ab) != 0 iff a < c <= b < d or b + 1 = c."""
    for lo, hi in ((c, d), (a, b)):
        if not (1 <= lo <= hi):
            raise ValueError(f"invalid interval [{lo},{hi}]")
    return (a < c <= b < d) or (b + 1 == c)


@dataclass(frozen=True)
class Barcode:
    intervals: tuple  # ((a, b, multiplicity), ...) sorted by (a, b)
    v: tuple

    def literal(self):
        if not self.intervals:
            return "0"
        parts = []
        for a, b, mult in self.intervals:
            body = f"M[{a},{b}]"
            parts.append(body if mult == 1 else f"{mult}*{body}")
        return " + ".join(parts)

    def bars_expanded(self):
        out = []
        for a, b, mult in self.intervals:
            out.extend([(a, b)] * mult)
        return out


def stable_barcode(v):
    """Decompose v into maximal horizontal runs per height level."""
    v = tuple(v)
    if any(x < 0 for x in v):
        raise ValueError("dimension vector entries must be >= 0")
    counts = {}
    top = max(v) if v else 0
    for h in range(1, top + 1):
        i = 0
        n = len(v)
        while i < n:
            if v[i] >= h:
                j = i
                while j + 1 < n and v[j + 1] >= h:
                    j += 1
                key = (i + 1, j + 1)
                counts[key] = counts.get(key, 0) + 1
                i = j + 1
            else:
                i += 1
    intervals = tuple(
        (a, b, counts[(a, b)]) for a, b in sorted(counts)
    )
    return Barcode(intervals, v)


def is_rigid_multiset(bars):
    """Pairwise ext-orthogonality of a list of (a, b) intervals, both orders
    and self-extensions (intervals are never self-extending)."""
    for c, d in bars:
        for a, b in bars:
            if interval_ext_nonzero(c, d, a, b):
                return False
    return True


def all_interval_multisets(v):
    """Every interval multiset with total dimension vector v (exhaustive
    search oracle for the uniqueness theorem)."""
    n = len(v)
    intervals = [(a, b) for a in range(1, n + 1) for b in range(a, n + 1)]

    def rec(remaining, start):
        if not any(remaining):
            yield []
            return
        first = next(i for i, x in enumerate(remaining) if x)
        for idx in range(start, len(intervals)):
            a, b = intervals[idx]
            if a - 1 != first:
                # Bars must cover the leftmost uncovered position first.
                if a - 1 > first:
                    break
                continue
            if b > n or any(remaining[i] < 1 for i in range(a - 1, b)):
                continue
            nxt = list(remaining)
            for i in range(a - 1, b):
                nxt[i] -= 1
            for rest in rec(nxt, idx):
                yield [(a, b)] + rest

    yield from rec(list(v), 0)


def barcode_svg(v):
    """Horizontal black bars over an axis, one row per spot level."""
    bars = stable_barcode(v).bars_expanded()
    width, step, row = 480, 60, 28
    lines = [
        '<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'viewBox="0 0 {width} {row * (len(bars) + 2)}">'
    ]
    y = row
    for a, b in sorted(bars):
        x1, x2 = a * step, b * step
        lines.append(
            f'<line x1="{x1}" y1="{y}" x2="{x2}" y2="{y}" '
            'stroke="black" stroke-width="3"/>'
        )
        lines.append(
            f'<circle cx="{x1}" cy="{y}" r="4" fill="black"/>'
            f'<circle cx="{x2}" cy="{y}" r="4" fill="black"/>'
        )
        y += row
    axis_y = y
    lines.append(
        f'<line x1="{step // 2}" y1="{axis_y}" x2="{len(v) * step + step // 2}" '
        f'y2="{axis_y}" stroke="black" stroke-width="1"/>'
    )
    for i in range(1, len(v) + 1):
        lines.append(
            f'<text x="{i * step}" y="{axis_y + 18}" font-size="12" '
            f'text-anchor="middle">{i}</text>'
        )
    lines.append("</svg>")
    return "\n".join(lines)

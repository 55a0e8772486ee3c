"""Partitions, tableaux and semistandard enumeration.

A tableau is stored as a tuple of rows, each row a tuple of positive
integers; the row lengths must be weakly decreasing (a partition).  Two
semistandard conventions are supported, differing in where strictness
lives:

* english: rows weakly increasing, columns strictly increasing
* french:  rows strictly increasing, columns weakly increasing

On multilinear fillings (every value used exactly once) the two
conventions coincide.

A partition is a *double shape* when every part occurs an even number
of times, e.g. ``(2, 2, 1, 1, 1, 1)``.  A *d-tableau* is an
english-semistandard tableau of double shape; these are the images of
c-arrays under the bijection in :mod:`carrays.bijection`.

The *content* of a tableau is the vector counting how often each value
1, 2, ... occurs; trailing zeros are insignificant.
"""

from __future__ import annotations

Shape = tuple[int, ...]
Tableau = tuple[tuple[int, ...], ...]
Content = tuple[int, ...]

CONVENTIONS = ("english", "french")


def shape(parts) -> Shape:
    """Validate and return a partition as a tuple (empty allowed)."""
    sh = tuple(int(p) for p in parts)
    if any(p < 1 for p in sh):
        raise ValueError(f"shape parts must be positive: {sh}")
    if any(sh[i] < sh[i + 1] for i in range(len(sh) - 1)):
        raise ValueError(f"shape parts must be weakly decreasing: {sh}")
    return sh


def tableau(rows) -> Tableau:
    """Validate and return a tableau as a tuple of row tuples."""
    t = tuple(tuple(int(x) for x in row) for row in rows)
    shape_of(t)
    for row in t:
        if any(x < 1 for x in row):
            raise ValueError(f"tableau entries must be positive: {t}")
    return t


def shape_of(t: Tableau) -> Shape:
    return shape(len(row) for row in t)


def is_semistandard_english(t: Tableau) -> bool:
    """Rows weakly increasing, columns strictly increasing."""
    t = tableau(t)
    for i, row in enumerate(t):
        for j, x in enumerate(row):
            if j + 1 < len(row) and x > row[j + 1]:
                return False
            if i + 1 < len(t) and j < len(t[i + 1]) and x >= t[i + 1][j]:
                return False
    return True


def is_semistandard_french(t: Tableau) -> bool:
    """Rows strictly increasing, columns weakly increasing."""
    t = tableau(t)
    for i, row in enumerate(t):
        for j, x in enumerate(row):
            if j + 1 < len(row) and x >= row[j + 1]:
                return False
            if i + 1 < len(t) and j < len(t[i + 1]) and x > t[i + 1][j]:
                return False
    return True


def is_double_shape(parts) -> bool:
    """True when every part of the partition occurs an even number of times."""
    sh = shape(parts)
    counts: dict[int, int] = {}
    for p in sh:
        counts[p] = counts.get(p, 0) + 1
    return all(n % 2 == 0 for n in counts.values())


def is_d_tableau(t: Tableau) -> bool:
    t = tableau(t)
    return is_double_shape(shape_of(t)) and is_semistandard_english(t)


def content_of(t: Tableau) -> Content:
    t = tableau(t)
    entries = [x for row in t for x in row]
    if not entries:
        return ()
    counts = [0] * max(entries)
    for x in entries:
        counts[x - 1] += 1
    return tuple(counts)


def trim_content(content) -> Content:
    """Canonical content vector: trailing zeros removed."""
    c = tuple(int(n) for n in content)
    if any(n < 0 for n in c):
        raise ValueError(f"content counts must be nonnegative: {c}")
    while c and c[-1] == 0:
        c = c[:-1]
    return c


def enumerate_ssyt(shape_, content, convention: str = "english") -> list[Tableau]:
    """All semistandard tableaux of the given shape and content.

    Entries are drawn from 1..len(content) with the prescribed
    multiplicities.  The result lists each tableau exactly once, in
    lexicographic order of the row reading word (rows concatenated top
    to bottom), which is the order a row-major backtracking fill with
    ascending value choices produces.
    """
    sh = shape(shape_)
    counts = [int(n) for n in content]
    if any(n < 0 for n in counts):
        raise ValueError(f"content counts must be nonnegative: {counts}")
    if convention not in CONVENTIONS:
        raise ValueError(f"unknown convention: {convention!r}")
    if sum(counts) != sum(sh):
        raise ValueError(
            f"content sums to {sum(counts)} but shape has {sum(sh)} cells"
        )

    strict_rows = convention == "french"
    k = len(counts)
    cells = [(i, j) for i, width in enumerate(sh) for j in range(width)]
    grid = [[0] * width for width in sh]
    out: list[Tableau] = []

    def fill(pos: int) -> None:
        if pos == len(cells):
            out.append(tuple(tuple(row) for row in grid))
            return
        i, j = cells[pos]
        lo = 1
        if j:
            lo = grid[i][j - 1] + (1 if strict_rows else 0)
        if i:
            lo = max(lo, grid[i - 1][j] + (0 if strict_rows else 1))
        for v in range(lo, k + 1):
            if counts[v - 1]:
                counts[v - 1] -= 1
                grid[i][j] = v
                fill(pos + 1)
                counts[v - 1] += 1
        grid[i][j] = 0

    fill(0)
    return out


def tableau_to_text(t: Tableau) -> str:
    """One row per line, entries space-separated."""
    return "\n".join(" ".join(str(x) for x in row) for row in t)


def tableau_from_text(text: str) -> Tableau:
    rows = [line.split() for line in text.splitlines() if line.strip()]
    return tableau(rows)


def tableau_to_json(t: Tableau) -> dict:
    return {"rows": [list(row) for row in t]}


def tableau_from_json(payload: dict) -> Tableau:
    if not isinstance(payload, dict) or "rows" not in payload:
        raise ValueError("tableau JSON must be an object with a 'rows' key")
    return tableau(payload["rows"])

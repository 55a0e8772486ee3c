"""Two-rowed arrays of commutators.

An array is a tuple of columns, each column a pair ``(a, b)`` of
positive integers; the array stands for the product of the pairwise
commutators of the variables indexed by its columns.  Three nested
classes of arrays matter:

* raw: any column pairs at all;
* c-array: every column descending (``a > b``) and the columns weakly
  increasing in lexicographic order;
* normal: a c-array in which no value occurs more than twice and no
  three columns ``r < s < t`` have weakly increasing bottom entries
  ``b_r <= b_s <= b_t``.

``normalize`` rewrites a raw array into signed c-array form using the
antisymmetry of commutators (swapping within a column flips the sign,
a repeated value in a column kills the product).  The total order used
everywhere compares the key ``(a_m, ..., a_1, b_1, ..., b_m)``
lexicographically.
"""

from __future__ import annotations

from .tableaux import Content, trim_content

Column = tuple[int, int]
TwoRowArray = tuple[Column, ...]


def array(columns) -> TwoRowArray:
    """Validate and return an array as a tuple of ``(a, b)`` columns."""
    cols = tuple((int(a), int(b)) for a, b in columns)
    for a, b in cols:
        if a < 1 or b < 1:
            raise ValueError(f"array entries must be positive: {cols}")
    return cols


def array_from_rows(top, bottom) -> TwoRowArray:
    top = tuple(top)
    bottom = tuple(bottom)
    if len(top) != len(bottom):
        raise ValueError(
            f"rows differ in length: {len(top)} vs {len(bottom)}"
        )
    return array(zip(top, bottom))


def array_rows(s: TwoRowArray) -> tuple[tuple[int, ...], tuple[int, ...]]:
    return tuple(a for a, _ in s), tuple(b for _, b in s)


def array_content(s: TwoRowArray) -> Content:
    entries = [x for col in s for x in col]
    if not entries:
        return ()
    counts = [0] * max(entries)
    for x in entries:
        counts[x - 1] += 1
    return tuple(counts)


def has_descending_columns(s: TwoRowArray) -> bool:
    return all(a > b for a, b in s)


def has_sorted_columns(s: TwoRowArray) -> bool:
    return all(s[i] <= s[i + 1] for i in range(len(s) - 1))


def has_bounded_multiplicity(s: TwoRowArray) -> bool:
    return all(n <= 2 for n in array_content(s))


def has_no_weak_bottom_triple(s: TwoRowArray) -> bool:
    """No columns r < s < t with weakly increasing bottom entries."""
    b = [bb for _, bb in s]
    m = len(b)
    for r in range(m):
        for mid in range(r + 1, m):
            if b[r] <= b[mid]:
                for t in range(mid + 1, m):
                    if b[mid] <= b[t]:
                        return False
    return True


def is_c_array(s: TwoRowArray) -> bool:
    s = array(s)
    return has_descending_columns(s) and has_sorted_columns(s)


def is_normal(s: TwoRowArray) -> bool:
    s = array(s)
    return (
        is_c_array(s)
        and has_bounded_multiplicity(s)
        and has_no_weak_bottom_triple(s)
    )


def classify(s: TwoRowArray) -> str:
    """Return ``"normal"``, ``"c_array"`` or ``"raw"``."""
    s = array(s)
    if not is_c_array(s):
        return "raw"
    if has_bounded_multiplicity(s) and has_no_weak_bottom_triple(s):
        return "normal"
    return "c_array"


def _require_c_array(s: TwoRowArray) -> TwoRowArray:
    s = array(s)
    if not is_c_array(s):
        raise ValueError(f"not a c-array: {s}")
    return s


def normalize(s: TwoRowArray) -> tuple[int, TwoRowArray | None]:
    """Rewrite a raw array as a signed c-array.

    Returns ``(sign, c_array)`` where the sign counts the in-column
    swaps needed to make every column descending, or ``(0, None)`` when
    some column repeats a value (the commutator of a variable with
    itself vanishes).  Column sorting is stable and carries no sign.
    """
    s = array(s)
    sign = 1
    cols = []
    for a, b in s:
        if a == b:
            return 0, None
        if a < b:
            a, b = b, a
            sign = -sign
        cols.append((a, b))
    cols.sort()
    return sign, tuple(cols)


def ordering_key(s: TwoRowArray):
    top, bottom = array_rows(s)
    return tuple(reversed(top)) + bottom


def compare(s1: TwoRowArray, s2: TwoRowArray) -> int:
    """Total order on arrays of equal length: -1, 0 or 1."""
    s1, s2 = array(s1), array(s2)
    if len(s1) != len(s2):
        raise ValueError(
            f"cannot compare arrays with {len(s1)} and {len(s2)} columns"
        )
    k1, k2 = ordering_key(s1), ordering_key(s2)
    return (k1 > k2) - (k1 < k2)


def star(s1: TwoRowArray, s2: TwoRowArray) -> TwoRowArray:
    """Merge two c-arrays into the column-sorted c-array of their product."""
    s1 = _require_c_array(s1)
    s2 = _require_c_array(s2)
    return tuple(sorted(s1 + s2))


def _pairings(items: list[int]):
    """Distinct perfect matchings of a sorted multiset into pairs."""
    if not items:
        yield ()
        return
    first, rest = items[0], items[1:]
    used = set()
    for idx, other in enumerate(rest):
        if other in used:
            continue
        used.add(other)
        for tail in _pairings(rest[:idx] + rest[idx + 1 :]):
            yield ((first, other),) + tail


def enumerate_carrays(content) -> list[TwoRowArray]:
    """All c-arrays of the given content, sorted by the total order."""
    counts = trim_content(content)
    items: list[int] = []
    for value, n in enumerate(counts, start=1):
        items.extend([value] * n)
    if len(items) % 2:
        return []
    found = set()
    for pairing in _pairings(items):
        if any(lo == hi for lo, hi in pairing):
            continue
        found.add(tuple(sorted((hi, lo) for lo, hi in pairing)))
    return sorted(found, key=ordering_key)


def enumerate_normal(content) -> list[TwoRowArray]:
    """All normal c-arrays of the given content, sorted by the total order.

    Empty whenever the total degree is odd or some value occurs more
    than twice.
    """
    counts = trim_content(content)
    if any(n > 2 for n in counts):
        return []
    return [s for s in enumerate_carrays(counts) if has_no_weak_bottom_triple(s)]


def array_to_text(s: TwoRowArray) -> str:
    """Two lines: the top row, then the bottom row."""
    if not s:
        return ""
    top, bottom = array_rows(s)
    return " ".join(map(str, top)) + "\n" + " ".join(map(str, bottom))


def array_from_text(text: str) -> TwoRowArray:
    lines = [line.split() for line in text.splitlines() if line.strip()]
    if not lines:
        return ()
    if len(lines) != 2:
        raise ValueError(f"expected two lines of integers, got {len(lines)}")
    return array_from_rows([int(x) for x in lines[0]], [int(x) for x in lines[1]])


def array_to_json(s: TwoRowArray) -> dict:
    top, bottom = array_rows(s)
    return {"top": list(top), "bottom": list(bottom)}


def array_from_json(payload: dict) -> TwoRowArray:
    if not isinstance(payload, dict) or "top" not in payload or "bottom" not in payload:
        raise ValueError("array JSON must be an object with 'top' and 'bottom' keys")
    return array_from_rows(payload["top"], payload["bottom"])

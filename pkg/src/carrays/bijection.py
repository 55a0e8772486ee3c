"""Bijection between c-arrays and tableaux of double shape.

Going forward, each column ``(a, b)`` of the c-array row-inserts its
bottom entry ``b`` and then appends the top entry ``a`` at the end of
the row directly below the one the insertion lengthened; this keeps the
shape doubled at every step.  Going back, the maximal entry at its
rightmost occurrence closes a row pair: a reverse deletion from its row
recovers the bottom entry, after which the bumped copy of the maximum
sits at the end of the row above and is removed.

Both directions preserve content, and the first row of the tableau
records the longest weakly increasing subsequence of the array's
bottom row.
"""

from __future__ import annotations

from .carray import TwoRowArray, array, array_content, is_c_array
from .krs import delete, insert
from .tableaux import Tableau, content_of, is_d_tableau


def _require_c_array(s: TwoRowArray) -> TwoRowArray:
    s = array(s)
    if not is_c_array(s):
        raise ValueError(f"not a c-array: {s}")
    return s


def carray_to_dtableau(s: TwoRowArray) -> Tableau:
    """Map a c-array to the semistandard tableau of double shape."""
    s = _require_c_array(s)
    t: Tableau = ()
    for a, b in s:
        t, i = insert(t, b)
        rows = list(t)
        if i + 1 > len(rows):
            rows.append((a,))
        else:
            rows[i] = rows[i] + (a,)
        t = tuple(rows)
    assert is_d_tableau(t), f"bijection produced a non-d-tableau: {t}"
    assert content_of(t) == array_content(s)
    return t


def dtableau_to_carray(t: Tableau) -> TwoRowArray:
    """Inverse of :func:`carray_to_dtableau`."""
    if not is_d_tableau(t):
        raise ValueError(f"not a d-tableau: {t}")
    cols: list[tuple[int, int]] = []
    while t:
        x = max(max(row) for row in t)
        # rightmost occurrence of the maximum; column-strictness makes it unique
        i0, j0 = max(
            ((i, j) for i, row in enumerate(t) for j, v in enumerate(row) if v == x),
            key=lambda ij: ij[1],
        )
        assert i0 >= 1, "maximal entry cannot sit in the first row of a pair"
        assert len(t[i0]) == j0 + 1, "maximal entry must close its row"
        assert len(t[i0 - 1]) == j0 + 1, "paired rows must have equal length"
        t2, y = delete(t, i0 + 1)
        rows = list(t2)
        assert rows[i0 - 1][-1] == x and len(rows[i0 - 1]) == j0 + 1, (
            "bumped maximum did not land on the paired corner"
        )
        rows[i0 - 1] = rows[i0 - 1][:-1]
        while rows and not rows[-1]:
            rows.pop()
        t = tuple(rows)
        cols.append((x, y))
    cols.reverse()
    s = tuple(cols)
    assert is_c_array(s), f"bijection produced a non-c-array: {s}"
    return s


def first_row_length(s: TwoRowArray) -> int:
    """Length of the tableau's first row.

    Equals the length of the longest weakly increasing subsequence of
    the array's bottom row; in particular a c-array is normal exactly
    when this is at most 2 and no value occurs more than twice, which
    makes the image shape of the form ``(2^2p, 1^2q)``.
    """
    s = _require_c_array(s)
    if not s:
        return 0
    return len(carray_to_dtableau(s)[0])


def normal_image_shape(s: TwoRowArray) -> bool:
    """Tableau-side picture of normality: the image shape is of the
    form ``(2^2p, 1^2q)`` and no entry occurs more than twice."""
    s = _require_c_array(s)
    t = carray_to_dtableau(s)
    return all(len(row) <= 2 for row in t) and all(n <= 2 for n in content_of(t))

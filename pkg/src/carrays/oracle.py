"""Polynomial model of the multilinear component.

A multilinear array on labels ``1..2m`` maps to the commuting
polynomial ``sign * (U_{a1}U_{b1} + V_{a1}V_{b1}) * ...`` where the
sign is that of the permutation reading the array column by column,
top before bottom.  The map kills the straightening relations (the
three-column relation is a 3x3 determinant of a rank-2 matrix) and is
injective on combinations of normal multilinear arrays, so exact
polynomial identities here certify the rewriting engine
independently.  Everything is exact: coefficients are ``Fraction`` and
ranks come from fraction-free integer elimination.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Iterable, Mapping

from .carray import TwoRowArray, array

Token = tuple[str, int]
Monomial = tuple[Token, ...]


class Poly:
    """Sparse multivariate polynomial over the rationals.

    Monomials are sorted tuples of variable tokens with repetition;
    zero coefficients are never stored, so equality is dict equality.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Monomial, Fraction] | None = None):
        clean: dict[Monomial, Fraction] = {}
        for mono, coeff in (terms or {}).items():
            c = Fraction(coeff)
            if c:
                mono = tuple(sorted(mono))
                acc = clean.get(mono, Fraction(0)) + c
                if acc:
                    clean[mono] = acc
                else:
                    clean.pop(mono, None)
        self.terms = clean

    @classmethod
    def zero(cls) -> "Poly":
        return cls()

    @classmethod
    def constant(cls, value) -> "Poly":
        return cls({(): Fraction(value)})

    @classmethod
    def variable(cls, token: Token) -> "Poly":
        return cls({(token,): Fraction(1)})

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        return isinstance(other, Poly) and self.terms == other.terms

    def __add__(self, other: "Poly") -> "Poly":
        out = dict(self.terms)
        for mono, coeff in other.terms.items():
            acc = out.get(mono, Fraction(0)) + coeff
            if acc:
                out[mono] = acc
            else:
                out.pop(mono, None)
        result = Poly.__new__(Poly)
        result.terms = out
        return result

    def __neg__(self) -> "Poly":
        result = Poly.__new__(Poly)
        result.terms = {m: -c for m, c in self.terms.items()}
        return result

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self._scaled(Fraction(other))
        out: dict[Monomial, Fraction] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                mono = tuple(sorted(m1 + m2))
                acc = out.get(mono, Fraction(0)) + c1 * c2
                if acc:
                    out[mono] = acc
                else:
                    out.pop(mono, None)
        result = Poly.__new__(Poly)
        result.terms = out
        return result

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self._scaled(Fraction(other))
        return NotImplemented

    def _scaled(self, c: Fraction) -> "Poly":
        result = Poly.__new__(Poly)
        result.terms = {} if not c else {m: c * cf for m, cf in self.terms.items()}
        return result

    def monomials(self) -> list[Monomial]:
        return sorted(self.terms)

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for mono in self.monomials():
            coeff = self.terms[mono]
            body = "*".join(f"{name}{index}" for name, index in mono)
            if not body:
                parts.append(str(coeff))
            elif coeff == 1:
                parts.append(body)
            elif coeff == -1:
                parts.append(f"-{body}")
            else:
                parts.append(f"{coeff}*{body}")
        return " + ".join(parts).replace("+ -", "- ")


def _multilinear_word(s: TwoRowArray) -> list[int]:
    word = [x for col in s for x in col]
    if len(set(word)) != len(word):
        raise ValueError(f"array is not multilinear: {s}")
    return word


def perm_sign(s: TwoRowArray) -> int:
    """Sign of the permutation reading the array column by column."""
    word = _multilinear_word(array(s))
    inversions = sum(
        1
        for i in range(len(word))
        for j in range(i + 1, len(word))
        if word[i] > word[j]
    )
    return -1 if inversions % 2 else 1


def q_poly(s: TwoRowArray) -> Poly:
    """Product over columns of ``U_a U_b + V_a V_b``."""
    s = array(s)
    _multilinear_word(s)
    result = Poly.constant(1)
    for a, b in s:
        factor = Poly(
            {
                tuple(sorted((("U", a), ("U", b)))): Fraction(1),
                tuple(sorted((("V", a), ("V", b)))): Fraction(1),
            }
        )
        result = result * factor
    return result


def p_poly(s: TwoRowArray) -> Poly:
    """Product over columns of ``U_a V_b + U_b V_a`` (the other factor
    convention; spans combinations of the same rank as ``q_poly``)."""
    s = array(s)
    _multilinear_word(s)
    result = Poly.constant(1)
    for a, b in s:
        factor = Poly(
            {
                tuple(sorted((("U", a), ("V", b)))): Fraction(1),
                tuple(sorted((("U", b), ("V", a)))): Fraction(1),
            }
        )
        result = result * factor
    return result


def phi(combination: Mapping[TwoRowArray, Fraction]) -> Poly:
    """Signed polynomial image of a combination of multilinear arrays.

    All arrays must use one common label set, each label exactly once.
    """
    arrays = [array(s) for s in combination]
    labels = None
    for s in arrays:
        current = frozenset(_multilinear_word(s))
        if labels is None:
            labels = current
        elif current != labels:
            raise ValueError(
                f"arrays use different label sets: {sorted(labels)} vs {sorted(current)}"
            )
    total = Poly.zero()
    for s, coeff in combination.items():
        s = array(s)
        total = total + (Fraction(coeff) * perm_sign(s)) * q_poly(s)
    return total


def exact_rank(rows: Iterable[Iterable]) -> int:
    """Rank of an exact rational matrix via fraction-free elimination.

    Rows are scaled to integers, then one-step Bareiss elimination
    keeps every intermediate entry integral; no floating point is
    involved anywhere.
    """
    mat: list[list[int]] = []
    for row in rows:
        fracs = [Fraction(x) for x in row]
        scale = lcm(*(f.denominator for f in fracs)) if fracs else 1
        mat.append([int(f * scale) for f in fracs])
    if not mat or not mat[0]:
        return 0
    ncols = len(mat[0])
    if any(len(r) != ncols for r in mat):
        raise ValueError("ragged matrix")
    rank = 0
    prev = 1
    for col in range(ncols):
        pivot_row = next(
            (i for i in range(rank, len(mat)) if mat[i][col]), None
        )
        if pivot_row is None:
            continue
        mat[rank], mat[pivot_row] = mat[pivot_row], mat[rank]
        pivot = mat[rank][col]
        for i in range(rank + 1, len(mat)):
            head = mat[i][col]
            for j in range(col + 1, ncols):
                mat[i][j] = (pivot * mat[i][j] - head * mat[rank][j]) // prev
            mat[i][col] = 0
        prev = pivot
        rank += 1
        if rank == len(mat):
            break
    return rank


def independence_rank(arrays: Iterable[TwoRowArray]) -> int:
    """Rank of the coefficient matrix of the signed polynomial images."""
    polys = [Fraction(perm_sign(s)) * q_poly(array(s)) for s in arrays]
    monomials = sorted({m for p in polys for m in p.terms})
    index = {m: i for i, m in enumerate(monomials)}
    rows = []
    for p in polys:
        row = [Fraction(0)] * len(monomials)
        for mono, coeff in p.terms.items():
            row[index[mono]] = coeff
        rows.append(row)
    return exact_rank(rows)

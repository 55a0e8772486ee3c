"""Dimension formula, Hilbert series and the codimension series.

The multigraded dimension of the normal-array span depends only on how
many values occur once (``l = 2s``) and twice (``q``) in the content:
it is ``C(2s-1, s)`` when ``l > 0``, ``1`` when ``l = 0`` and ``q`` is
even, and ``0`` otherwise (including odd total degree and any value
occurring more than twice).

The Hilbert series in ``k`` variables is computed two independent
ways and must agree coefficient by coefficient:

* the closed half-sum ``(1/2) * sum_i [e_i^2 + (-1)^i e_i(t^2)]`` over
  elementary symmetric polynomials, and
* the sum of Schur polynomials over the shape family
  ``(2^2p, 1^2q)``, each Schur polynomial obtained by enumerating
  semistandard tableaux.

The codimension generating function is the even series
``(1/2) * (1 + (1 - 4z^2)^(-1/2))``, expanded with the generalized
binomial series; its ``z^{2m}`` coefficient is ``C(2m, m)/2`` for
``m >= 1``.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations, product
from math import comb, factorial
from typing import Iterable

from .tableaux import enumerate_ssyt, shape as validate_shape, trim_content

Exponents = tuple[int, ...]


class SymPoly:
    """Exact polynomial in ``t1..tk`` truncated at a total degree.

    ``maxdeg`` is ``None`` for untruncated values; arithmetic truncates
    to the smaller of the operands' bounds.
    """

    __slots__ = ("nvars", "maxdeg", "terms")

    def __init__(self, nvars: int, terms=None, maxdeg: int | None = None):
        self.nvars = int(nvars)
        self.maxdeg = maxdeg
        clean: dict[Exponents, Fraction] = {}
        for expo, coeff in (terms or {}).items():
            expo = tuple(int(e) for e in expo)
            if len(expo) != self.nvars or any(e < 0 for e in expo):
                raise ValueError(f"bad exponent vector: {expo}")
            if maxdeg is not None and sum(expo) > maxdeg:
                continue
            c = Fraction(coeff)
            if not c:
                continue
            acc = clean.get(expo, Fraction(0)) + c
            if acc:
                clean[expo] = acc
            else:
                clean.pop(expo, None)
        self.terms = clean

    @classmethod
    def zero(cls, nvars: int, maxdeg: int | None = None) -> "SymPoly":
        return cls(nvars, maxdeg=maxdeg)

    @classmethod
    def constant(cls, nvars: int, value, maxdeg: int | None = None) -> "SymPoly":
        return cls(nvars, {(0,) * nvars: Fraction(value)}, maxdeg=maxdeg)

    @classmethod
    def monomial(cls, nvars: int, exponents, coeff=1) -> "SymPoly":
        return cls(nvars, {tuple(exponents): Fraction(coeff)})

    @staticmethod
    def _combine_maxdeg(a: int | None, b: int | None) -> int | None:
        if a is None:
            return b
        if b is None:
            return a
        return min(a, b)

    def _require_same_vars(self, other: "SymPoly") -> None:
        if self.nvars != other.nvars:
            raise ValueError(f"variable counts differ: {self.nvars} vs {other.nvars}")

    def truncate(self, maxdeg: int) -> "SymPoly":
        return SymPoly(self.nvars, self.terms, maxdeg=maxdeg)

    def coefficient(self, exponents) -> Fraction:
        return self.terms.get(tuple(exponents), Fraction(0))

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SymPoly)
            and self.nvars == other.nvars
            and self.terms == other.terms
        )

    def __add__(self, other: "SymPoly") -> "SymPoly":
        self._require_same_vars(other)
        out = dict(self.terms)
        for expo, coeff in other.terms.items():
            acc = out.get(expo, Fraction(0)) + coeff
            if acc:
                out[expo] = acc
            else:
                out.pop(expo, None)
        return SymPoly(
            self.nvars, out, maxdeg=self._combine_maxdeg(self.maxdeg, other.maxdeg)
        )

    def __neg__(self) -> "SymPoly":
        return SymPoly(
            self.nvars, {e: -c for e, c in self.terms.items()}, maxdeg=self.maxdeg
        )

    def __sub__(self, other: "SymPoly") -> "SymPoly":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return SymPoly(
                self.nvars,
                {e: Fraction(other) * c for e, c in self.terms.items()},
                maxdeg=self.maxdeg,
            )
        self._require_same_vars(other)
        bound = self._combine_maxdeg(self.maxdeg, other.maxdeg)
        out: dict[Exponents, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                expo = tuple(a + b for a, b in zip(e1, e2))
                if bound is not None and sum(expo) > bound:
                    continue
                acc = out.get(expo, Fraction(0)) + c1 * c2
                if acc:
                    out[expo] = acc
                else:
                    out.pop(expo, None)
        return SymPoly(self.nvars, out, maxdeg=bound)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * other
        return NotImplemented

    def substitute_squares(self) -> "SymPoly":
        """Replace every variable by its square."""
        bound = None if self.maxdeg is None else 2 * self.maxdeg
        return SymPoly(
            self.nvars,
            {tuple(2 * e for e in expo): c for expo, c in self.terms.items()},
            maxdeg=bound,
        )

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for expo in sorted(self.terms, key=lambda e: (sum(e), e)):
            coeff = self.terms[expo]
            body = "*".join(
                f"t{i + 1}" if e == 1 else f"t{i + 1}^{e}"
                for i, e in enumerate(expo)
                if e
            )
            if not body:
                parts.append(str(coeff))
            elif coeff == 1:
                parts.append(body)
            elif coeff == -1:
                parts.append(f"-{body}")
            else:
                parts.append(f"{coeff}*{body}")
        return " + ".join(parts).replace("+ -", "- ")


def elementary_symmetric(i: int, k: int) -> SymPoly:
    """Sum of all products of ``i`` distinct variables out of ``k``."""
    if not 0 <= i <= k:
        raise ValueError(f"need 0 <= i <= k, got i={i}, k={k}")
    terms: dict[Exponents, Fraction] = {}
    for subset in combinations(range(k), i):
        expo = [0] * k
        for idx in subset:
            expo[idx] = 1
        terms[tuple(expo)] = Fraction(1)
    return SymPoly(k, terms)


def carini_drensky(k: int, maxdeg: int) -> SymPoly:
    """Hilbert series as the elementary-symmetric half-sum, truncated."""
    if k < 1:
        raise ValueError("need at least one variable")
    total = SymPoly.zero(k)
    for i in range(k + 1):
        e = elementary_symmetric(i, k)
        term = e * e + (-1) ** i * e.substitute_squares()
        total = total + term
    return (total * Fraction(1, 2)).truncate(maxdeg)


def _compositions(total: int, parts: int) -> Iterable[tuple[int, ...]]:
    if parts == 0:
        if total == 0:
            yield ()
        return
    for head in range(total + 1):
        for tail in _compositions(total - head, parts - 1):
            yield (head,) + tail


def schur(shape, k: int, maxdeg: int) -> SymPoly:
    """Schur polynomial from semistandard tableau enumeration:
    the sum of ``t^content`` over english-semistandard tableaux of the
    given shape with entries at most ``k``."""
    sh = validate_shape(shape)
    n = sum(sh)
    if n > maxdeg:
        return SymPoly.zero(k, maxdeg=maxdeg)
    terms: dict[Exponents, Fraction] = {}
    for content in _compositions(n, k):
        count = len(enumerate_ssyt(sh, content, "english"))
        if count:
            terms[content] = Fraction(count)
    return SymPoly(k, terms, maxdeg=maxdeg)


def double_hook_free_shapes(maxdeg: int) -> list[tuple[int, ...]]:
    """The shape family ``(2^2p, 1^2q)`` with ``4p + 2q <= maxdeg``."""
    shapes = []
    for p in range(maxdeg // 4 + 1):
        for q in range((maxdeg - 4 * p) // 2 + 1):
            shapes.append((2,) * (2 * p) + (1,) * (2 * q))
    return sorted(shapes, key=lambda sh: (sum(sh), sh))


def hilbert_by_tableaux(k: int, maxdeg: int) -> SymPoly:
    """Hilbert series as the Schur sum over the shape family
    ``(2^2p, 1^2q)``, truncated."""
    if k < 1:
        raise ValueError("need at least one variable")
    total = SymPoly.zero(k, maxdeg=maxdeg)
    for sh in double_hook_free_shapes(maxdeg):
        total = total + schur(sh, k, maxdeg)
    return total


def dimension(content) -> int:
    """Multigraded dimension of the normal-array span for a content."""
    counts = trim_content(content)
    n = sum(counts)
    if n % 2:
        return 0
    if any(c > 2 for c in counts):
        return 0
    ones = sum(1 for c in counts if c == 1)
    twos = sum(1 for c in counts if c == 2)
    if ones == 0:
        # the all-twos case collapses to a single array when paired evenly
        return 1 if twos % 2 == 0 else 0
    return comb(ones - 1, ones // 2)


def hilbert_by_dimension(k: int, maxdeg: int) -> SymPoly:
    """Hilbert series directly from the dimension formula."""
    if k < 1:
        raise ValueError("need at least one variable")
    terms: dict[Exponents, Fraction] = {}
    for content in product((0, 1, 2), repeat=k):
        if sum(content) > maxdeg:
            continue
        d = dimension(content)
        if d:
            terms[content] = Fraction(d)
    return SymPoly(k, terms, maxdeg=maxdeg)


def gamma_coefficients(max_m: int) -> list[Fraction]:
    """Codimension series coefficients up to ``z^{2 max_m}``.

    Expands ``(1/2) * (1 + (1 - 4z^2)^(-1/2))`` with the generalized
    binomial series; odd coefficients vanish and the ``z^{2m}``
    coefficient equals ``C(2m, m)/2`` for ``m >= 1``, with 1 at
    ``z^0``.
    """
    if max_m < 0:
        raise ValueError("max_m must be nonnegative")
    coeffs = [Fraction(0)] * (2 * max_m + 1)
    for n in range(max_m + 1):
        binom = Fraction(1)
        for j in range(n):
            binom *= Fraction(-1, 2) - j
        binom /= factorial(n)
        coeffs[2 * n] = binom * Fraction(-4) ** n / 2
    coeffs[0] += Fraction(1, 2)
    return coeffs

"""Exterior-algebra arithmetic and supermatrix verification.

``GrassmannElem`` is an exact element of the exterior algebra on a
fixed number of anticommuting generators ``e1..eg`` over the
rationals; ``M11`` is a 2x2 matrix over it whose diagonal entries are
even and off-diagonal entries odd.  The supertrace of such a matrix is
``a - d``, and the supertrace-zero matrices are the substitution space
for the weak-identity checks: the triple commutator ``[[x1,x2],x3]``
and the product ``[x2,x1][x3,x1][x4,x1]`` vanish on it identically,
while a bare commutator does not.

Randomized verification draws matrices whose entries mix monomial
degrees (0 and 2 on the diagonal, 1 and 3 off it) with small integer
coefficients from a seeded generator, so failures are reproducible.
"""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Mapping

from .carray import TwoRowArray, array


def _merge_monomials(m1, m2):
    """Merge two sorted generator tuples; sign counts the crossings."""
    out = []
    sign = 1
    i = j = 0
    while i < len(m1) and j < len(m2):
        if m1[i] == m2[j]:
            return None, 0
        if m1[i] < m2[j]:
            out.append(m1[i])
            i += 1
        else:
            out.append(m2[j])
            j += 1
            if (len(m1) - i) % 2:
                sign = -sign
    out.extend(m1[i:])
    out.extend(m2[j:])
    return tuple(out), sign


class GrassmannElem:
    """Exterior-algebra element: signed rational coefficients on
    strictly increasing generator subsets."""

    __slots__ = ("gens", "terms")

    def __init__(self, gens: int, terms=None):
        gens = int(gens)
        if gens < 0:
            raise ValueError("generator count must be nonnegative")
        self.gens = gens
        clean: dict[tuple[int, ...], Fraction] = {}
        for mono, coeff in (terms or {}).items():
            mono = tuple(int(g) for g in mono)
            if any(g < 1 or g > gens for g in mono):
                raise ValueError(f"generator index out of range 1..{gens}: {mono}")
            if any(mono[k] >= mono[k + 1] for k in range(len(mono) - 1)):
                raise ValueError(f"monomial must be strictly increasing: {mono}")
            c = Fraction(coeff)
            if not c:
                continue
            acc = clean.get(mono, Fraction(0)) + c
            if acc:
                clean[mono] = acc
            else:
                clean.pop(mono, None)
        self.terms = clean

    @classmethod
    def zero(cls, gens: int) -> "GrassmannElem":
        return cls(gens)

    @classmethod
    def scalar(cls, gens: int, value) -> "GrassmannElem":
        return cls(gens, {(): Fraction(value)})

    @classmethod
    def generator(cls, gens: int, index: int) -> "GrassmannElem":
        return cls(gens, {(index,): Fraction(1)})

    @classmethod
    def monomial(cls, gens: int, indices, coeff=1) -> "GrassmannElem":
        return cls(gens, {tuple(indices): Fraction(coeff)})

    def _require_same(self, other: "GrassmannElem") -> None:
        if self.gens != other.gens:
            raise ValueError(
                f"generator counts differ: {self.gens} vs {other.gens}"
            )

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_even(self) -> bool:
        return all(len(m) % 2 == 0 for m in self.terms)

    def is_odd(self) -> bool:
        return all(len(m) % 2 == 1 for m in self.terms)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, GrassmannElem)
            and self.gens == other.gens
            and self.terms == other.terms
        )

    def __add__(self, other: "GrassmannElem") -> "GrassmannElem":
        self._require_same(other)
        out = dict(self.terms)
        for mono, coeff in other.terms.items():
            acc = out.get(mono, Fraction(0)) + coeff
            if acc:
                out[mono] = acc
            else:
                out.pop(mono, None)
        return self._wrap(out)

    def __neg__(self) -> "GrassmannElem":
        return self._wrap({m: -c for m, c in self.terms.items()})

    def __sub__(self, other: "GrassmannElem") -> "GrassmannElem":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            return self._wrap(
                {} if not c else {m: c * cf for m, cf in self.terms.items()}
            )
        self._require_same(other)
        out: dict[tuple[int, ...], Fraction] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                mono, sign = _merge_monomials(m1, m2)
                if not sign:
                    continue
                acc = out.get(mono, Fraction(0)) + sign * c1 * c2
                if acc:
                    out[mono] = acc
                else:
                    out.pop(mono, None)
        return self._wrap(out)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * other
        return NotImplemented

    def _wrap(self, terms: dict) -> "GrassmannElem":
        elem = GrassmannElem.__new__(GrassmannElem)
        elem.gens = self.gens
        elem.terms = terms
        return elem

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for mono in sorted(self.terms, key=lambda m: (len(m), m)):
            coeff = self.terms[mono]
            body = "^".join(f"e{g}" for g in mono)
            if not body:
                parts.append(str(coeff))
            elif coeff == 1:
                parts.append(body)
            elif coeff == -1:
                parts.append(f"-{body}")
            else:
                parts.append(f"{coeff}*{body}")
        return " + ".join(parts).replace("+ -", "- ")


class M11:
    """2x2 supermatrix ``[[a, b], [c, d]]``: a, d even; b, c odd."""

    __slots__ = ("a", "b", "c", "d")

    def __init__(self, a, b, c, d):
        for even in (a, d):
            if not even.is_even():
                raise ValueError(f"diagonal entry must be even: {even!r}")
        for odd in (b, c):
            if not odd.is_odd():
                raise ValueError(f"off-diagonal entry must be odd: {odd!r}")
        a._require_same(b)
        a._require_same(c)
        a._require_same(d)
        self.a, self.b, self.c, self.d = a, b, c, d

    @property
    def gens(self) -> int:
        return self.a.gens

    @classmethod
    def zero(cls, gens: int) -> "M11":
        z = GrassmannElem.zero(gens)
        return cls(z, z, z, z)

    @classmethod
    def identity(cls, gens: int) -> "M11":
        one = GrassmannElem.scalar(gens, 1)
        z = GrassmannElem.zero(gens)
        return cls(one, z, z, one)

    @classmethod
    def antidiag(cls, upper: GrassmannElem, lower: GrassmannElem) -> "M11":
        z = GrassmannElem.zero(upper.gens)
        return cls(z, upper, lower, z)

    @classmethod
    def central(cls, value: GrassmannElem) -> "M11":
        z = GrassmannElem.zero(value.gens)
        return cls(value, z, z, value)

    def supertrace(self) -> GrassmannElem:
        return self.a - self.d

    def is_zero(self) -> bool:
        return not (self.a or self.b or self.c or self.d)

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, M11)
            and self.a == other.a
            and self.b == other.b
            and self.c == other.c
            and self.d == other.d
        )

    def __add__(self, other: "M11") -> "M11":
        return M11(
            self.a + other.a, self.b + other.b, self.c + other.c, self.d + other.d
        )

    def __sub__(self, other: "M11") -> "M11":
        return M11(
            self.a - other.a, self.b - other.b, self.c - other.c, self.d - other.d
        )

    def __neg__(self) -> "M11":
        return M11(-self.a, -self.b, -self.c, -self.d)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return M11(
                self.a * other, self.b * other, self.c * other, self.d * other
            )
        return M11(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * other
        return NotImplemented

    def __repr__(self) -> str:
        return f"[[{self.a!r}, {self.b!r}], [{self.c!r}, {self.d!r}]]"


def commutator(x: M11, y: M11) -> M11:
    return x * y - y * x


def eval_array(s: TwoRowArray, assignment: Mapping[int, M11], gens=None) -> M11:
    """Evaluate the product of column commutators at supertrace-zero
    matrices; the empty array gives the identity matrix."""
    s = array(s)
    needed = sorted({x for col in s for x in col})
    for v in needed:
        if v not in assignment:
            raise ValueError(f"variable {v} has no assigned matrix")
        if assignment[v].supertrace():
            raise ValueError(f"assigned matrix for variable {v} has nonzero supertrace")
    if gens is None:
        if needed:
            gens = assignment[needed[0]].gens
        elif assignment:
            gens = next(iter(assignment.values())).gens
        else:
            gens = 0
    acc = M11.identity(gens)
    for a, b in s:
        acc = acc * commutator(assignment[a], assignment[b])
    return acc


def random_w(gens: int, rng: random.Random) -> M11:
    """Random supertrace-zero matrix with small exact coefficients.

    Diagonal entries mix degrees 0 and 2, off-diagonal entries degrees
    1 and 3; coefficients are integers in -3..3.
    """
    if gens < 3:
        raise ValueError("need at least 3 generators for degree-3 monomials")

    def coeff() -> Fraction:
        return Fraction(rng.randint(-3, 3))

    def even_entry() -> GrassmannElem:
        terms: dict[tuple[int, ...], Fraction] = {(): coeff()}
        for _ in range(2):
            mono = tuple(sorted(rng.sample(range(1, gens + 1), 2)))
            terms[mono] = terms.get(mono, Fraction(0)) + coeff()
        return GrassmannElem(gens, {m: c for m, c in terms.items() if c})

    def odd_entry() -> GrassmannElem:
        terms: dict[tuple[int, ...], Fraction] = {}
        for size in (1, 1, 3):
            mono = tuple(sorted(rng.sample(range(1, gens + 1), size)))
            terms[mono] = terms.get(mono, Fraction(0)) + coeff()
        return GrassmannElem(gens, {m: c for m, c in terms.items() if c})

    diag = even_entry()
    return M11(diag, odd_entry(), odd_entry(), diag)


def _eval_c3(ws: list[M11]) -> M11:
    return commutator(commutator(ws[0], ws[1]), ws[2])


def _eval_p(ws: list[M11]) -> M11:
    return (
        commutator(ws[1], ws[0])
        * commutator(ws[2], ws[0])
        * commutator(ws[3], ws[0])
    )


def _eval_c2(ws: list[M11]) -> M11:
    return commutator(ws[0], ws[1])


IDENTITY_ARITY = {"c3": 3, "p": 4, "c2": 2}
_IDENTITY_EVAL = {"c3": _eval_c3, "p": _eval_p, "c2": _eval_c2}


def check_identity(f, samples: int = 100, gens: int = 12, seed: int = 0):
    """Evaluate ``f`` on seeded random supertrace-zero substitutions.

    ``f`` is one of the names ``"c3"`` (triple commutator), ``"p"``
    (the commutator product sharing one variable), ``"c2"`` (a bare
    commutator, not an identity), or a linear combination mapping
    arrays to coefficients.  Returns ``None`` when every sample
    vanishes, else ``(sample_index, matrices)`` for the first
    counterexample.
    """
    if isinstance(f, str):
        if f not in _IDENTITY_EVAL:
            raise ValueError(f"unknown identity name: {f!r}")
        arity = IDENTITY_ARITY[f]
        evaluate = _IDENTITY_EVAL[f]
    else:
        combination = {array(s): Fraction(c) for s, c in f.items()}
        arity = max(
            (x for s in combination for col in s for x in col), default=0
        )

        def evaluate(ws: list[M11]) -> M11:
            assignment = {v + 1: w for v, w in enumerate(ws)}
            total = M11.zero(gens)
            for s, c in combination.items():
                total = total + eval_array(s, assignment, gens=gens) * c
            return total

    rng = random.Random(seed)
    for index in range(samples):
        ws = [random_w(gens, rng) for _ in range(arity)]
        if evaluate(ws):
            return index, ws
    return None


def verify_weak_identity(f, samples: int = 100, gens: int = 12, seed: int = 0) -> bool:
    """True when all sampled substitutions send ``f`` to the zero matrix."""
    return check_identity(f, samples=samples, gens=gens, seed=seed) is None


def squared_pair_array(r: int) -> TwoRowArray:
    """The normal c-array ``[(r+j, r+1-j) twice, j = 1..r]``: each of r
    commutators squared, on 2r distinct values each used twice."""
    cols = []
    for j in range(1, r + 1):
        cols.extend([(r + j, r + 1 - j)] * 2)
    return tuple(cols)


def scalar_evaluation(r: int) -> M11:
    """Evaluate the squared-pair array at ``w_i = antidiag(u_i, v_i)``
    on 4r distinct generators (``u_i = e_i``, ``v_i = e_{2r+i}``)."""
    if r < 0:
        raise ValueError("r must be nonnegative")
    gens = 4 * r
    assignment = {
        i: M11.antidiag(
            GrassmannElem.generator(gens, i),
            GrassmannElem.generator(gens, 2 * r + i),
        )
        for i in range(1, 2 * r + 1)
    }
    return eval_array(squared_pair_array(r), assignment, gens=gens)


def scalar_check(r: int) -> bool:
    """Exact closed form of the squared-pair evaluation.

    The value is the scalar matrix ``2^r * (u_1^v_1)(u_2^v_2)...(u_2r^v_2r) * I``,
    the reference monomial multiplying each matrix's generator pair in
    matrix order.  (Rewritten on the grouped monomial
    ``u_1..u_2r v_1..v_2r`` the same value carries the coefficient
    ``(-2)^r``.)
    """
    gens = 4 * r
    reference = GrassmannElem.scalar(gens, 2**r)
    for i in range(1, 2 * r + 1):
        reference = reference * GrassmannElem.generator(gens, i)
        reference = reference * GrassmannElem.generator(gens, 2 * r + i)
    return scalar_evaluation(r) == M11.central(reference)

"""Multivariate Laurent polynomials with exact integer coefficients.

A Laurent polynomial in ``m`` variables is stored as a mapping from
exponent vectors (tuples of ``m`` ints, negative exponents allowed) to
nonzero integer coefficients.  Zero coefficients are never stored, so
equality of the term maps is equality of polynomials.

Terms are ordered by graded lexicographic order on exponent vectors
(total degree first, then lex); this gives every polynomial a canonical
term list, a leading term, and a total order used by seed
canonicalization.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Mapping


class NonLaurentResult(ArithmeticError):
    """Raised when an exact Laurent division leaves a remainder."""


def _grlex_key(exp: tuple[int, ...]) -> tuple:
    return (sum(exp), exp)


class LaurentPoly:
    """An exact multivariate Laurent polynomial.

    Parameters
    ----------
    nvars:
        Number of variables ``m``.
    terms:
        Mapping of exponent tuples (length ``m``) to integer coefficients.
        Zero coefficients are dropped.
    """

    __slots__ = ("nvars", "terms", "_hash")

    def __init__(self, nvars: int, terms: Mapping[tuple[int, ...], int] | None = None):
        self.nvars = nvars
        clean: dict[tuple[int, ...], int] = {}
        if terms:
            for exp, coef in terms.items():
                if coef:
                    if len(exp) != nvars:
                        raise ValueError(f"exponent {exp} has wrong length for {nvars} variables")
                    clean[tuple(exp)] = int(coef)
        self.terms = clean
        self._hash: int | None = None

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, nvars: int) -> "LaurentPoly":
        return cls(nvars, {})

    @classmethod
    def one(cls, nvars: int) -> "LaurentPoly":
        return cls(nvars, {(0,) * nvars: 1})

    @classmethod
    def constant(cls, nvars: int, c: int) -> "LaurentPoly":
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def generator(cls, nvars: int, i: int, power: int = 1) -> "LaurentPoly":
        """The monomial ``x_i**power`` (``i`` is 0-based)."""
        exp = [0] * nvars
        exp[i] = power
        return cls(nvars, {tuple(exp): 1})

    @classmethod
    def monomial(cls, exp: Iterable[int], coef: int = 1) -> "LaurentPoly":
        exp = tuple(exp)
        return cls(len(exp), {exp: coef})

    # -- basic structure ----------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_one(self) -> bool:
        return self.terms == {(0,) * self.nvars: 1}

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def sorted_terms(self) -> list[tuple[tuple[int, ...], int]]:
        """Terms sorted descending in graded lex order."""
        return sorted(self.terms.items(), key=lambda t: _grlex_key(t[0]), reverse=True)

    def leading(self) -> tuple[tuple[int, ...], int]:
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        exp = max(self.terms, key=_grlex_key)
        return exp, self.terms[exp]

    def min_exponent(self, i: int) -> int:
        """Minimum exponent of variable ``i`` over all terms."""
        if not self.terms:
            raise ValueError("zero polynomial")
        return min(exp[i] for exp in self.terms)

    def coefficients(self) -> Iterator[int]:
        return iter(self.terms.values())

    # -- arithmetic ----------------------------------------------------

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        if self.nvars != other.nvars:
            raise ValueError("variable count mismatch")
        terms = dict(self.terms)
        for exp, coef in other.terms.items():
            c = terms.get(exp, 0) + coef
            if c:
                terms[exp] = c
            else:
                terms.pop(exp, None)
        out = LaurentPoly.__new__(LaurentPoly)
        out.nvars = self.nvars
        out.terms = terms
        out._hash = None
        return out

    def __neg__(self) -> "LaurentPoly":
        out = LaurentPoly.__new__(LaurentPoly)
        out.nvars = self.nvars
        out.terms = {e: -c for e, c in self.terms.items()}
        out._hash = None
        return out

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        if self.nvars != other.nvars:
            raise ValueError("variable count mismatch")
        a, b = self.terms, other.terms
        if len(a) > len(b):
            a, b = b, a
        terms: dict[tuple[int, ...], int] = {}
        for ea, ca in a.items():
            for eb, cb in b.items():
                exp = tuple(x + y for x, y in zip(ea, eb))
                c = terms.get(exp, 0) + ca * cb
                if c:
                    terms[exp] = c
                else:
                    terms.pop(exp, None)
        out = LaurentPoly.__new__(LaurentPoly)
        out.nvars = self.nvars
        out.terms = terms
        out._hash = None
        return out

    def __pow__(self, k: int) -> "LaurentPoly":
        if k < 0:
            if not self.is_monomial():
                raise NonLaurentResult("negative power of a non-monomial")
            exp, coef = self.leading()
            if coef * coef != 1:
                raise NonLaurentResult("negative power with non-unit coefficient")
            return LaurentPoly.monomial(tuple(k * e for e in exp), coef if k % 2 else 1)
        result = LaurentPoly.one(self.nvars)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def shift(self, exp: tuple[int, ...]) -> "LaurentPoly":
        """Multiply by the monomial with exponent vector ``exp``."""
        out = LaurentPoly.__new__(LaurentPoly)
        out.nvars = self.nvars
        out.terms = {tuple(x + y for x, y in zip(e, exp)): c for e, c in self.terms.items()}
        out._hash = None
        return out

    def exact_div(self, divisor: "LaurentPoly") -> "LaurentPoly":
        """Exact division by ``divisor``; raises :class:`NonLaurentResult` on failure.

        Works by repeatedly cancelling the graded-lex leading term.  For
        a true factorization the loop terminates with zero remainder;
        otherwise some leading coefficient fails to divide and we raise.
        """
        if divisor.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        if self.is_zero():
            return LaurentPoly.zero(self.nvars)
        lexp, lcoef = divisor.leading()
        rem = dict(self.terms)
        qterms: dict[tuple[int, ...], int] = {}
        div_items = list(divisor.terms.items())
        while rem:
            rexp = max(rem, key=_grlex_key)
            rcoef = rem[rexp]
            if rcoef % lcoef:
                raise NonLaurentResult("leading coefficient does not divide")
            qc = rcoef // lcoef
            qe = tuple(x - y for x, y in zip(rexp, lexp))
            qterms[qe] = qc
            for dexp, dcoef in div_items:
                e = tuple(x + y for x, y in zip(qe, dexp))
                c = rem.get(e, 0) - qc * dcoef
                if c:
                    rem[e] = c
                else:
                    rem.pop(e, None)
        return LaurentPoly(self.nvars, qterms)

    def divides(self, other: "LaurentPoly") -> bool:
        try:
            other.exact_div(self)
            return True
        except NonLaurentResult:
            return False

    # -- comparison ----------------------------------------------------

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, LaurentPoly)
            and self.nvars == other.nvars
            and self.terms == other.terms
        )

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self.terms.items())))
        return self._hash

    def sort_key(self) -> tuple:
        """Total-order key: graded lex on the sorted term list, ties by coefficient."""
        return tuple((sum(e), e, c) for e, c in self.sorted_terms())

    def __lt__(self, other: "LaurentPoly") -> bool:
        return self.sort_key() < other.sort_key()

    # -- io --------------------------------------------------------------

    def __repr__(self) -> str:
        return f"LaurentPoly({self})"

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for exp, coef in self.sorted_terms():
            factors = []
            for i, e in enumerate(exp):
                if e == 1:
                    factors.append(f"x{i + 1}")
                elif e:
                    factors.append(f"x{i + 1}^{e}")
            body = "*".join(factors)
            if not body:
                parts.append(f"{coef}")
            elif coef == 1:
                parts.append(body)
            elif coef == -1:
                parts.append(f"-{body}")
            else:
                parts.append(f"{coef}*{body}")
        out = " + ".join(parts)
        return out.replace("+ -", "- ")

    def to_json(self) -> dict:
        return {"terms": [{"exp": list(e), "coef": c} for e, c in self.sorted_terms()]}

    @classmethod
    def from_json(cls, nvars: int, data: Mapping) -> "LaurentPoly":
        return cls(nvars, {tuple(t["exp"]): int(t["coef"]) for t in data["terms"]})

"""Integer exchange matrices and their mutations.

An exchange matrix is an ``m x n`` integer matrix (``m >= n``) whose top
``n x n`` principal part is skew-symmetrizable.  Indices ``0..n-1`` are
mutable, ``n..m-1`` are frozen.  Values are immutable; mutation returns
a new matrix.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterable, Sequence


@dataclass(frozen=True)
class ExchangeMatrix:
    rows: int
    cols: int
    entries: tuple[tuple[int, ...], ...]

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], cols: int | None = None) -> "ExchangeMatrix":
        entries = tuple(tuple(int(x) for x in row) for row in rows)
        m = len(entries)
        n = cols if cols is not None else (len(entries[0]) if entries else 0)
        for row in entries:
            if len(row) != n:
                raise ValueError("ragged matrix")
        if m < n:
            raise ValueError("need rows >= cols")
        return cls(m, n, entries)

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.entries[i][j]

    @property
    def n(self) -> int:
        return self.cols

    @property
    def m(self) -> int:
        return self.rows

    def principal_part(self) -> "ExchangeMatrix":
        n = self.cols
        return ExchangeMatrix(n, n, tuple(row[:n] for row in self.entries[:n]))

    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_skew_symmetric(self) -> bool:
        n = self.cols
        return all(
            self.entries[i][j] == -self.entries[j][i] for i in range(n) for j in range(n)
        )

    def mutate(self, k: int) -> "ExchangeMatrix":
        """Matrix mutation at mutable index ``k`` (0-based).

        ``b'[i][j] = -b[i][j]`` if ``i == k`` or ``j == k``, else
        ``b[i][j] + (|b[i][k]| b[k][j] + b[i][k] |b[k][j]|) / 2``.
        """
        if not 0 <= k < self.cols:
            raise IndexError(f"mutation index {k} out of range [0, {self.cols})")
        b = self.entries
        new = []
        for i in range(self.rows):
            row = []
            for j in range(self.cols):
                if i == k or j == k:
                    row.append(-b[i][j])
                else:
                    row.append(b[i][j] + (abs(b[i][k]) * b[k][j] + b[i][k] * abs(b[k][j])) // 2)
            new.append(tuple(row))
        return ExchangeMatrix(self.rows, self.cols, tuple(new))

    def mutate_seq(self, ks: Iterable[int]) -> "ExchangeMatrix":
        out = self
        for k in ks:
            out = out.mutate(k)
        return out

    def permute(self, sigma: Sequence[int]) -> "ExchangeMatrix":
        """Relabel mutable indices: ``b'[i][j] = b[sigma(i)][sigma(j)]``.

        ``sigma`` is a permutation of ``0..n-1``; frozen rows keep their
        position and are permuted in their column index only.
        """
        n = self.cols
        new = []
        for i in range(self.rows):
            si = sigma[i] if i < n else i
            new.append(tuple(self.entries[si][sigma[j]] for j in range(n)))
        return ExchangeMatrix(self.rows, self.cols, tuple(new))

    def to_json(self) -> dict:
        return {"rows": self.rows, "cols": self.cols, "entries": [list(r) for r in self.entries]}

    @classmethod
    def from_json(cls, data: dict) -> "ExchangeMatrix":
        m = cls.from_rows(data["entries"], cols=data["cols"])
        if m.rows != data["rows"]:
            raise ValueError("row count mismatch")
        return m

    def __str__(self) -> str:
        return "[" + ", ".join("[" + ", ".join(map(str, row)) + "]" for row in self.entries) + "]"


def skew_symmetrizer(B: ExchangeMatrix) -> tuple[int, ...] | None:
    """Smallest positive integers ``d`` with ``diag(d) B^pr`` skew-symmetric.

    Ratios are propagated along the nonzero pattern of the principal
    part; each connected component is normalized to gcd 1 independently.
    Returns ``None`` when no symmetrizer exists.
    """
    n = B.cols
    b = B.entries
    # d[i] * b[i][j] == -d[j] * b[j][i] forces d[j]/d[i] = -b[i][j]/b[j][i].
    from fractions import Fraction

    d: list[Fraction | None] = [None] * n
    for start in range(n):
        if d[start] is not None:
            continue
        d[start] = Fraction(1)
        comp = [start]
        stack = [start]
        while stack:
            i = stack.pop()
            for j in range(n):
                if i == j:
                    continue
                bij, bji = b[i][j], b[j][i]
                if bij == 0 and bji == 0:
                    continue
                if bij == 0 or bji == 0 or bij * bji > 0:
                    return None  # sign pattern not skew-symmetrizable
                ratio = Fraction(-bij, bji)  # d[j] = d[i] * ratio > 0
                if d[j] is None:
                    d[j] = d[i] * ratio
                    comp.append(j)
                    stack.append(j)
                elif d[j] != d[i] * ratio:
                    return None
        denom = 1
        for i in comp:
            denom = denom * d[i].denominator // gcd(denom, d[i].denominator)
        vals = [int(d[i] * denom) for i in comp]
        g = 0
        for v in vals:
            g = gcd(g, v)
        for i, v in zip(comp, vals):
            d[i] = Fraction(v // g)
    # verify (also catches diagonal violations)
    dd = [int(x) for x in d]
    for i in range(n):
        for j in range(n):
            if dd[i] * b[i][j] != -dd[j] * b[j][i]:
                return None
    return tuple(dd)


def is_skew_symmetrizable(B: ExchangeMatrix) -> bool:
    return skew_symmetrizer(B) is not None


def is_acyclic(B: ExchangeMatrix) -> bool:
    """True iff there is no directed cycle ``b[j1][j2], ..., b[jl][j1] > 0``
    among mutable indices."""
    n = B.cols
    adj = {i: [j for j in range(n) if B.entries[i][j] > 0] for i in range(n)}
    WHITE, GRAY, BLACK = 0, 1, 2
    color = [WHITE] * n

    def dfs(i: int) -> bool:
        color[i] = GRAY
        for j in adj[i]:
            if color[j] == GRAY:
                return False
            if color[j] == WHITE and not dfs(j):
                return False
        color[i] = BLACK
        return True

    return all(color[i] != WHITE and True or dfs(i) for i in range(n))


def is_bipartite(B: ExchangeMatrix) -> tuple[tuple[int, ...], tuple[int, ...]] | None:
    """Source/sink split of the principal quiver, or None.

    Returns ``(sources, sinks)`` where every mutable index is a source
    (all nonzero ``b[i][j] > 0`` for mutable j) or a sink.
    """
    n = B.cols
    sources, sinks = [], []
    for i in range(n):
        out = [B.entries[i][j] for j in range(n) if B.entries[i][j] != 0]
        if all(x > 0 for x in out):
            sources.append(i)
        elif all(x < 0 for x in out):
            sinks.append(i)
        else:
            return None
    return tuple(sources), tuple(sinks)


def principal_extension(B: ExchangeMatrix) -> ExchangeMatrix:
    """Stack an identity block under the principal part (principal coefficients)."""
    n = B.cols
    rows = [row[:n] for row in B.entries[:n]]
    for i in range(n):
        rows.append(tuple(1 if j == i else 0 for j in range(n)))
    return ExchangeMatrix.from_rows(rows, cols=n)

"""Exact linear algebra over the Novikov field.

Matrices here represent quantum multiplication operators on the basis
omega^m, ..., omega, 1, so entries carry a grading constraint: with t
of degree 2N, the entry in row i, column j (0-indexed) can only be a
monomial c * t^d with N*d = i - j + 1.  Matrices may carry *unknown*
positions, entries whose t-power is pinned by the grading but whose
coefficient is not determined; such matrices refuse any computation
that would need the missing numbers.

The characteristic polynomial uses the Berkowitz algorithm: division
free, so it works verbatim over GF(2), and every call verifies its own
output by substituting the matrix back in (Cayley-Hamilton).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .novikov import CoefficientField, GradingContext, Novikov


class IncompleteMatrixError(ValueError):
    """Raised when arithmetic touches a matrix with unknown entries."""


class LambdaMatrix:
    """Square matrix of Novikov scalars, optionally with unknowns.

    entries: tuple of tuple of Novikov, rows first.
    basis: "omega" | "c" | "abstract"; power bases mean column j acts on
        the class generator^(size-1-j).
    grading: degree bookkeeping used to validate homogeneity.
    unknown: frozenset of (row, col, t_power), 0-indexed positions whose
        coefficient is undetermined; the stored entry there is zero.
    """

    __slots__ = ("entries", "basis", "grading", "unknown")

    def __init__(self, entries, basis="abstract", grading=None, unknown=frozenset()):
        rows = tuple(tuple(r) for r in entries)
        s = len(rows)
        if s == 0 or any(len(r) != s for r in rows):
            raise ValueError("matrix must be square and nonempty")
        field = rows[0][0].field
        for r in rows:
            for x in r:
                if not isinstance(x, Novikov) or x.field != field:
                    raise ValueError("all entries must share one coefficient field")
        unknown = frozenset(unknown)
        for (i, j, d) in unknown:
            if not (0 <= i < s and 0 <= j < s) or d < 0:
                raise ValueError(f"unknown position {(i, j, d)} out of range")
            if rows[i][j]:
                raise ValueError("unknown positions must hold a zero placeholder")
        self.entries = rows
        self.basis = basis
        self.grading = grading
        self.unknown = unknown
        if grading is not None:
            self._check_homogeneous()

    def _check_homogeneous(self):
        N = self.grading.N
        for i, row in enumerate(self.entries):
            for j, x in enumerate(row):
                if not x:
                    continue
                k = i - j + 1
                parts = x.monomial_parts()
                if parts is None:
                    raise ValueError(f"entry ({i}, {j}) is not a monomial")
                d = parts[1]
                if N * d != k:
                    raise ValueError(
                        f"entry ({i}, {j}) has t-power {d}, grading needs N*d = {k}"
                    )
        for (i, j, d) in self.unknown:
            if N * d != i - j + 1:
                raise ValueError(
                    f"unknown at ({i}, {j}) declares t-power {d}, "
                    f"grading needs N*d = {i - j + 1}"
                )

    # -- structure --------------------------------------------------------

    @property
    def size(self) -> int:
        return len(self.entries)

    @property
    def field(self) -> CoefficientField:
        return self.entries[0][0].field

    @property
    def is_complete(self) -> bool:
        return not self.unknown

    def _require_complete(self, what: str):
        if self.unknown:
            pos = sorted((i, j) for (i, j, _) in self.unknown)
            raise IncompleteMatrixError(
                f"{what} needs every entry; undetermined positions {pos}"
            )

    @classmethod
    def identity(cls, field: CoefficientField, s: int) -> "LambdaMatrix":
        one, zero = Novikov.one(field), Novikov.zero(field)
        return cls(
            tuple(
                tuple(one if i == j else zero for j in range(s)) for i in range(s)
            )
        )

    def __eq__(self, other):
        if not isinstance(other, LambdaMatrix):
            return NotImplemented
        return self.entries == other.entries and self.unknown == other.unknown

    def __hash__(self):
        return hash((self.entries, self.unknown))

    def __repr__(self):
        rows = "; ".join(", ".join(str(x) for x in r) for r in self.entries)
        return f"LambdaMatrix[{rows}]"

    def to_strings(self) -> list:
        """Entries as text, unknowns rendered '?*t^d'."""
        grid = [[str(x) for x in row] for row in self.entries]
        for (i, j, d) in self.unknown:
            grid[i][j] = "?*t" if d == 1 else f"?*t^{d}"
        return grid

    # -- arithmetic --------------------------------------------------------

    def __mul__(self, other):
        if not isinstance(other, LambdaMatrix):
            return NotImplemented
        self._require_complete("matrix product")
        other._require_complete("matrix product")
        if self.size != other.size:
            raise ValueError("size mismatch")
        s = self.size
        zero = Novikov.zero(self.field)
        rows = []
        for i in range(s):
            row = []
            for j in range(s):
                acc = zero
                for k in range(s):
                    acc = acc + self.entries[i][k] * other.entries[k][j]
                row.append(acc)
            rows.append(tuple(row))
        return LambdaMatrix(tuple(rows))

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative matrix powers are not needed here")
        out = LambdaMatrix.identity(self.field, self.size)
        for _ in range(k):
            out = out * self
        return out

    def apply(self, vec) -> tuple:
        self._require_complete("matrix-vector product")
        zero = Novikov.zero(self.field)
        out = []
        for i in range(self.size):
            acc = zero
            for k in range(self.size):
                acc = acc + self.entries[i][k] * vec[k]
            out.append(acc)
        return tuple(out)


@dataclass(frozen=True)
class CharPoly:
    """Monic characteristic polynomial lambda^s + a_1 lambda^(s-1) + ... + a_s."""

    size: int
    a: tuple  # (a_1, ..., a_s)

    @property
    def field(self) -> CoefficientField:
        return self.a[0].field

    def coefficients(self) -> tuple:
        """All coefficients, descending in lambda, leading 1 included."""
        return (Novikov.one(self.field),) + self.a

    def __str__(self):
        parts = ["L^%d" % self.size]
        for k, c in enumerate(self.a, start=1):
            if c:
                e = self.size - k
                gen = "" if e == 0 else ("*L" if e == 1 else f"*L^{e}")
                parts.append(f"({c}){gen}")
        return " + ".join(parts)


def char_poly(mat: LambdaMatrix) -> CharPoly:
    """Characteristic polynomial by the Berkowitz vector recurrence.

    Division free: only ring operations on the entries, so valid over
    GF(2) as well as over the rationals.  Before returning, the result
    is substituted back into the matrix and must annihilate it.
    """
    mat._require_complete("characteristic polynomial")
    s = mat.size
    field = mat.field
    one, zero = Novikov.one(field), Novikov.zero(field)
    E = mat.entries

    C = [one, -E[0][0]]
    for i in range(1, s):
        R = E[i][:i]
        S = [E[k][i] for k in range(i)]
        col = [one, -E[i][i]]
        vec = list(S)
        for step in range(i):
            acc = zero
            for k in range(i):
                acc = acc + R[k] * vec[k]
            col.append(-acc)
            if step < i - 1:
                vec = [
                    sum((E[p][q] * vec[q] for q in range(i)), zero) for p in range(i)
                ]
        newC = []
        for r in range(i + 2):
            acc = zero
            for c in range(min(r, i) + 1):
                if r - c < len(col):
                    acc = acc + col[r - c] * C[c]
            newC.append(acc)
        C = newC

    cp = CharPoly(s, tuple(C[1:]))
    # Cayley-Hamilton self-check: evaluate by Horner in the matrix
    acc = LambdaMatrix.identity(field, s)
    for k in range(1, s + 1):
        acc = acc * mat
        ak = cp.a[k - 1]
        acc = LambdaMatrix(
            tuple(
                tuple(
                    acc.entries[p][q] + (ak if p == q else zero)
                    for q in range(s)
                )
                for p in range(s)
            )
        )
    if any(x for row in acc.entries for x in row):
        raise ArithmeticError("characteristic polynomial failed to annihilate")
    return cp


def _rref(rows: list, ncols: int) -> tuple[list, list]:
    """In-place reduced row echelon form; returns (rows, pivot columns)."""
    r = 0
    pivots = []
    for c in range(ncols):
        pr = next((k for k in range(r, len(rows)) if rows[k][c]), None)
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        inv = rows[r][c].inverse()
        rows[r] = [x * inv for x in rows[r]]
        for k in range(len(rows)):
            if k != r and rows[k][c]:
                f = rows[k][c]
                rows[k] = [xk - f * xr for xk, xr in zip(rows[k], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows[:r], pivots


def rank(mat: LambdaMatrix) -> int:
    mat._require_complete("rank")
    rows = [list(r) for r in mat.entries]
    return len(_rref(rows, mat.size)[1])


def kernel(mat: LambdaMatrix) -> list:
    """Basis of the kernel, one vector per free column."""
    mat._require_complete("kernel")
    s = mat.size
    rows = [list(r) for r in mat.entries]
    red, pivots = _rref(rows, s)
    free = [c for c in range(s) if c not in pivots]
    zero, one = Novikov.zero(mat.field), Novikov.one(mat.field)
    basis = []
    for f in free:
        v = [zero] * s
        v[f] = one
        for r, p in enumerate(pivots):
            v[p] = -red[r][f]
        lead = next(x for x in v if x)
        inv = lead.inverse()
        basis.append(tuple(x * inv for x in v))
    return basis


def stabilization_index(mat: LambdaMatrix) -> int:
    """Least k with ker(mat^k) = ker(mat^(k+1))."""
    mat._require_complete("stabilization index")
    prev = 0
    k = 0
    power = LambdaMatrix.identity(mat.field, mat.size)
    while True:
        nxt = power * mat
        d = mat.size - rank(nxt)
        if d == prev:
            return k
        prev = d
        power = nxt
        k += 1


def stabilized_kernel(mat: LambdaMatrix) -> list:
    """Basis of the generalized kernel, ker(mat^k) at stabilization."""
    k = stabilization_index(mat)
    return kernel(mat ** k) if k else []


def jordan_zero_block_sizes(mat: LambdaMatrix) -> list:
    """Sizes of the Jordan blocks of eigenvalue zero, descending."""
    mat._require_complete("Jordan structure")
    dims = [0]
    power = LambdaMatrix.identity(mat.field, mat.size)
    while True:
        power = power * mat
        d = mat.size - rank(power)
        if d == dims[-1]:
            break
        dims.append(d)
    deltas = [dims[k + 1] - dims[k] for k in range(len(dims) - 1)]
    deltas.append(0)
    sizes = []
    for k in range(len(deltas) - 1, 0, -1):
        sizes.extend([k] * (deltas[k - 1] - deltas[k]))
    return sorted(sizes, reverse=True)


def image_power_rank(mat: LambdaMatrix, k: int) -> int:
    return rank(mat ** k)


def stable_relation(cp: CharPoly) -> tuple[int, tuple]:
    """Split the characteristic polynomial lambda^s + a_1 lambda^(s-1)
    + ... + a_s as lambda^(s-p) * (monic degree-p part with nonzero
    constant term).

    The degree-p factor presents the quotient by the generalized kernel
    of the operator; p = 0 means the operator is nilpotent and the
    quotient is the zero ring.  Returns (p, coefficients ascending,
    length p + 1, monic).
    """
    coeffs = list(cp.coefficients())  # descending, length s + 1
    p = 0
    for k in range(cp.size, 0, -1):
        if cp.a[k - 1]:
            p = k
            break
    rel = coeffs[: p + 1]  # lambda^s .. lambda^(s-p) coefficients
    return p, tuple(reversed(rel))

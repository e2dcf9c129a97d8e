"""Exact dense linear algebra and canonical submodule forms.

Everything is computed over a :class:`~liecert.rings.ScalarRing` with no
rounding.  Spans of row vectors are kept in a unique canonical form — reduced
row echelon form over the fields, row-style Hermite normal form over the
integers — so two submodules are equal as sets exactly when their stored
bases are identical.

Integer spans are genuine spans (subgroups of Z^n), never saturations:
``2*v`` belonging to a span does not make ``v`` a member.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import DimensionError, PreconditionError, RingError
from .rings import ScalarRing


def normalize_vector(ring: ScalarRing, v: Sequence) -> tuple:
    return tuple(ring.normalize(x) for x in v)


class Matrix:
    """Immutable dense matrix with entries in one ring.

    Rows may be zero (an empty generator list, a rank-0 endomorphism); the
    column count must then be passed explicitly so the ambient space stays
    known.
    """

    __slots__ = ("ring", "rows", "cols", "data")

    def __init__(self, ring: ScalarRing, data: Iterable[Sequence], cols: int | None = None):
        norm = [normalize_vector(ring, row) for row in data]
        nrows = len(norm)
        if nrows:
            ncols = len(norm[0])
            if any(len(r) != ncols for r in norm):
                raise DimensionError("ragged rows")
            if cols is not None and cols != ncols:
                raise DimensionError(f"expected {cols} columns, got {ncols}")
        else:
            if cols is None:
                raise DimensionError("a matrix with no rows needs an explicit column count")
            ncols = cols
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "rows", nrows)
        object.__setattr__(self, "cols", ncols)
        object.__setattr__(self, "data", tuple(norm))

    def __setattr__(self, name, value):
        raise AttributeError("Matrix is immutable")

    # -- constructors ---------------------------------------------------

    @classmethod
    def identity(cls, ring: ScalarRing, n: int) -> "Matrix":
        one, zero = ring.one, ring.zero
        return cls(ring, [[one if i == j else zero for j in range(n)] for i in range(n)], cols=n)

    @classmethod
    def zeros(cls, ring: ScalarRing, rows: int, cols: int) -> "Matrix":
        zero = ring.zero
        return cls(ring, [[zero] * cols for _ in range(rows)], cols=cols)

    @classmethod
    def stack(cls, a: "Matrix", b: "Matrix") -> "Matrix":
        if a.cols != b.cols or a.ring != b.ring:
            raise DimensionError("stack needs matching widths and rings")
        return cls(a.ring, list(a.data) + list(b.data), cols=a.cols)

    # -- basic queries ----------------------------------------------------

    def row(self, i: int) -> tuple:
        return self.data[i]

    def column(self, j: int) -> tuple:
        return tuple(r[j] for r in self.data)

    def is_zero(self) -> bool:
        ring = self.ring
        return all(ring.is_zero(x) for row in self.data for x in row)

    def is_square(self) -> bool:
        return self.rows == self.cols

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Matrix)
            and self.ring == other.ring
            and self.rows == other.rows
            and self.cols == other.cols
            and self.data == other.data
        )

    def __hash__(self):
        return hash((self.ring, self.rows, self.cols, self.data))

    def __repr__(self) -> str:
        body = "; ".join(" ".join(self.ring.format_scalar(x) for x in row) for row in self.data)
        return f"Matrix({self.ring}, {self.rows}x{self.cols}: {body})"

    # -- arithmetic -------------------------------------------------------

    def add(self, other: "Matrix") -> "Matrix":
        self._check_same_shape(other)
        ring = self.ring
        return Matrix(
            ring,
            [[ring.add(x, y) for x, y in zip(r, s)] for r, s in zip(self.data, other.data)],
            cols=self.cols,
        )

    def sub(self, other: "Matrix") -> "Matrix":
        self._check_same_shape(other)
        ring = self.ring
        return Matrix(
            ring,
            [[ring.sub(x, y) for x, y in zip(r, s)] for r, s in zip(self.data, other.data)],
            cols=self.cols,
        )

    def neg(self) -> "Matrix":
        ring = self.ring
        return Matrix(ring, [[ring.neg(x) for x in row] for row in self.data], cols=self.cols)

    def scale(self, c) -> "Matrix":
        ring = self.ring
        c = ring.normalize(c)
        return Matrix(ring, [[ring.mul(c, x) for x in row] for row in self.data], cols=self.cols)

    def mul(self, other: "Matrix") -> "Matrix":
        if self.ring != other.ring:
            raise RingError("mixed rings in matrix product")
        if self.cols != other.rows:
            raise DimensionError(f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        ring = self.ring
        cols_of_other = [other.column(j) for j in range(other.cols)]
        out = []
        for row in self.data:
            out_row = []
            for col in cols_of_other:
                acc = ring.zero
                for x, y in zip(row, col):
                    acc = ring.add(acc, ring.mul(x, y))
                out_row.append(acc)
            out.append(out_row)
        return Matrix(ring, out, cols=other.cols)

    def apply(self, v: Sequence) -> tuple:
        """Matrix-vector product ``self @ v`` (v a column vector)."""
        if len(v) != self.cols:
            raise DimensionError(f"vector of length {len(v)} against {self.rows}x{self.cols}")
        ring = self.ring
        v = normalize_vector(ring, v)
        out = []
        for row in self.data:
            acc = ring.zero
            for x, y in zip(row, v):
                acc = ring.add(acc, ring.mul(x, y))
            out.append(acc)
        return tuple(out)

    def power(self, k: int) -> "Matrix":
        if not self.is_square():
            raise DimensionError("powers of a non-square matrix")
        if k < 0:
            raise ValueError("negative matrix power")
        result = Matrix.identity(self.ring, self.rows)
        for _ in range(k):
            result = result.mul(self)
        return result

    def transpose(self) -> "Matrix":
        return Matrix(self.ring, [self.column(j) for j in range(self.cols)], cols=self.rows)

    def commutator(self, other: "Matrix") -> "Matrix":
        return self.mul(other).sub(other.mul(self))

    def _check_same_shape(self, other: "Matrix"):
        if self.ring != other.ring:
            raise RingError("mixed rings")
        if self.rows != other.rows or self.cols != other.cols:
            raise DimensionError("shape mismatch")


# ---------------------------------------------------------------------------
# Echelon kernels.
#
# Over the fields: reduced row echelon form with monic, leftmost pivots.
# Over the integers: row-style Hermite normal form with positive pivots and
# the entries above each pivot reduced into [0, pivot).  Both are unique for
# the row span, which is what makes submodule equality a tuple comparison.
# ---------------------------------------------------------------------------


def _xgcd(a: int, b: int):
    x, nx = 1, 0
    y, ny = 0, 1
    g, ng = a, b
    while ng:
        q = g // ng
        x, nx = nx, x - q * nx
        y, ny = ny, y - q * ny
        g, ng = ng, g - q * ng
    return x, y, g


def _rref(ring: ScalarRing, rows: list, width: int, pivot_limit: int | None = None):
    """In-place reduced row echelon form; returns the pivot columns.

    Pivot search is restricted to the first ``pivot_limit`` columns when
    given (used for kernel extraction on augmented matrices); row operations
    always act on full rows.
    """
    limit = width if pivot_limit is None else pivot_limit
    pivots = []
    r = 0
    for c in range(limit):
        pr = None
        for i in range(r, len(rows)):
            if not ring.is_zero(rows[i][c]):
                pr = i
                break
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        inv = ring.inv(rows[r][c])
        rows[r] = [ring.mul(inv, x) for x in rows[r]]
        for i in range(len(rows)):
            if i != r and not ring.is_zero(rows[i][c]):
                f = rows[i][c]
                rows[i] = [ring.sub(x, ring.mul(f, y)) for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return pivots


def _hnf(rows: list, width: int, pivot_limit: int | None = None):
    """In-place row Hermite normal form over the integers; returns pivots.

    Entries above a pivot are reduced as soon as the pivot is fixed, which
    keeps intermediate entries small without a separate normalization pass.
    """
    limit = width if pivot_limit is None else pivot_limit
    pivots = []
    r = 0
    for c in range(limit):
        pr = None
        for i in range(r, len(rows)):
            if rows[i][c] != 0:
                pr = i
                break
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        for i in range(r + 1, len(rows)):
            b = rows[i][c]
            if b == 0:
                continue
            a = rows[r][c]
            if b % a == 0:
                q = b // a
                rows[i] = [u - q * v for u, v in zip(rows[i], rows[r])]
            elif a % b == 0:
                rows[r], rows[i] = rows[i], rows[r]
                q = a // b
                rows[i] = [u - q * v for u, v in zip(rows[i], rows[r])]
            else:
                x, y, g = _xgcd(a, b)
                ag, mbg = a // g, -(b // g)
                new_r = [x * u + y * v for u, v in zip(rows[r], rows[i])]
                new_i = [mbg * u + ag * v for u, v in zip(rows[r], rows[i])]
                rows[r], rows[i] = new_r, new_i
        if rows[r][c] < 0:
            rows[r] = [-u for u in rows[r]]
        a = rows[r][c]
        for i in range(r):
            q = rows[i][c] // a
            if q:
                rows[i] = [u - q * v for u, v in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return pivots


def _echelon(ring: ScalarRing, rows: list, width: int, pivot_limit: int | None = None):
    if ring.is_field:
        return _rref(ring, rows, width, pivot_limit)
    return _hnf(rows, width, pivot_limit)


class Submodule:
    """A span of row vectors in ring^n, stored in its unique canonical form.

    Over the integers this is the Hermite-basis of the generated subgroup —
    the span itself, not its saturation.
    """

    __slots__ = ("ring", "ambient", "basis", "pivots")

    def __init__(self, ring: ScalarRing, ambient: int, basis_rows: Sequence[tuple], pivots: Sequence[int]):
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "ambient", ambient)
        object.__setattr__(self, "basis", tuple(basis_rows))
        object.__setattr__(self, "pivots", tuple(pivots))

    def __setattr__(self, name, value):
        raise AttributeError("Submodule is immutable")

    @classmethod
    def zero(cls, ring: ScalarRing, ambient: int) -> "Submodule":
        return cls(ring, ambient, (), ())

    @classmethod
    def full(cls, ring: ScalarRing, ambient: int) -> "Submodule":
        return canonicalize(Matrix.identity(ring, ambient))

    @classmethod
    def span(cls, ring: ScalarRing, rows: Iterable[Sequence], ambient: int) -> "Submodule":
        return canonicalize(Matrix(ring, [normalize_vector(ring, r) for r in rows], cols=ambient))

    @property
    def rank(self) -> int:
        return len(self.basis)

    def is_zero(self) -> bool:
        return not self.basis

    def is_full(self) -> bool:
        return self.rank == self.ambient

    def basis_matrix(self) -> Matrix:
        return Matrix(self.ring, self.basis, cols=self.ambient)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Submodule)
            and self.ring == other.ring
            and self.ambient == other.ambient
            and self.basis == other.basis
        )

    def __hash__(self):
        return hash((self.ring, self.ambient, self.basis))

    def __repr__(self) -> str:
        rows = "; ".join(" ".join(self.ring.format_scalar(x) for x in r) for r in self.basis)
        return f"Submodule({self.ring}, ambient={self.ambient}, basis=[{rows}])"

    # -- membership -----------------------------------------------------

    def coordinates(self, v: Sequence):
        """Coefficients of ``v`` over the canonical basis, or None.

        Back-substitution against the echelon form; over the integers the
        coefficient at each pivot must divide exactly or ``v`` is outside
        the span.
        """
        if len(v) != self.ambient:
            raise DimensionError(f"vector of length {len(v)} in ambient rank {self.ambient}")
        ring = self.ring
        work = list(normalize_vector(ring, v))
        coeffs = []
        for row, c in zip(self.basis, self.pivots):
            q = ring.exact_div(work[c], row[c])
            if q is None:
                return None
            if not ring.is_zero(q):
                work = [ring.sub(x, ring.mul(q, y)) for x, y in zip(work, row)]
            coeffs.append(q)
        if any(not ring.is_zero(x) for x in work):
            return None
        return tuple(coeffs)

    def contains(self, v: Sequence) -> bool:
        return self.coordinates(v) is not None

    def __contains__(self, v) -> bool:
        return self.contains(v)

    def contains_submodule(self, other: "Submodule") -> bool:
        self._check_compatible(other)
        return all(self.contains(row) for row in other.basis)

    def __le__(self, other: "Submodule") -> bool:
        return other.contains_submodule(self)

    # -- lattice operations ----------------------------------------------

    def sum(self, other: "Submodule") -> "Submodule":
        self._check_compatible(other)
        rows = list(self.basis) + list(other.basis)
        return Submodule.span(self.ring, rows, self.ambient)

    def intersect(self, other: "Submodule") -> "Submodule":
        """Zassenhaus-style meet: echelonize rows (u|u) and (w|0); rows whose
        left half vanished carry a basis of the intersection in their right
        half.  Works verbatim for integer lattices thanks to unimodularity of
        the Hermite reduction."""
        self._check_compatible(other)
        ring, n = self.ring, self.ambient
        zero_half = [ring.zero] * n
        rows = [list(u) + list(u) for u in self.basis]
        rows += [list(w) + zero_half for w in other.basis]
        _echelon(ring, rows, 2 * n)
        kept = [tuple(r[n:]) for r in rows if all(ring.is_zero(x) for x in r[:n])]
        kept = [r for r in kept if any(not ring.is_zero(x) for x in r)]
        return Submodule.span(ring, kept, n)

    def __add__(self, other):
        return self.sum(other)

    def __and__(self, other):
        return self.intersect(other)

    def _check_compatible(self, other: "Submodule"):
        if self.ring != other.ring:
            raise RingError("mixed rings")
        if self.ambient != other.ambient:
            raise DimensionError("ambient rank mismatch")


def canonicalize(generators: Matrix) -> Submodule:
    """Unique canonical basis of the row span of ``generators``."""
    ring = generators.ring
    rows = [list(r) for r in generators.data]
    pivots = _echelon(ring, rows, generators.cols)
    basis = [tuple(r) for r in rows[: len(pivots)]]
    return Submodule(ring, generators.cols, basis, pivots)


def membership(s: Submodule, v: Sequence) -> bool:
    return s.contains(v)


def submodule_sum(a: Submodule, b: Submodule) -> Submodule:
    return a.sum(b)


def submodule_intersect(a: Submodule, b: Submodule) -> Submodule:
    return a.intersect(b)


def kernel(m: Matrix) -> Submodule:
    """Canonical basis of ``{v : m @ v = 0}``.

    Computed from the row transform of an echelon reduction of ``m^T``
    augmented with the identity: the reduction is invertible (unimodular over
    the integers), so the transform rows facing a zero echelon row form a
    basis of the kernel — over the integers the *full* kernel lattice, which
    is automatically saturated.
    """
    ring = m.ring
    b = m.transpose()  # cols x rows; v @ (m^T) = 0  <=>  m @ v = 0
    n, r = b.rows, b.cols
    ident = Matrix.identity(ring, n)
    rows = [list(br) + list(ir) for br, ir in zip(b.data, ident.data)]
    if not rows:
        return Submodule.zero(ring, 0)
    _echelon(ring, rows, r + n, pivot_limit=r)
    kept = [tuple(row[r:]) for row in rows if all(ring.is_zero(x) for x in row[:r])]
    return Submodule.span(ring, kept, n)


def image(m: Matrix) -> Submodule:
    """Canonical column span of ``m``, living in the codomain ring^rows."""
    return canonicalize(m.transpose())


def invert(m: Matrix) -> Matrix:
    """Inverse of a square matrix over a field (Gauss-Jordan on [m | I])."""
    if not m.is_square():
        raise DimensionError("only square matrices invert")
    ring = m.ring
    if not ring.is_field:
        raise PreconditionError("matrix inversion is supported over fields only")
    n = m.rows
    aug = [list(row) + list(idrow) for row, idrow in zip(m.data, Matrix.identity(ring, n).data)]
    pivots = _rref(ring, aug, 2 * n, pivot_limit=n)
    if len(pivots) != n:
        raise PreconditionError("matrix is singular")
    return Matrix(ring, [row[n:] for row in aug], cols=n)


@dataclass(frozen=True)
class EndoNilpotency:
    """Verdict for ``m^k = 0``: least exponent, or the refuting power m^n."""

    nilpotent: bool
    index: int | None
    refutation_power: Matrix | None


def is_nilpotent_endo(m: Matrix) -> EndoNilpotency:
    """Least ``k <= n`` with ``m^k = 0``, or a refutation.

    The bound ``n`` (the ambient rank) is enough: over the supported rings
    the space embeds in a vector space over the fraction field, where a
    nilpotent operator has index at most its dimension.
    """
    if not m.is_square():
        raise DimensionError("nilpotency is a question about square matrices")
    n = m.rows
    if n == 0:
        return EndoNilpotency(True, 0, None)
    power = Matrix.identity(m.ring, n)
    for k in range(1, n + 1):
        power = power.mul(m)
        if power.is_zero():
            return EndoNilpotency(True, k, None)
    return EndoNilpotency(False, None, power)

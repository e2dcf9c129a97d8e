"""Lie algebras and Lie modules given by structure constants and action matrices.

An algebra stores its bracket table sparsely, only for index pairs ``i < j``;
``[e_i, e_i] = 0`` and ``[e_j, e_i] = -[e_i, e_j]`` are derived from the
representation rather than stored.  That makes alternation hold structurally
even over GF(2), where antisymmetry alone would not imply it.

Axioms are checked on basis tuples; bilinearity extends them to everything
else.  Validation never fails fast — reports enumerate all violated tuples so
hand-written input files get actionable diagnostics.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

from .errors import DimensionError, PreconditionError, RingError, ValidationError
from .linalg import Matrix, Submodule, normalize_vector
from .rings import ScalarRing


@dataclass(frozen=True)
class Violation:
    """One failed axiom instance: the basis tuple plus both evaluated sides."""

    indices: tuple
    lhs: object
    rhs: object


@dataclass(frozen=True)
class ValidationReport:
    kind: str  # "algebra" or "module"
    passed: bool
    violations: tuple

    def summary(self) -> str:
        if self.passed:
            return f"{self.kind} axioms hold"
        shown = ", ".join(str(v.indices) for v in self.violations[:5])
        more = "" if len(self.violations) <= 5 else f" (+{len(self.violations) - 5} more)"
        return f"{self.kind} axioms violated at {shown}{more}"


def _normalize_constants(ring: ScalarRing, rank: int, constants: Mapping) -> dict:
    table = {}
    for (i, j), vec in constants.items():
        if not (0 <= i < j < rank):
            raise DimensionError(f"bracket key ({i}, {j}) must satisfy 0 <= i < j < rank")
        v = normalize_vector(ring, vec)
        if len(v) != rank:
            raise DimensionError(f"constant vector for ({i}, {j}) has length {len(v)}, want {rank}")
        if any(not ring.is_zero(x) for x in v):
            table[(i, j)] = v
    return table


class LieAlgebra:
    """Finite-rank Lie algebra over an exact ring, presented on a basis."""

    __slots__ = ("ring", "rank", "basis_names", "constants")

    def __init__(
        self,
        ring: ScalarRing,
        rank: int,
        constants: Mapping,
        basis_names: Sequence[str] | None = None,
        check: bool = True,
    ):
        table = _normalize_constants(ring, rank, constants)
        names = tuple(basis_names) if basis_names is not None else tuple(f"b{i}" for i in range(rank))
        if len(names) != rank:
            raise DimensionError("need one basis name per basis element")
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "rank", rank)
        object.__setattr__(self, "basis_names", names)
        object.__setattr__(self, "constants", table)
        if check:
            report = validate_algebra(ring, rank, table)
            if not report.passed:
                raise ValidationError(report)

    def __setattr__(self, name, value):
        raise AttributeError("LieAlgebra is immutable")

    def zero_vector(self) -> tuple:
        return tuple([self.ring.zero] * self.rank)

    def basis_vector(self, i: int) -> tuple:
        return tuple(self.ring.one if k == i else self.ring.zero for k in range(self.rank))

    def bracket_basis(self, i: int, j: int) -> tuple:
        """[e_i, e_j], with antisymmetry and alternation derived."""
        if i == j:
            return self.zero_vector()
        if i < j:
            return self.constants.get((i, j), self.zero_vector())
        vec = self.constants.get((j, i))
        if vec is None:
            return self.zero_vector()
        ring = self.ring
        return tuple(ring.neg(x) for x in vec)

    def bracket(self, x: Sequence, y: Sequence) -> tuple:
        """Bilinear extension of the structure constants."""
        ring = self.ring
        x = normalize_vector(ring, x)
        y = normalize_vector(ring, y)
        if len(x) != self.rank or len(y) != self.rank:
            raise DimensionError("element length does not match algebra rank")
        acc = [ring.zero] * self.rank
        for (i, j), vec in self.constants.items():
            coef = ring.sub(ring.mul(x[i], y[j]), ring.mul(x[j], y[i]))
            if not ring.is_zero(coef):
                for k in range(self.rank):
                    acc[k] = ring.add(acc[k], ring.mul(coef, vec[k]))
        return tuple(acc)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, LieAlgebra)
            and self.ring == other.ring
            and self.rank == other.rank
            and self.constants == other.constants
        )

    def __hash__(self):
        return hash((self.ring, self.rank, tuple(sorted(self.constants.items()))))

    def __repr__(self) -> str:
        return f"LieAlgebra({self.ring}, rank={self.rank}, {len(self.constants)} bracket entries)"


def _bracket_basis_with_vector(alg_like, i: int, v: tuple, ring: ScalarRing, rank: int) -> tuple:
    """[e_i, v] for a raw constants accessor; used during validation."""
    acc = [ring.zero] * rank
    for j in range(rank):
        c = v[j]
        if ring.is_zero(c):
            continue
        vec = alg_like(i, j)
        for k in range(rank):
            acc[k] = ring.add(acc[k], ring.mul(c, vec[k]))
    return tuple(acc)


def validate_algebra(ring: ScalarRing, rank: int, constants: Mapping) -> ValidationReport:
    """Check the Leibniz identity on every ordered basis triple.

    Alternation holds by the i < j storage discipline, so the table is a Lie
    algebra exactly when every triple (i, j, k) satisfies
    ``[e_i,[e_j,e_k]] = [[e_i,e_j],e_k] + [e_j,[e_i,e_k]]``.
    """
    table = _normalize_constants(ring, rank, constants)
    zero = tuple([ring.zero] * rank)

    def bb(i, j):
        if i == j:
            return zero
        if i < j:
            return table.get((i, j), zero)
        vec = table.get((j, i))
        return zero if vec is None else tuple(ring.neg(x) for x in vec)

    violations = []
    for i in range(rank):
        for j in range(rank):
            for k in range(rank):
                lhs = _bracket_basis_with_vector(bb, i, bb(j, k), ring, rank)
                w = bb(i, j)
                first = _bracket_basis_with_vector(bb, k, w, ring, rank)
                first = tuple(ring.neg(x) for x in first)  # [w, e_k] = -[e_k, w]
                second = _bracket_basis_with_vector(bb, j, bb(i, k), ring, rank)
                rhs = tuple(ring.add(a, b) for a, b in zip(first, second))
                if lhs != rhs:
                    violations.append(Violation((i, j, k), lhs, rhs))
    return ValidationReport("algebra", not violations, tuple(violations))


class LieModule:
    """Finite-rank module of a Lie algebra: one action matrix per basis element."""

    __slots__ = ("algebra", "rank", "action")

    def __init__(self, algebra: LieAlgebra, rank: int, action: Sequence[Matrix], check: bool = True):
        action = tuple(action)
        if len(action) != algebra.rank:
            raise DimensionError("need one action matrix per algebra basis element")
        for a in action:
            if a.ring != algebra.ring:
                raise RingError("action matrix over the wrong ring")
            if a.rows != rank or a.cols != rank:
                raise DimensionError(f"action matrices must be {rank}x{rank}")
        object.__setattr__(self, "algebra", algebra)
        object.__setattr__(self, "rank", rank)
        object.__setattr__(self, "action", action)
        if check:
            report = validate_module(algebra, rank, action)
            if not report.passed:
                raise ValidationError(report)

    def __setattr__(self, name, value):
        raise AttributeError("LieModule is immutable")

    @property
    def ring(self) -> ScalarRing:
        return self.algebra.ring

    def zero_vector(self) -> tuple:
        return tuple([self.ring.zero] * self.rank)

    def to_endomorphism(self, x: Sequence) -> Matrix:
        """The matrix of ``m -> [x, m]``: the x-weighted sum of the action matrices."""
        ring = self.ring
        x = normalize_vector(ring, x)
        if len(x) != self.algebra.rank:
            raise DimensionError("element length does not match algebra rank")
        out = Matrix.zeros(ring, self.rank, self.rank)
        for coef, mat in zip(x, self.action):
            if not ring.is_zero(coef):
                out = out.add(mat.scale(coef))
        return out

    def act(self, x: Sequence, v: Sequence) -> tuple:
        return self.to_endomorphism(x).apply(v)

    def __repr__(self) -> str:
        return f"LieModule(rank={self.rank} over {self.algebra!r})"


def validate_module(algebra: LieAlgebra, rank: int, action: Sequence[Matrix]) -> ValidationReport:
    """Check the commutator identity on every basis pair i < j.

    Bilinearity holds by the matrix representation, so the action is a Lie
    module action exactly when ``phi([e_i,e_j]) = phi_i phi_j - phi_j phi_i``.
    """
    ring = algebra.ring
    violations = []
    for i in range(algebra.rank):
        for j in range(i + 1, algebra.rank):
            lhs = Matrix.zeros(ring, rank, rank)
            for coef, mat in zip(algebra.bracket_basis(i, j), action):
                if not ring.is_zero(coef):
                    lhs = lhs.add(mat.scale(coef))
            rhs = action[i].commutator(action[j])
            if lhs != rhs:
                violations.append(Violation((i, j), lhs, rhs))
    return ValidationReport("module", not violations, tuple(violations))


def adjoint(algebra: LieAlgebra) -> LieModule:
    """The algebra acting on itself by ``ad_x(y) = [x, y]``."""
    ring, n = algebra.ring, algebra.rank
    mats = []
    for k in range(n):
        cols = [algebra.bracket_basis(k, j) for j in range(n)]
        mats.append(Matrix(ring, [[cols[j][i] for j in range(n)] for i in range(n)], cols=n))
    return LieModule(algebra, n, mats)


def subalgebra_on_carrier(
    algebra: LieAlgebra, carrier: Submodule, basis_names: Sequence[str] | None = None
) -> LieAlgebra:
    """Present a bracket-closed carrier as a Lie algebra on its canonical basis.

    Raises when the carrier is not closed under the bracket.
    """
    if carrier.ring != algebra.ring or carrier.ambient != algebra.rank:
        raise DimensionError("carrier does not live in the algebra's ambient space")
    rows = carrier.basis
    constants = {}
    for i in range(len(rows)):
        for j in range(i + 1, len(rows)):
            w = algebra.bracket(rows[i], rows[j])
            coords = carrier.coordinates(w)
            if coords is None:
                raise PreconditionError(
                    f"carrier is not bracket-closed: [row {i}, row {j}] falls outside the span"
                )
            constants[(i, j)] = coords
    names = basis_names
    if names is None:
        names = tuple(f"k{i}" for i in range(len(rows)))
    return LieAlgebra(algebra.ring, len(rows), constants, basis_names=names)


def restrict_module(mod: LieModule, carrier: Submodule) -> LieModule:
    """The same underlying space, acted on by the subalgebra the carrier spans."""
    sub = subalgebra_on_carrier(mod.algebra, carrier)
    mats = [mod.to_endomorphism(row) for row in carrier.basis]
    return LieModule(sub, mod.rank, mats)

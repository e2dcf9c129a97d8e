"""Lie submodules, ideals, lower central series, quotients and normalizers.

The lower central series drives the nilpotency decision: iterate
``C_{k+1} = [L, C_k]`` from the full module.  The chain either hits zero
(nilpotent, with the chain as a replayable certificate) or stalls at a
nonzero term (not nilpotent, with the stalled term as certificate).

Stalling is detected by rank: the terms are nested, so ranks are
non-increasing, and a repeated nonzero rank pins the rational span of every
later term — over a field that is literally term equality, while over the
integers the chain of spans may keep shrinking by index (e.g. doubling
forever) without ever changing rank or reaching zero.  Rank detection makes
the loop halt within rank(M) + 1 steps on every valid module.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DimensionError, InternalCheckError, PreconditionError
from .liealg import LieAlgebra, LieModule, subalgebra_on_carrier
from .linalg import Matrix, Submodule, kernel

TERMINATED = "terminated"
STABILIZED = "stabilized"


class LieSubmodule:
    """A submodule of a Lie module, invariant under the whole algebra action."""

    __slots__ = ("module", "carrier")

    def __init__(self, module: LieModule, carrier: Submodule, check: bool = True):
        if carrier.ring != module.ring or carrier.ambient != module.rank:
            raise DimensionError("carrier does not live in the module's ambient space")
        if check:
            _check_invariance(module.action, carrier, what="Lie submodule")
        object.__setattr__(self, "module", module)
        object.__setattr__(self, "carrier", carrier)

    def __setattr__(self, name, value):
        raise AttributeError("LieSubmodule is immutable")

    @classmethod
    def top(cls, module: LieModule) -> "LieSubmodule":
        return cls(module, Submodule.full(module.ring, module.rank), check=False)

    @classmethod
    def bottom(cls, module: LieModule) -> "LieSubmodule":
        return cls(module, Submodule.zero(module.ring, module.rank), check=False)

    @property
    def rank(self) -> int:
        return self.carrier.rank

    def is_zero(self) -> bool:
        return self.carrier.is_zero()

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, LieSubmodule)
            and self.module is other.module
            and self.carrier == other.carrier
        )

    def __hash__(self):
        return hash(self.carrier)

    def __repr__(self) -> str:
        return f"LieSubmodule(rank={self.rank} of module rank {self.module.rank})"


class LieIdeal:
    """A submodule of the algebra with ``[L, I] <= I``."""

    __slots__ = ("algebra", "carrier")

    def __init__(self, algebra: LieAlgebra, carrier: Submodule, check: bool = True):
        if carrier.ring != algebra.ring or carrier.ambient != algebra.rank:
            raise DimensionError("carrier does not live in the algebra's ambient space")
        if check:
            for k in range(algebra.rank):
                ek = algebra.basis_vector(k)
                for row in carrier.basis:
                    if not carrier.contains(algebra.bracket(ek, row)):
                        raise PreconditionError(
                            f"not an ideal: [e_{k}, carrier row] escapes the carrier"
                        )
        object.__setattr__(self, "algebra", algebra)
        object.__setattr__(self, "carrier", carrier)

    def __setattr__(self, name, value):
        raise AttributeError("LieIdeal is immutable")

    @classmethod
    def top(cls, algebra: LieAlgebra) -> "LieIdeal":
        return cls(algebra, Submodule.full(algebra.ring, algebra.rank), check=False)

    @property
    def rank(self) -> int:
        return self.carrier.rank

    def __repr__(self) -> str:
        return f"LieIdeal(rank={self.rank} of algebra rank {self.algebra.rank})"


def _check_invariance(action, carrier: Submodule, what: str):
    for k, mat in enumerate(action):
        for row in carrier.basis:
            if not carrier.contains(mat.apply(row)):
                raise InternalCheckError(
                    f"{what} invariance failed: action[{k}] moves a basis row outside the carrier"
                )


def ideal_bracket(ideal: LieIdeal, sub: LieSubmodule) -> LieSubmodule:
    """[I, N]: the span of brackets of ideal generators with submodule generators.

    Because I is an ideal and N is invariant, that span is already invariant
    under the whole algebra (Leibniz), so no closure iteration is needed; the
    result is re-verified and a failure flags a non-ideal input that slipped
    through.
    """
    mod = sub.module
    if ideal.algebra != mod.algebra:
        raise DimensionError("ideal and submodule belong to different algebras")
    gens = []
    for g in ideal.carrier.basis:
        endo = mod.to_endomorphism(g)
        for v in sub.carrier.basis:
            gens.append(endo.apply(v))
    carrier = Submodule.span(mod.ring, gens, mod.rank)
    _check_invariance(mod.action, carrier, what="ideal bracket")
    return LieSubmodule(mod, carrier, check=False)


@dataclass(frozen=True)
class LcsChain:
    """The computed lower central series with its verdict.

    ``terminated`` at k: terms[k] is zero — the module is nilpotent of class k.
    ``stabilized`` at k: terms[k] and terms[k+1] share a nonzero rank, so no
    later term can vanish.
    """

    terms: tuple
    kind: str
    index: int

    @property
    def terminated(self) -> bool:
        return self.kind == TERMINATED

    def last_nonzero(self) -> LieSubmodule:
        if self.terminated:
            if self.index == 0:
                raise PreconditionError("a zero module has no nonzero series term")
            return self.terms[self.index - 1]
        return self.terms[self.index]


def _series(bracket_step, top: LieSubmodule) -> LcsChain:
    terms = [top]
    while True:
        cur = terms[-1]
        if cur.is_zero():
            return LcsChain(tuple(terms), TERMINATED, len(terms) - 1)
        nxt = bracket_step(cur)
        terms.append(nxt)
        if nxt.is_zero():
            return LcsChain(tuple(terms), TERMINATED, len(terms) - 1)
        if nxt.rank == cur.rank:
            return LcsChain(tuple(terms), STABILIZED, len(terms) - 2)


def lower_central_series(mod: LieModule) -> LcsChain:
    top_ideal = LieIdeal.top(mod.algebra)
    return _series(lambda n: ideal_bracket(top_ideal, n), LieSubmodule.top(mod))


def relative_lcs(ideal: LieIdeal, mod: LieModule, k: int) -> LieSubmodule:
    """The k-th term of the series driven by ``[I, -]`` instead of ``[L, -]``."""
    term = LieSubmodule.top(mod)
    for _ in range(k):
        term = ideal_bracket(ideal, term)
    return term


@dataclass(frozen=True)
class NilpotencyResult:
    nilpotent: bool
    chain: LcsChain

    @property
    def certificate_term(self) -> LieSubmodule:
        """Stalled nonzero term for the negative verdict."""
        if self.nilpotent:
            raise PreconditionError("nilpotent modules have no stalled term")
        return self.chain.terms[self.chain.index]


def is_nilpotent(mod: LieModule) -> NilpotencyResult:
    chain = lower_central_series(mod)
    return NilpotencyResult(chain.terminated, chain)


def verify_chain(mod: LieModule, chain: LcsChain) -> bool:
    """Replay a chain certificate from scratch.

    A terminated chain must walk from the full module to zero by ideal
    brackets; a stabilized one must end with two nested nonzero terms of
    equal rank (equal as sets over a field).
    """
    top_ideal = LieIdeal.top(mod.algebra)
    if chain.terms[0].carrier != Submodule.full(mod.ring, mod.rank):
        return False
    for prev, cur in zip(chain.terms, chain.terms[1:]):
        if ideal_bracket(top_ideal, prev).carrier != cur.carrier:
            return False
        if not prev.carrier.contains_submodule(cur.carrier):
            return False
    if chain.terminated:
        return chain.terms[chain.index].is_zero() and chain.index == len(chain.terms) - 1
    a, b = chain.terms[chain.index], chain.terms[chain.index + 1]
    if a.is_zero() or b.is_zero() or a.rank != b.rank:
        return False
    if mod.ring.is_field and a.carrier != b.carrier:
        return False
    return True


def max_triv_submodule(mod: LieModule) -> LieSubmodule:
    """Largest submodule killed by every algebra element.

    By linearity in x this is the intersection of the kernels of the basis
    action matrices.
    """
    space = Submodule.full(mod.ring, mod.rank)
    for mat in mod.action:
        space = space.intersect(kernel(mat))
    return LieSubmodule(mod, space, check=False)


def nontrivial_max_triv_witness(mod: LieModule) -> tuple:
    """A nonzero vector killed by the whole algebra, from the last nonzero
    series term of a nilpotent module."""
    if mod.rank == 0:
        raise PreconditionError("the zero module has no nonzero vectors")
    result = is_nilpotent(mod)
    if not result.nilpotent:
        raise PreconditionError("witness extraction needs a nilpotent module")
    witness = result.chain.last_nonzero().carrier.basis[0]
    for mat in mod.action:
        if any(not mod.ring.is_zero(x) for x in mat.apply(witness)):
            raise InternalCheckError("series witness is not annihilated by the action")
    return witness


@dataclass(frozen=True)
class QuotientModule:
    """A complement-basis presentation of ``base / denominator``.

    ``projection @ section`` is the identity on the presentation, and the
    induced action matrices are ``projection @ phi @ section`` for the acting
    basis.  Fields only: integer quotients may carry torsion, which this
    presentation cannot express.
    """

    base: LieModule
    denominator: Submodule
    module: LieModule
    projection: Matrix
    section: Matrix
    acting_carrier: Submodule | None

    @property
    def rank(self) -> int:
        return self.module.rank


def quotient(mod: LieModule, denominator, acting: Submodule | None = None) -> QuotientModule:
    """Quotient of a Lie module by an invariant submodule, over a field.

    ``acting`` restricts the acting algebra to a bracket-closed carrier; the
    denominator only needs to be invariant under that restricted action (the
    full algebra when ``acting`` is omitted).
    """
    ring = mod.ring
    if not ring.is_field:
        raise PreconditionError("quotients are supported over field coefficients only")
    den = denominator.carrier if isinstance(denominator, LieSubmodule) else denominator
    if den.ring != ring or den.ambient != mod.rank:
        raise DimensionError("denominator does not live in the module's ambient space")

    if acting is None:
        acting_alg, acting_mats = mod.algebra, list(mod.action)
    else:
        acting_alg = subalgebra_on_carrier(mod.algebra, acting)
        acting_mats = [mod.to_endomorphism(row) for row in acting.basis]

    for k, mat in enumerate(acting_mats):
        for row in den.basis:
            if not den.contains(mat.apply(row)):
                raise PreconditionError(
                    f"denominator is not invariant under acting basis element {k}"
                )

    m = mod.rank
    pivot_set = set(den.pivots)
    complement = [c for c in range(m) if c not in pivot_set]
    q = len(complement)

    # projection: reduce a vector by the denominator's echelon basis, then
    # read off the complement coordinates.
    proj_cols = []
    for s in range(m):
        work = [ring.one if t == s else ring.zero for t in range(m)]
        for row, c in zip(den.basis, den.pivots):
            f = work[c]
            if not ring.is_zero(f):
                work = [ring.sub(x, ring.mul(f, y)) for x, y in zip(work, row)]
        proj_cols.append([work[c] for c in complement])
    projection = Matrix(ring, [[proj_cols[s][t] for s in range(m)] for t in range(q)], cols=m)
    section = Matrix(
        ring,
        [[ring.one if complement[t] == s else ring.zero for t in range(q)] for s in range(m)],
        cols=q,
    )

    induced = [projection.mul(a).mul(section) for a in acting_mats]
    q_module = LieModule(acting_alg, q, induced)
    return QuotientModule(mod, den, q_module, projection, section, acting)


def normalizer(algebra: LieAlgebra, h: Submodule) -> Submodule:
    """{x : [x, h_i] in span(h) for every basis row h_i}.

    The membership conditions are encoded by augmenting with the span's own
    generators: solve ``B_i x = H^T y_i`` jointly and project the solution
    space onto the x block.  The same encoding is exact over the integers,
    where annihilator tricks would silently saturate.
    """
    if h.ring != algebra.ring or h.ambient != algebra.rank:
        raise DimensionError("subspace does not live in the algebra's ambient space")
    ring, n = algebra.ring, algebra.rank
    s = h.rank
    if s == 0:
        return Submodule.full(ring, n)

    # One block row of equations per carrier basis row h_i.
    rows = []
    for i, hrow in enumerate(h.basis):
        cols_bracket = [algebra.bracket(algebra.basis_vector(j), hrow) for j in range(n)]
        for t in range(n):
            row = [ring.zero] * (n + s * s)
            for j in range(n):
                row[j] = cols_bracket[j][t]
            for u in range(s):
                row[n + i * s + u] = ring.neg(h.basis[u][t])
            rows.append(row)
    system = Matrix(ring, rows, cols=n + s * s)
    solutions = kernel(system)
    projected = [row[:n] for row in solutions.basis]
    return Submodule.span(ring, projected, n)

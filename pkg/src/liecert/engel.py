"""Both directions of the nilpotency/nilpotent-action equivalence, with
certificates, plus the maximal-subalgebra ascent that proves the hard
direction constructively.

The statement "every phi_x is nilpotent" quantifies over an infinite set for
rational or integer coefficients.  It is decided here through the lower
central series, which the equivalence makes sound and complete at finite
rank — never by enumerating elements.  Element enumeration appears only in
``witness_search``, whose job is to produce a concrete refuting x once the
series has already settled the verdict.
"""

from __future__ import annotations

from dataclasses import dataclass
from random import Random

from .errors import DimensionError, InternalCheckError, PreconditionError
from .liealg import LieAlgebra, LieModule, adjoint, subalgebra_on_carrier
from .linalg import Matrix, Submodule, canonicalize, invert, is_nilpotent_endo
from .lattice import (
    LcsChain,
    is_nilpotent,
    max_triv_submodule,
    nontrivial_max_triv_witness,
    quotient,
)

DEFAULT_BUDGET = 500
COEFFICIENT_POOL = (-2, -1, 0, 1, 2)


@dataclass(frozen=True)
class NilpotencyWitnessElement:
    """An element whose action matrix is provably not nilpotent."""

    element: tuple
    endo: Matrix
    evidence: Matrix  # endo^rank, nonzero

    def verify(self) -> bool:
        n = self.endo.rows
        return self.endo.power(n) == self.evidence and not self.evidence.is_zero()


@dataclass(frozen=True)
class SearchExhausted:
    budget: int
    tested: int


def _systematic_candidates(alg: LieAlgebra):
    """Basis elements, pairwise brackets, then depth-3 iterated brackets."""
    n = alg.rank
    basis = [alg.basis_vector(i) for i in range(n)]
    yield from basis
    pairs = []
    for i in range(n):
        for j in range(i + 1, n):
            w = alg.bracket(basis[i], basis[j])
            pairs.append(w)
            yield w
    for w in pairs:
        for i in range(n):
            yield alg.bracket(basis[i], w)


def _random_candidates(alg: LieAlgebra, seed: int):
    ring, n = alg.ring, alg.rank
    rng = Random(seed)
    while True:
        yield tuple(ring.from_int(rng.choice(COEFFICIENT_POOL)) for _ in range(n))


def witness_search(mod: LieModule, budget: int = DEFAULT_BUDGET, seed: int = 0):
    """Search for an element with non-nilpotent action.

    Requires a module already known non-nilpotent from its series; exhaustion
    is reported as data, never as a success — the series certificate stands
    on its own.
    """
    result = is_nilpotent(mod)
    if result.nilpotent:
        raise PreconditionError("witness search on a nilpotent module")
    ring = mod.ring
    seen = set()
    tested = 0
    draws = 0
    max_draws = budget * 20 + 100  # dedup can stall tiny search spaces

    def stream():
        yield from _systematic_candidates(mod.algebra)
        yield from _random_candidates(mod.algebra, seed)

    for x in stream():
        draws += 1
        if tested >= budget or draws > max_draws:
            break
        if all(ring.is_zero(c) for c in x) or x in seen:
            continue
        seen.add(x)
        tested += 1
        endo = mod.to_endomorphism(x)
        verdict = is_nilpotent_endo(endo)
        if not verdict.nilpotent:
            return NilpotencyWitnessElement(x, endo, verdict.refutation_power)
    return SearchExhausted(budget, tested)


@dataclass(frozen=True)
class EngelVerdict:
    """Decision of "the whole algebra acts nilpotently", with certificates."""

    acts_nilpotently: bool
    chain: LcsChain
    witness: NilpotencyWitnessElement | None
    search_exhausted: SearchExhausted | None


def check_forall_nilpotent(mod: LieModule, budget: int = DEFAULT_BUDGET, seed: int = 0) -> EngelVerdict:
    """Decide whether every phi_x is nilpotent, via the lower central series.

    The equivalence with module nilpotency (at finite rank) is what makes the
    universally quantified statement decidable; a refuting element is
    attached when the verdict is negative and the search finds one in budget.
    """
    result = is_nilpotent(mod)
    if result.nilpotent:
        return EngelVerdict(True, result.chain, None, None)
    found = witness_search(mod, budget=budget, seed=seed)
    if isinstance(found, SearchExhausted):
        return EngelVerdict(False, result.chain, None, found)
    return EngelVerdict(False, result.chain, found, None)


@dataclass(frozen=True)
class EngelFlag:
    """An invariant chain bottom = M_0 < M_1 < ... < M_s = top with
    ``action(M_{i+1}) <= M_i``, plus the basis change that makes every action
    matrix strictly block triangular."""

    module: LieModule
    flag: tuple  # LieSubmodule-compatible carriers, ascending
    change_of_basis: Matrix
    block_sizes: tuple

    def conjugated_actions(self) -> list:
        inv = invert(self.change_of_basis)
        return [inv.mul(a).mul(self.change_of_basis) for a in self.module.action]

    def verify(self) -> bool:
        """Exact zero check at and below the block diagonal."""
        boundaries = []
        total = 0
        for size in self.block_sizes:
            total += size
            boundaries.append(total)

        def block_of(t):
            for b, edge in enumerate(boundaries):
                if t < edge:
                    return b
            raise IndexError

        ring = self.module.ring
        for mat in self.conjugated_actions():
            for r in range(mat.rows):
                for c in range(mat.cols):
                    if block_of(r) >= block_of(c) and not ring.is_zero(mat.data[r][c]):
                        return False
        return True


@dataclass(frozen=True)
class FlagRefutation:
    """A step where the trivial part of the quotient vanished: a nonzero
    module with zero trivial part cannot sit inside a nilpotent one."""

    step: int
    reached: Submodule
    quotient_module: LieModule


def engel_flag(mod: LieModule):
    """Build the simultaneous strict triangularization, or refute it.

    Each step adjoins the preimage of the maximal trivial submodule of the
    current quotient; success at every step is exactly nilpotency.
    """
    ring = mod.ring
    if not ring.is_field:
        raise PreconditionError("flags need field coefficients")
    reached = Submodule.zero(ring, mod.rank)
    flag = [reached]
    lifted_blocks = []
    step = 0
    while reached.rank < mod.rank:
        q = quotient(mod, reached)
        triv = max_triv_submodule(q.module)
        if triv.rank == 0:
            return FlagRefutation(step, reached, q.module)
        lifts = [q.section.apply(row) for row in triv.carrier.basis]
        lifted_blocks.append(lifts)
        reached = reached.sum(Submodule.span(ring, lifts, mod.rank))
        flag.append(reached)
        step += 1
    cols = [v for block in lifted_blocks for v in block]
    change = Matrix(ring, [[cols[j][i] for j in range(len(cols))] for i in range(mod.rank)], cols=mod.rank)
    result = EngelFlag(mod, tuple(flag), change, tuple(len(b) for b in lifted_blocks))
    if not result.verify():
        raise InternalCheckError("flag construction produced a non-triangular basis")
    return result


@dataclass(frozen=True)
class UniformExponentReport:
    """Per-sample minimal exponents against the single exponent that the
    series length guarantees for every element at once."""

    uniform_exponent: int
    samples: tuple  # (element, minimal exponent) pairs
    all_within: bool


def uniform_exponent_check(mod: LieModule, samples: int = 50, seed: int = 0) -> UniformExponentReport:
    result = is_nilpotent(mod)
    if not result.nilpotent:
        raise PreconditionError("uniform exponents exist only for nilpotent modules")
    k = result.chain.index
    ring = mod.ring
    rng = Random(seed)
    n = mod.algebra.rank
    out = []
    ok = True
    for _ in range(samples):
        x = tuple(ring.from_int(rng.choice(COEFFICIENT_POOL)) for _ in range(n))
        endo = mod.to_endomorphism(x)
        power = Matrix.identity(ring, mod.rank)
        minimal = None
        for e in range(0, max(k, mod.rank) + 1):
            if power.is_zero():
                minimal = e
                break
            power = power.mul(endo)
        if minimal is None:
            minimal = max(k, mod.rank) + 1
        if minimal > k:
            ok = False
        out.append((x, minimal))
    return UniformExponentReport(k, tuple(out), ok)


@dataclass(frozen=True)
class AdNilpotencyCheck:
    """ad of a nilpotent element of a matrix subalgebra, with the 2k-1 bound
    from expanding powers of left-minus-right multiplication."""

    base_index: int
    bound: int
    measured_index: int
    ad_matrix: Matrix

    @property
    def within_bound(self) -> bool:
        return self.measured_index <= self.bound


def _vectorize(m: Matrix) -> tuple:
    return tuple(x for row in m.data for x in row)


def _unvectorize(ring, flat, n) -> Matrix:
    return Matrix(ring, [flat[i * n : (i + 1) * n] for i in range(n)], cols=n)


def nilpotent_ad_of_nilpotent(a_matrix: Matrix, subalgebra: list) -> AdNilpotencyCheck:
    """Verify that ad_a on a commutator-closed matrix span is nilpotent with
    index at most 2k - 1 when a^k = 0.

    Left and right multiplication by ``a`` commute and are each nilpotent of
    index k, so every term of the expanded (L_a - R_a)^(2k-1) carries a
    vanishing power of ``a``.
    """
    ring = a_matrix.ring
    if not a_matrix.is_square():
        raise DimensionError("endomorphisms are square")
    n = a_matrix.rows
    for b in subalgebra:
        if b.rows != n or b.cols != n or b.ring != ring:
            raise DimensionError("subalgebra matrices must match the ambient endomorphism size")
    span = canonicalize(Matrix(ring, [_vectorize(b) for b in subalgebra], cols=n * n))
    basis_mats = [_unvectorize(ring, row, n) for row in span.basis]
    for i, bi in enumerate(basis_mats):
        for j, bj in enumerate(basis_mats):
            if i < j and span.coordinates(_vectorize(bi.commutator(bj))) is None:
                raise PreconditionError("matrix family is not commutator-closed within its span")
    if span.coordinates(_vectorize(a_matrix)) is None:
        raise PreconditionError("element lies outside the span of the subalgebra")
    base = is_nilpotent_endo(a_matrix)
    if not base.nilpotent:
        raise PreconditionError("element is not nilpotent")
    k = base.index

    cols = []
    for b in basis_mats:
        coords = span.coordinates(_vectorize(a_matrix.commutator(b)))
        if coords is None:
            raise InternalCheckError("ad image escaped a commutator-closed span")
        cols.append(coords)
    r = len(basis_mats)
    ad = Matrix(ring, [[cols[j][i] for j in range(r)] for i in range(r)], cols=r)
    measured = is_nilpotent_endo(ad)
    if not measured.nilpotent:
        raise InternalCheckError("ad of a nilpotent element failed to be nilpotent")
    return AdNilpotencyCheck(k, max(2 * k - 1, 1), measured.index, ad)


def range_reduction(mod: LieModule) -> LieModule:
    """Replace the acting algebra by its image inside End(M).

    The image basis is the canonical span of the action matrices, structure
    constants come from their commutators, and M acts tautologically.  The
    nilpotency verdicts of the two modules agree.
    """
    ring = mod.ring
    if not ring.is_field:
        raise PreconditionError("image extraction needs field coefficients")
    m = mod.rank
    flat = Matrix(ring, [_vectorize(a) for a in mod.action], cols=m * m)
    span = canonicalize(flat)
    basis_mats = [_unvectorize(ring, row, m) for row in span.basis]
    r = len(basis_mats)
    constants = {}
    for i in range(r):
        for j in range(i + 1, r):
            coords = span.coordinates(_vectorize(basis_mats[i].commutator(basis_mats[j])))
            if coords is None:
                raise InternalCheckError("action image is not commutator-closed")
            constants[(i, j)] = coords
    names = tuple(f"g{i}" for i in range(r))
    image_alg = LieAlgebra(ring, r, constants, basis_names=names)
    return LieModule(image_alg, m, basis_mats)


@dataclass(frozen=True)
class AscentStep:
    subalgebra: Submodule  # K before the step
    new_element: tuple     # x adjoined, with [K, x] <= K
    quotient_witness: tuple  # the class of x in the quotient presentation


@dataclass(frozen=True)
class AscentChain:
    algebra: LieAlgebra  # the image algebra the ascent ran in
    steps: tuple
    final: Submodule

    @property
    def succeeded(self) -> bool:
        return self.final.is_full()


@dataclass(frozen=True)
class AscentFailure:
    algebra: LieAlgebra
    reached: Submodule
    chain: LcsChain  # the non-terminating series over the stuck subalgebra


def engelian_ascent(mod: LieModule):
    """Grow a subalgebra chain bottom = K_0 < K_1 < ... < top inside the image
    algebra, one dimension per step.

    Each step views the image algebra modulo K as a K-module, shows it
    nilpotent through its series, and lifts a vector killed by K; the lift x
    then satisfies [K, x] <= K, so K + span(x) is a subalgebra with K as an
    ideal.  On a nilpotent input every step succeeds and the chain reaches
    the top in exactly rank-of-image steps; otherwise the stuck step is
    returned as data.
    """
    reduced = range_reduction(mod)
    algebra = reduced.algebra
    ring = algebra.ring
    r = algebra.rank
    ad_mod = adjoint(algebra)
    carrier = Submodule.zero(ring, r)
    steps = []
    while carrier.rank < r:
        q = quotient(ad_mod, carrier, acting=carrier)
        result = is_nilpotent(q.module)
        if not result.nilpotent:
            return AscentFailure(algebra, carrier, result.chain)
        m0 = nontrivial_max_triv_witness(q.module)
        x = q.section.apply(m0)
        _verify_ascent_step(algebra, carrier, x)
        steps.append(AscentStep(carrier, x, m0))
        carrier = carrier.sum(Submodule.span(ring, [x], r))
    return AscentChain(algebra, tuple(steps), carrier)


def _verify_ascent_step(algebra: LieAlgebra, carrier: Submodule, x: tuple):
    ring = algebra.ring
    if carrier.contains(x):
        raise InternalCheckError("ascent lift landed inside the current subalgebra")
    for row in carrier.basis:
        if not carrier.contains(algebra.bracket(row, x)):
            raise InternalCheckError("ascent lift does not normalize the current subalgebra")
    enlarged = carrier.sum(Submodule.span(ring, [x], algebra.rank))
    if enlarged.rank != carrier.rank + 1:
        raise InternalCheckError("ascent step did not grow the subalgebra by one")


def verify_ascent_chain(chain: AscentChain) -> bool:
    """Re-verify every step of an ascent chain from scratch: the lift is
    outside K, brackets [K, x] fall back into K, the enlargement K' grows by
    exactly one, and K is an ideal in K'."""
    algebra = chain.algebra
    carrier = Submodule.zero(algebra.ring, algebra.rank)
    for step in chain.steps:
        if step.subalgebra != carrier:
            return False
        x = step.new_element
        if carrier.contains(x):
            return False
        for row in carrier.basis:
            if not carrier.contains(algebra.bracket(row, x)):
                return False
        enlarged = carrier.sum(Submodule.span(algebra.ring, [x], algebra.rank))
        if enlarged.rank != carrier.rank + 1:
            return False
        # K is an ideal in K': brackets of K' generators with K stay in K.
        for row in enlarged.basis:
            for krow in carrier.basis:
                if not carrier.contains(algebra.bracket(row, krow)):
                    return False
        # K' is bracket-closed.
        try:
            subalgebra_on_carrier(algebra, enlarged)
        except PreconditionError:
            return False
        carrier = enlarged
    return chain.final == carrier and carrier.is_full()

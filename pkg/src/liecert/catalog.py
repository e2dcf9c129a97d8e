"""Built-in example algebras and their natural modules.

Available names (parameter given as ``n`` where applicable, 1 <= n <= 12):

    abelian(n)                      all brackets zero
    heisenberg                      rank 3, [e, f] = z
    strictly_upper_triangular(n)    matrix units E_ij, i < j
    upper_triangular(n)             matrix units E_ij, i <= j
    sl2                             [h,e] = 2e, [h,f] = -2f, [e,f] = h
    gl(n)                           all matrix units

The triangular families and sl2 come with their natural column modules.
"""

from __future__ import annotations

from .errors import PreconditionError
from .liealg import LieAlgebra, LieModule
from .linalg import Matrix
from .rings import ScalarRing

CATALOG_NAMES = (
    "abelian",
    "heisenberg",
    "strictly_upper_triangular",
    "upper_triangular",
    "sl2",
    "gl",
)

_PARAM_MIN, _PARAM_MAX = 1, 12


def _matrix_unit_pairs(n: int, kind: str):
    if kind == "strict":
        return [(a, b) for a in range(n) for b in range(a + 1, n)]
    if kind == "upper":
        return [(a, b) for a in range(n) for b in range(a, n)]
    return [(a, b) for a in range(n) for b in range(n)]


def _matrix_unit_algebra(ring: ScalarRing, n: int, kind: str) -> tuple[LieAlgebra, LieModule]:
    pairs = _matrix_unit_pairs(n, kind)
    index = {p: t for t, p in enumerate(pairs)}
    rank = len(pairs)
    one = ring.one
    constants = {}
    for s in range(rank):
        for t in range(s + 1, rank):
            (a, b), (c, d) = pairs[s], pairs[t]
            vec = [ring.zero] * rank
            if b == c:  # E_ab E_cd = E_ad
                k = index[(a, d)]
                vec[k] = ring.add(vec[k], one)
            if d == a:  # E_cd E_ab = E_cb
                k = index[(c, b)]
                vec[k] = ring.sub(vec[k], one)
            constants[(s, t)] = vec
    names = tuple(f"E{a + 1}_{b + 1}" for a, b in pairs)
    algebra = LieAlgebra(ring, rank, constants, basis_names=names)
    action = []
    for a, b in pairs:
        rows = [[one if (i, j) == (a, b) else ring.zero for j in range(n)] for i in range(n)]
        action.append(Matrix(ring, rows, cols=n))
    module = LieModule(algebra, n, action)
    return algebra, module


def _sl2(ring: ScalarRing) -> tuple[LieAlgebra, LieModule]:
    two = ring.from_int(2)
    z, o = ring.zero, ring.one
    constants = {
        (0, 1): (ring.neg(two), z, z),  # [e, h] = -2e
        (0, 2): (z, o, z),              # [e, f] = h
        (1, 2): (z, z, ring.neg(two)),  # [h, f] = -2f
    }
    algebra = LieAlgebra(ring, 3, constants, basis_names=("e", "h", "f"))
    action = [
        Matrix(ring, [[0, 1], [0, 0]]),
        Matrix(ring, [[1, 0], [0, -1]]),
        Matrix(ring, [[0, 0], [1, 0]]),
    ]
    module = LieModule(algebra, 2, action)
    return algebra, module


def _heisenberg(ring: ScalarRing) -> LieAlgebra:
    constants = {(0, 1): (ring.zero, ring.zero, ring.one)}  # [e, f] = z
    return LieAlgebra(ring, 3, constants, basis_names=("e", "f", "z"))


def catalog(name: str, ring: ScalarRing, parameter: int | None = None):
    """Build a named example; returns ``(algebra, natural_module_or_None)``."""
    if name not in CATALOG_NAMES:
        raise PreconditionError(f"unknown catalog name: {name!r} (choose from {', '.join(CATALOG_NAMES)})")

    takes_parameter = name in ("abelian", "strictly_upper_triangular", "upper_triangular", "gl")
    if takes_parameter:
        if parameter is None:
            raise PreconditionError(f"catalog entry {name!r} needs a size parameter")
        if not (_PARAM_MIN <= parameter <= _PARAM_MAX):
            raise PreconditionError(
                f"parameter {parameter} out of range [{_PARAM_MIN}, {_PARAM_MAX}]"
            )
    elif parameter is not None:
        raise PreconditionError(f"catalog entry {name!r} takes no parameter")

    if name == "abelian":
        names = tuple(f"a{i}" for i in range(parameter))
        return LieAlgebra(ring, parameter, {}, basis_names=names), None
    if name == "heisenberg":
        return _heisenberg(ring), None
    if name == "strictly_upper_triangular":
        return _matrix_unit_algebra(ring, parameter, "strict")
    if name == "upper_triangular":
        return _matrix_unit_algebra(ring, parameter, "upper")
    if name == "gl":
        algebra, _module = _matrix_unit_algebra(ring, parameter, "all")
        return algebra, None
    return _sl2(ring)

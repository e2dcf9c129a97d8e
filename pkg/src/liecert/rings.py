"""Exact coefficient rings: the rationals, the integers, and prime fields GF(p).

Scalars are plain Python values kept in a canonical form by the owning ring:
``Fraction`` in lowest terms for the rationals, ``int`` for the integers, and
``int`` in ``[0, p)`` for GF(p).  All arithmetic is exact; nothing here ever
rounds.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import RingError

RATIONALS = "rationals"
INTEGERS = "integers"
PRIME_FIELD = "prime_field"

_KINDS = (RATIONALS, INTEGERS, PRIME_FIELD)


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class ScalarRing:
    """Descriptor of a supported coefficient ring.

    ``kind`` is one of ``rationals``, ``integers``, ``prime_field``; ``p`` is
    the characteristic and must be present (and prime) exactly when the kind
    is ``prime_field``.
    """

    kind: str
    p: int | None = None

    def __post_init__(self):
        if self.kind not in _KINDS:
            raise RingError(f"unknown ring kind: {self.kind!r}")
        if self.kind == PRIME_FIELD:
            if not isinstance(self.p, int) or not _is_prime(self.p):
                raise RingError(f"{self.p} is not prime")
        elif self.p is not None:
            raise RingError("characteristic parameter is only valid for prime fields")

    @property
    def is_field(self) -> bool:
        return self.kind != INTEGERS

    def __str__(self) -> str:
        if self.kind == PRIME_FIELD:
            return f"GF({self.p})"
        return "QQ" if self.kind == RATIONALS else "ZZ"

    # -- canonical values ---------------------------------------------------

    def normalize(self, v):
        """Coerce ``v`` into the ring's canonical representation."""
        if isinstance(v, bool):
            raise RingError("booleans are not ring elements")
        if self.kind == RATIONALS:
            if isinstance(v, Fraction):
                return v
            if isinstance(v, int):
                return Fraction(v)
        elif self.kind == INTEGERS:
            if isinstance(v, int):
                return v
            if isinstance(v, Fraction) and v.denominator == 1:
                return int(v)
        else:
            if isinstance(v, int):
                return v % self.p
            if isinstance(v, Fraction) and v.denominator == 1:
                return int(v) % self.p
        raise RingError(f"{v!r} is not an element of {self}")

    def from_int(self, n: int):
        return self.normalize(n)

    @property
    def zero(self):
        return self.from_int(0)

    @property
    def one(self):
        return self.from_int(1)

    # -- arithmetic ---------------------------------------------------------

    def add(self, a, b):
        if self.kind == PRIME_FIELD:
            return (a + b) % self.p
        return a + b

    def sub(self, a, b):
        if self.kind == PRIME_FIELD:
            return (a - b) % self.p
        return a - b

    def mul(self, a, b):
        if self.kind == PRIME_FIELD:
            return (a * b) % self.p
        return a * b

    def neg(self, a):
        if self.kind == PRIME_FIELD:
            return (-a) % self.p
        return -a

    def is_zero(self, a) -> bool:
        return a == 0

    def inv(self, a):
        """Multiplicative inverse; over the integers only for units +/-1."""
        if self.is_zero(a):
            raise RingError("division by zero")
        if self.kind == RATIONALS:
            return 1 / a
        if self.kind == PRIME_FIELD:
            return pow(a, -1, self.p)
        if a in (1, -1):
            return a
        raise RingError(f"{a} is not a unit in ZZ")

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def exact_div(self, a, b):
        """Return ``a / b`` when the quotient lies in the ring, else ``None``."""
        if self.is_zero(b):
            return None
        if self.kind == INTEGERS:
            q, r = divmod(a, b)
            return q if r == 0 else None
        return self.div(a, b)

    # -- serialization ------------------------------------------------------

    def format_scalar(self, v) -> str:
        if self.kind == RATIONALS:
            if v.denominator == 1:
                return str(v.numerator)
            return f"{v.numerator}/{v.denominator}"
        return str(v)

    def parse_scalar(self, s: str):
        """Parse the decimal-string form: ``a`` or, over the rationals, ``a/b``."""
        s = s.strip()
        try:
            if self.kind == RATIONALS:
                if "/" in s:
                    num, den = s.split("/", 1)
                    return self.normalize(Fraction(int(num), int(den)))
                return self.normalize(int(s))
            return self.normalize(int(s))
        except (ValueError, ZeroDivisionError) as exc:
            raise RingError(f"cannot parse {s!r} as an element of {self}: {exc}") from None


def rationals() -> ScalarRing:
    return ScalarRing(RATIONALS)


def integers() -> ScalarRing:
    return ScalarRing(INTEGERS)


def prime_field(p: int) -> ScalarRing:
    return ScalarRing(PRIME_FIELD, p)

"""Exact scalars over GF(p) and the rationals.

Internally every module works with *raw* scalars for speed: plain ``int``
residues in ``[0, p)`` for prime fields and :class:`fractions.Fraction`
for Q.  :class:`FieldElement` is the typed public wrapper around a raw
value and its field.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import FieldError

MAX_PRIME = 251

_GF_RE = re.compile(r"^\s*GF\(\s*(\d+)\s*\)\s*$")
_COEF_RE = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*([+-]?\d+))?\s*$")


def _is_prime(n):
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


@dataclass(frozen=True)
class Field:
    """Field descriptor: ``Field("prime", p)`` or ``Field("rational")``."""

    kind: str
    p: int | None = None

    def __post_init__(self):
        if self.kind == "prime":
            if not isinstance(self.p, int) or not _is_prime(self.p):
                raise FieldError(f"modulus {self.p!r} is not prime")
            if self.p > MAX_PRIME:
                raise FieldError(f"prime modulus {self.p} exceeds cap {MAX_PRIME}")
        elif self.kind == "rational":
            if self.p is not None:
                raise FieldError("rational field takes no modulus")
        else:
            raise FieldError(f"unknown field kind {self.kind!r}")

    @property
    def is_prime(self):
        return self.kind == "prime"

    @property
    def characteristic(self):
        return self.p if self.is_prime else 0

    def __str__(self):
        return f"GF({self.p})" if self.is_prime else "Q"

    def __repr__(self):
        return f"Field({str(self)})"

    # -- raw scalar arithmetic -------------------------------------------------

    @property
    def zero(self):
        return 0 if self.is_prime else Fraction(0)

    @property
    def one(self):
        return 1 if self.is_prime else Fraction(1)

    def norm(self, raw):
        """Canonical raw representative of an int, Fraction or FieldElement."""
        if isinstance(raw, FieldElement):
            if raw.field != self:
                raise FieldError(f"element of {raw.field} used in {self}")
            return raw.value
        if isinstance(raw, bool):
            raw = int(raw)
        if self.is_prime:
            if isinstance(raw, int):
                return raw % self.p
            if isinstance(raw, Fraction):
                den = raw.denominator % self.p
                if den == 0:
                    raise FieldError(f"denominator {raw.denominator} vanishes in {self}")
                return raw.numerator * pow(den, -1, self.p) % self.p
        else:
            if isinstance(raw, (int, Fraction)):
                return Fraction(raw)
        raise FieldError(f"cannot interpret {raw!r} as a scalar of {self}")

    def add(self, a, b):
        return (a + b) % self.p if self.is_prime else a + b

    def sub(self, a, b):
        return (a - b) % self.p if self.is_prime else a - b

    def mul(self, a, b):
        return a * b % self.p if self.is_prime else a * b

    def neg(self, a):
        return -a % self.p if self.is_prime else -a

    def inv(self, a):
        if a == 0:
            raise FieldError("inverse of zero")
        return pow(a, -1, self.p) if self.is_prime else 1 / a

    def elements(self):
        if not self.is_prime:
            raise FieldError("Q is infinite")
        return range(self.p)

    # -- text -----------------------------------------------------------------

    def parse(self, text):
        """Parse an integer or ``a/b`` coefficient into a raw scalar."""
        m = _COEF_RE.match(str(text))
        if not m:
            raise FieldError(f"unparseable coefficient {text!r}")
        num = int(m.group(1))
        den = int(m.group(2)) if m.group(2) is not None else 1
        if den == 0:
            raise FieldError(f"zero denominator in {text!r}")
        return self.norm(Fraction(num, den))

    def format(self, raw):
        if self.is_prime:
            return str(raw)
        return str(raw.numerator) if raw.denominator == 1 else f"{raw.numerator}/{raw.denominator}"

    def element(self, raw):
        return FieldElement(self, self.norm(raw))


@lru_cache(maxsize=None)
def GF(p):
    return Field("prime", p)


Q = Field("rational")


def parse_field(text):
    """Parse the textual descriptors ``GF(p)`` and ``Q``."""
    if text.strip() == "Q":
        return Q
    m = _GF_RE.match(text)
    if not m:
        raise FieldError(f"unknown field descriptor {text!r}")
    return GF(int(m.group(1)))


@dataclass(frozen=True)
class FieldElement:
    field: Field
    value: object

    def _coerce(self, other):
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise FieldError(f"mixed fields {self.field} and {other.field}")
            return other.value
        return self.field.norm(other)

    def __add__(self, other):
        return FieldElement(self.field, self.field.add(self.value, self._coerce(other)))

    __radd__ = __add__

    def __sub__(self, other):
        return FieldElement(self.field, self.field.sub(self.value, self._coerce(other)))

    def __rsub__(self, other):
        return FieldElement(self.field, self.field.sub(self._coerce(other), self.value))

    def __mul__(self, other):
        return FieldElement(self.field, self.field.mul(self.value, self._coerce(other)))

    __rmul__ = __mul__

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.value))

    def inverse(self):
        return FieldElement(self.field, self.field.inv(self.value))

    def __truediv__(self, other):
        return self * FieldElement(self.field, self._coerce(other)).inverse()

    def __bool__(self):
        return self.value != 0

    def __str__(self):
        return self.field.format(self.value)


def normalize(raw, field):
    """Canonical :class:`FieldElement` for ``raw`` (int, Fraction or element)."""
    return FieldElement(field, field.norm(raw))


def arith(op, a, b=None):
    """Dispatch ``add``/``mul``/``neg``/``inv`` on field elements."""
    if op in ("add", "mul"):
        if b is None:
            raise FieldError(f"{op} needs two operands")
        if a.field != b.field:
            raise FieldError(f"mixed fields {a.field} and {b.field}")
        return a + b if op == "add" else a * b
    if op == "neg":
        return -a
    if op == "inv":
        return a.inverse()
    raise FieldError(f"unknown operation {op!r}")

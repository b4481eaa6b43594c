"""Ground fields: the rationals and prime fields GF(p).

Elements are plain Python numbers.  Over the rationals they are
``Fraction`` (or ``int``) values; over GF(p) they are ints in ``[0, p)``.
Arithmetic on elements is done with the ordinary operators and the result
passed through :meth:`Field.reduce`, which is exact because the reduction
map Z -> GF(p) is a ring homomorphism.  Only division needs the field.
"""

from __future__ import annotations

import functools
import re
from fractions import Fraction

_SCALAR_RE = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+)\s*)?$")


class FieldError(ValueError):
    pass


class Field:
    """Base class; use :data:`QQ` or :func:`GF`."""

    char = 0
    kind = ""

    def reduce(self, x):
        raise NotImplementedError

    def inv(self, x):
        raise NotImplementedError

    def div(self, x, y):
        return self.reduce(x * self.inv(y))

    @property
    def zero(self):
        return self.reduce(0)

    @property
    def one(self):
        return self.reduce(1)

    def coerce(self, x):
        """Turn an int, Fraction or scalar string into a field element."""
        if isinstance(x, str):
            return self.parse(x)
        if isinstance(x, Fraction):
            if x.denominator == 1:
                return self.reduce(x.numerator)
            return self.div(x.numerator, x.denominator)
        if isinstance(x, bool) or not isinstance(x, int):
            raise FieldError(f"cannot coerce {x!r} into {self}")
        return self.reduce(x)

    def parse(self, text: str):
        m = _SCALAR_RE.match(text)
        if m is None:
            raise FieldError(f"malformed scalar {text!r}")
        num = int(m.group(1))
        den = int(m.group(2)) if m.group(2) is not None else 1
        if den == 0:
            raise FieldError(f"zero denominator in {text!r}")
        return self.coerce(Fraction(num, den))

    def format(self, x) -> str:
        raise NotImplementedError

    def to_json(self) -> dict:
        raise NotImplementedError


class Rationals(Field):
    kind = "Q"

    def reduce(self, x):
        if isinstance(x, Fraction):
            return x.numerator if x.denominator == 1 else x
        return x

    def inv(self, x):
        if x == 0:
            raise ZeroDivisionError("division by zero in Q")
        return self.reduce(Fraction(1) / x)

    def format(self, x) -> str:
        x = Fraction(x)
        if x.denominator == 1:
            return str(x.numerator)
        return f"{x.numerator}/{x.denominator}"

    def to_json(self) -> dict:
        return {"type": "Q"}

    def __repr__(self):
        return "QQ"

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash("QQ")


class PrimeField(Field):
    kind = "GF"

    def __init__(self, p: int):
        if p < 2 or not _is_prime(p):
            raise FieldError(f"{p} is not prime")
        if p >= 2**31:
            raise FieldError("only word-sized primes are supported")
        self.p = p
        self.char = p

    def reduce(self, x):
        if isinstance(x, Fraction):
            return self.coerce(x)
        return x % self.p

    def inv(self, x):
        x %= self.p
        if x == 0:
            raise ZeroDivisionError(f"division by zero in GF({self.p})")
        return pow(x, self.p - 2, self.p)

    def format(self, x) -> str:
        return str(x % self.p)

    def elements(self):
        return range(self.p)

    def to_json(self) -> dict:
        return {"type": "GF", "p": self.p}

    def __repr__(self):
        return f"GF({self.p})"

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


QQ = Rationals()


@functools.lru_cache(maxsize=None)
def GF(p: int) -> PrimeField:
    return PrimeField(p)


def field_from_json(obj: dict) -> Field:
    kind = obj.get("type")
    if kind == "Q":
        return QQ
    if kind == "GF":
        p = obj.get("p")
        if not isinstance(p, int):
            raise FieldError("GF field needs an integer 'p'")
        return GF(p)
    raise FieldError(f"unknown field type {kind!r}")

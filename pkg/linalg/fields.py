"""
Exact fields used by the linear algebra layer.

A Field works on raw values (Fraction, int mod p, or a pair of Fractions for
Q(√5)); matrices store raw values and call the field for every operation.
Raw values are kept normalized so that == is field equality.
"""
import re
from abc import ABC, abstractmethod
from fractions import Fraction

from sympy import isprime

from core.errors import DomainError, PayloadError


class Field(ABC):
    zero = None
    one = None

    @property
    @abstractmethod
    def tag(self):
        """JSON tag: "rational", {"prime": p} or "sqrt5"."""

    @abstractmethod
    def add(self, a, b):
        pass

    @abstractmethod
    def sub(self, a, b):
        pass

    @abstractmethod
    def mul(self, a, b):
        pass

    @abstractmethod
    def neg(self, a):
        pass

    @abstractmethod
    def inv(self, a):
        pass

    @abstractmethod
    def from_int(self, n: int):
        pass

    @abstractmethod
    def parse(self, text):
        pass

    @abstractmethod
    def format(self, a) -> str:
        pass

    @abstractmethod
    def random(self, rng):
        """A uniformly drawn element (from a bounded box for infinite fields)."""

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def is_zero(self, a) -> bool:
        return a == self.zero

    def power(self, a, k: int):
        if k < 0:
            return self.power(self.inv(a), -k)
        result = self.one
        base = a
        while k:
            if k & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            k >>= 1
        return result

    def from_fraction(self, x: Fraction):
        x = Fraction(x)
        return self.div(self.from_int(x.numerator), self.from_int(x.denominator))

    def __eq__(self, other):
        return isinstance(other, Field) and self.tag == other.tag

    def __hash__(self):
        return hash(repr(self.tag))

    def __repr__(self):
        return f"{type(self).__name__}({self.tag!r})"


class RationalField(Field):
    zero = Fraction(0)
    one = Fraction(1)

    def __init__(self, bound: int = 100):
        self.bound = bound

    @property
    def tag(self):
        return "rational"

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if a == 0:
            raise DomainError("division by zero in Q")
        return 1 / a

    def from_int(self, n: int):
        return Fraction(n)

    def from_fraction(self, x):
        return Fraction(x)

    def parse(self, text):
        if isinstance(text, int) and not isinstance(text, bool):
            return Fraction(text)
        try:
            return Fraction(str(text).strip())
        except (ValueError, ZeroDivisionError) as e:
            raise PayloadError(f"cannot read {text!r} as a rational") from e

    def format(self, a) -> str:
        return str(a)

    def random(self, rng):
        return Fraction(int(rng.integers(-self.bound, self.bound + 1)))


class PrimeField(Field):
    zero = 0
    one = 1

    def __init__(self, p: int):
        if not isinstance(p, int) or isinstance(p, bool):
            raise DomainError(f"modulus must be an integer, got {p!r}")
        if not isprime(p):
            raise DomainError(f"modulus {p} is not a prime")
        self.p = p

    @property
    def tag(self):
        return {"prime": self.p}

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise DomainError(f"division by zero in GF({self.p})")
        return pow(a, -1, self.p)

    def from_int(self, n: int):
        return n % self.p

    def parse(self, text):
        if isinstance(text, int) and not isinstance(text, bool):
            return text % self.p
        try:
            x = Fraction(str(text).strip())
        except (ValueError, ZeroDivisionError) as e:
            raise PayloadError(f"cannot read {text!r} as an element of GF({self.p})") from e
        return self.from_fraction(x)

    def format(self, a) -> str:
        return str(a)

    def random(self, rng):
        return int(rng.integers(0, self.p))


_TERM_RE = re.compile(r"[+-]?[^+-]+")


class Sqrt5Field(Field):
    """Q(√5), elements a + b·√5 stored as (a, b)."""

    zero = (Fraction(0), Fraction(0))
    one = (Fraction(1), Fraction(0))

    def __init__(self, bound: int = 100):
        self.bound = bound

    @property
    def tag(self):
        return "sqrt5"

    def add(self, x, y):
        return (x[0] + y[0], x[1] + y[1])

    def sub(self, x, y):
        return (x[0] - y[0], x[1] - y[1])

    def mul(self, x, y):
        return (x[0] * y[0] + 5 * x[1] * y[1], x[0] * y[1] + x[1] * y[0])

    def neg(self, x):
        return (-x[0], -x[1])

    def inv(self, x):
        # через сопряжённое: 1/(a + b√5) = (a - b√5)/(a² - 5b²)
        norm = x[0] * x[0] - 5 * x[1] * x[1]
        if norm == 0:
            raise DomainError("division by zero in Q(√5)")
        return (x[0] / norm, -x[1] / norm)

    def conjugate(self, x):
        return (x[0], -x[1])

    def from_int(self, n: int):
        return (Fraction(n), Fraction(0))

    def from_fraction(self, x):
        return (Fraction(x), Fraction(0))

    def element(self, a, b):
        return (Fraction(a), Fraction(b))

    def parse(self, text):
        if isinstance(text, int) and not isinstance(text, bool):
            return self.from_int(text)
        compact = str(text).replace(" ", "")
        if not compact or _TERM_RE.sub("", compact):
            raise PayloadError(f"cannot read {text!r} as a + b*s5")
        a, b = Fraction(0), Fraction(0)
        try:
            for term in _TERM_RE.findall(compact):
                if term.endswith("s5"):
                    coeff = term[:-2].rstrip("*")
                    b += Fraction(coeff + "1") if coeff in ("", "+", "-") else Fraction(coeff)
                else:
                    a += Fraction(term)
        except (ValueError, ZeroDivisionError) as e:
            raise PayloadError(f"cannot read {text!r} as a + b*s5") from e
        return (a, b)

    def format(self, x) -> str:
        a, b = x
        if b == 0:
            return str(a)
        sign = "-" if b < 0 else "+"
        return f"{a}{sign}{abs(b)}*s5"

    def random(self, rng):
        a, b = rng.integers(-self.bound, self.bound + 1, size=2)
        return (Fraction(int(a)), Fraction(int(b)))


def field_from_selector(name: str, prime: int, bound: int = 100) -> Field:
    if name == "prime":
        return PrimeField(prime)
    if name == "rational":
        return RationalField(bound)
    if name == "sqrt5":
        return Sqrt5Field(bound)
    raise DomainError(f"unknown field selector {name!r}")


def field_from_tag(tag) -> Field:
    """Inverse of Field.tag."""
    if tag == "rational":
        return RationalField()
    if tag == "sqrt5":
        return Sqrt5Field()
    if isinstance(tag, dict) and set(tag) == {"prime"}:
        return PrimeField(tag["prime"])
    raise PayloadError(f"unknown field tag {tag!r}")

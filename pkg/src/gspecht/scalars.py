"""Exact scalar arithmetic.

Two base fields: F_p with a distinguished element xi of multiplicative
order exactly e >= 2 (all algebra-side computations), and Q with an
element xi of infinite order (combinatorics-adjacent e = 0 paths).
Scalars are plain ints in 0..p-1 resp. fractions.Fraction; FieldSpec
carries the operations.  No floating point anywhere.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from gspecht.errors import ParameterError


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def multiplicative_order(x: int, p: int) -> int:
    k, y = 1, x % p
    while y != 1:
        y = (y * x) % p
        k += 1
        if k == p:
            raise ParameterError(f"{x} is not a unit mod {p}")
    return k


def find_xi(p: int, e: int) -> int:
    """Smallest residue 2 <= xi < p of multiplicative order exactly e.

    Deterministic by construction (linear scan from 2 upward).
    """
    if not is_prime(p):
        raise ParameterError(f"p={p} is not prime")
    if e < 2:
        raise ParameterError(f"e={e} < 2: a root of unity distinct from 1 is required")
    if (p - 1) % e != 0:
        raise ParameterError(f"e={e} does not divide p-1={p - 1}")
    for x in range(2, p):
        if multiplicative_order(x, p) == e:
            return x
    raise ParameterError(f"no element of order {e} mod {p}")  # unreachable for valid input


@lru_cache(maxsize=None)
def default_prime(e: int) -> int:
    """Smallest prime p >= 5 with p = 1 (mod e)."""
    if e < 2:
        raise ParameterError(f"e={e} < 2 has no prime-field default")
    p = 5
    while True:
        if is_prime(p) and (p - 1) % e == 0:
            return p
        p += 1


@dataclass(frozen=True)
class FieldSpec:
    """Base field plus the distinguished root of unity xi.

    mode "prime": F_p, e >= 2, e | p-1, xi of exact order e.
    mode "rational": Q, e = 0, xi of infinite order (|xi| not in {0, 1}).
    """

    mode: str
    e: int
    p: int | None = None
    xi: object = field(default=None)

    def __post_init__(self):
        if self.mode == "prime":
            if self.p is None or not is_prime(self.p):
                raise ParameterError(f"p={self.p} is not prime")
            if self.e < 2:
                raise ParameterError(f"e={self.e} < 2 in prime-field mode")
            if (self.p - 1) % self.e != 0:
                raise ParameterError(f"e={self.e} does not divide p-1={self.p - 1}")
            xi = self.xi if self.xi is not None else find_xi(self.p, self.e)
            if multiplicative_order(xi, self.p) != self.e:
                raise ParameterError(f"xi={xi} does not have order {self.e} mod {self.p}")
            object.__setattr__(self, "xi", xi % self.p)
        elif self.mode == "rational":
            if self.e != 0:
                raise ParameterError("rational mode requires e = 0")
            xi = Fraction(self.xi) if self.xi is not None else Fraction(2)
            if xi == 0 or abs(xi) == 1:
                raise ParameterError(f"xi={xi} has finite multiplicative order")
            object.__setattr__(self, "xi", xi)
        else:
            raise ParameterError(f"unknown field mode {self.mode!r}")

    @classmethod
    def prime_field(cls, p: int, e: int, xi: int | None = None) -> "FieldSpec":
        return cls(mode="prime", e=e, p=p, xi=xi)

    @classmethod
    def rational(cls, xi=Fraction(2)) -> "FieldSpec":
        return cls(mode="rational", e=0, xi=xi)

    # -- exact field operations ------------------------------------------

    def canon(self, a):
        return a % self.p if self.mode == "prime" else Fraction(a)

    def add(self, a, b):
        return (a + b) % self.p if self.mode == "prime" else a + b

    def sub(self, a, b):
        return (a - b) % self.p if self.mode == "prime" else a - b

    def neg(self, a):
        return (-a) % self.p if self.mode == "prime" else -a

    def mul(self, a, b):
        return (a * b) % self.p if self.mode == "prime" else a * b

    def inv(self, a):
        if self.mode == "prime":
            if a % self.p == 0:
                raise ZeroDivisionError("inversion of zero in F_p")
            return pow(a, self.p - 2, self.p)
        if a == 0:
            raise ZeroDivisionError("inversion of zero")
        return 1 / Fraction(a)

    def pow(self, a, k: int):
        if self.mode == "prime":
            return pow(a if k >= 0 else self.inv(a), abs(k), self.p)
        return Fraction(a) ** k

    def xi_pow(self, k: int):
        """xi**k; for residues in Z/eZ the exponent is well defined mod e."""
        if self.mode == "prime":
            return pow(self.xi, k % self.e, self.p)
        return self.xi ** k

    @property
    def one(self):
        return 1 if self.mode == "prime" else Fraction(1)

    @property
    def zero(self):
        return 0 if self.mode == "prime" else Fraction(0)

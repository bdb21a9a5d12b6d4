"""Laurent polynomials in one variable q with integer coefficients.

Canonical form: dict {exponent: coefficient} with no zero coefficients.
Used for graded dimensions, characters, and grading shifts.
"""


class LaurentPoly:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        if coeffs is None:
            coeffs = {}
        self.coeffs = {int(k): int(v) for k, v in coeffs.items() if v != 0}

    @classmethod
    def q_power(cls, n: int, coeff: int = 1) -> "LaurentPoly":
        return cls({n: coeff})

    @classmethod
    def zero(cls) -> "LaurentPoly":
        return cls({})

    @classmethod
    def one(cls) -> "LaurentPoly":
        return cls({0: 1})

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        return isinstance(other, LaurentPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(tuple(sorted(self.coeffs.items())))

    def __add__(self, other):
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            out[k] = out.get(k, 0) + v
        return LaurentPoly(out)

    def __sub__(self, other):
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            out[k] = out.get(k, 0) - v
        return LaurentPoly(out)

    def __mul__(self, other):
        if isinstance(other, int):
            return LaurentPoly({k: v * other for k, v in self.coeffs.items()})
        out = {}
        for k1, v1 in self.coeffs.items():
            for k2, v2 in other.coeffs.items():
                out[k1 + k2] = out.get(k1 + k2, 0) + v1 * v2
        return LaurentPoly(out)

    __rmul__ = __mul__

    def shift(self, m: int) -> "LaurentPoly":
        """Grading shift: multiply by q**m (degree n piece moves to n+m)."""
        return LaurentPoly({k + m: v for k, v in self.coeffs.items()})

    def __call__(self, q):
        """Evaluate at a numeric q."""
        return sum(v * q**k for k, v in self.coeffs.items())

    def at_one(self) -> int:
        return sum(self.coeffs.values())

    def items(self):
        return sorted(self.coeffs.items())

    def to_json(self) -> dict:
        return {str(k): v for k, v in self.items()}

    def __repr__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for k, v in self.items():
            if k == 0:
                terms.append(str(v))
            else:
                base = "q" if k == 1 else f"q^{k}"
                terms.append(base if v == 1 else f"{v}*{base}")
        return " + ".join(terms)

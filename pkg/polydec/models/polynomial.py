"""
Exact sparse polynomials in x, y, z for polydec.

A Polynomial is an immutable map from Monomial exponent triples to nonzero
Python integers (arbitrary precision). The zero polynomial is the empty map and
constants live on the monomial (0, 0, 0). Univariate polynomials simply keep
the y and z exponents at zero.
"""

from enum import Enum
from typing import Any, Iterable, Iterator, Mapping, NamedTuple, Union


class PolynomialKind(str, Enum):
    """The four graph polynomial families."""
    INDEPENDENCE = "independence"
    CHROMATIC = "chromatic"
    DOMINATION = "domination"
    BIPARTITION = "bipartition"


class Monomial(NamedTuple):
    """Exponent triple of x^i y^j z^k."""
    x: int = 0
    y: int = 0
    z: int = 0

    def __mul__(self, other: "Monomial") -> "Monomial":  # type: ignore[override]
        return Monomial(self.x + other.x, self.y + other.y, self.z + other.z)


ONE = Monomial(0, 0, 0)

Scalar = int
PolynomialLike = Union["Polynomial", int]


class Polynomial:
    """Sparse multivariate polynomial with integer coefficients."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, int] | Iterable[tuple[Monomial, int]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        collected: dict[Monomial, int] = {}
        for monomial, coefficient in items:
            monomial = Monomial(*monomial)
            if min(monomial) < 0:
                raise ValueError(f"negative exponent in {tuple(monomial)}")
            collected[monomial] = collected.get(monomial, 0) + int(coefficient)
        self._terms: dict[Monomial, int] = {
            m: c for m, c in sorted(collected.items()) if c != 0
        }
        self._hash: int | None = None

    # =========================================================================
    # Constructors
    # =========================================================================

    @classmethod
    def zero(cls) -> "Polynomial":
        return cls()

    @classmethod
    def constant(cls, c: int) -> "Polynomial":
        return cls({ONE: c})

    @classmethod
    def monomial(cls, coefficient: int = 1, x: int = 0, y: int = 0, z: int = 0) -> "Polynomial":
        """Single term coefficient * x^x y^y z^z."""
        return cls({Monomial(x, y, z): coefficient})

    @classmethod
    def from_coefficients(cls, coefficients: Iterable[int]) -> "Polynomial":
        """Univariate polynomial in x from ascending coefficients [c0, c1, ...]."""
        return cls({Monomial(i, 0, 0): c for i, c in enumerate(coefficients)})

    @classmethod
    def from_json(cls, data: Iterable[Mapping[str, Any]]) -> "Polynomial":
        """Inverse of to_json_data(); coefficients may be strings or ints."""
        from ..parsers.polynomial_parser import PolynomialParser

        return PolynomialParser.parse_json(data)

    @classmethod
    def parse(cls, text: str) -> "Polynomial":
        """Parse the text rendering, e.g. '1 + 6*x + 8*x^2'."""
        from ..parsers.polynomial_parser import PolynomialParser

        return PolynomialParser.parse(text)

    # =========================================================================
    # Inspection
    # =========================================================================

    @property
    def terms(self) -> dict[Monomial, int]:
        """Copy of the term map, ordered by (exp_x, exp_y, exp_z)."""
        return dict(self._terms)

    def items(self) -> Iterator[tuple[Monomial, int]]:
        return iter(self._terms.items())

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def coefficient_of(self, monomial: Monomial | tuple[int, int, int]) -> int:
        """Stored coefficient of a monomial, 0 when absent."""
        return self._terms.get(Monomial(*monomial), 0)

    def degree_in_x(self) -> int | float:
        """Largest x exponent; float('-inf') for the zero polynomial."""
        if not self._terms:
            return float("-inf")
        return max(m.x for m in self._terms)

    def lowest_degree_in_x(self) -> int | float:
        """Smallest x exponent; float('inf') for the zero polynomial."""
        if not self._terms:
            return float("inf")
        return min(m.x for m in self._terms)

    def leading_coefficient_in_x(self) -> int:
        """Sum of coefficients on the highest x power (0 for the zero polynomial)."""
        if not self._terms:
            return 0
        top = self.degree_in_x()
        return sum(c for m, c in self._terms.items() if m.x == top)

    def is_univariate(self) -> bool:
        return all(m.y == 0 and m.z == 0 for m in self._terms)

    def evaluate(self, x0: int = 1, y0: int = 1, z0: int = 1) -> int:
        """Exact evaluation at an integer point."""
        return sum(c * x0 ** m.x * y0 ** m.y * z0 ** m.z for m, c in self._terms.items())

    def total(self) -> int:
        """Sum of all coefficients (evaluation at x = y = z = 1)."""
        return sum(self._terms.values())

    # =========================================================================
    # Arithmetic
    # =========================================================================

    @staticmethod
    def _coerce(other: PolynomialLike) -> "Polynomial":
        if isinstance(other, Polynomial):
            return other
        if isinstance(other, int):
            return Polynomial.constant(other)
        return NotImplemented

    def __add__(self, other: PolynomialLike) -> "Polynomial":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        terms = dict(self._terms)
        for m, c in other._terms.items():
            terms[m] = terms.get(m, 0) + c
        return Polynomial(terms)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial({m: -c for m, c in self._terms.items()})

    def __sub__(self, other: PolynomialLike) -> "Polynomial":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: PolynomialLike) -> "Polynomial":
        return (-self) + other

    def __mul__(self, other: PolynomialLike) -> "Polynomial":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        terms: dict[Monomial, int] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = m1 * m2
                terms[m] = terms.get(m, 0) + c1 * c2
        return Polynomial(terms)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "Polynomial":
        if exponent < 0:
            raise ValueError("negative powers are not polynomials")
        result = Polynomial.constant(1)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = Polynomial.constant(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(tuple(self._terms.items()))
        return self._hash

    # =========================================================================
    # Rendering
    # =========================================================================

    def to_text(self) -> str:
        """Render as '1 + 6*x + 8*x^2' (ascending, binary minus, coefficient 1 elided)."""
        if not self._terms:
            return "0"
        pieces = []
        for i, (m, c) in enumerate(self._terms.items()):
            factors = [
                name if power == 1 else f"{name}^{power}"
                for name, power in zip("xyz", m)
                if power
            ]
            magnitude = abs(c)
            if factors:
                body = "*".join(factors if magnitude == 1 else [str(magnitude)] + factors)
            else:
                body = str(magnitude)
            if i == 0:
                pieces.append(f"-{body}" if c < 0 else body)
            else:
                pieces.append(f" - {body}" if c < 0 else f" + {body}")
        return "".join(pieces)

    def to_latex(self) -> str:
        """Render as '1+6x+8x^{2}'."""
        if not self._terms:
            return "0"
        pieces = []
        for i, (m, c) in enumerate(self._terms.items()):
            factors = "".join(
                name if power == 1 else f"{name}^{{{power}}}"
                for name, power in zip("xyz", m)
                if power
            )
            magnitude = abs(c)
            body = factors if factors and magnitude == 1 else f"{magnitude}{factors}"
            sign = "-" if c < 0 else ("" if i == 0 else "+")
            pieces.append(f"{sign}{body}")
        return "".join(pieces)

    def to_json_data(self) -> list[dict[str, Any]]:
        """List of {"x","y","z","c"} records in monomial order; c is a decimal string."""
        return [
            {"x": m.x, "y": m.y, "z": m.z, "c": str(c)}
            for m, c in sorted(self._terms.items())
        ]

    def __str__(self) -> str:
        return self.to_text()

    def __repr__(self) -> str:
        return f"Polynomial({self.to_text()!r})"

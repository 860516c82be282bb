"""
Read-back of polynomial renderings.

Accepts the text rendering produced by Polynomial.to_text() (whitespace is
ignored, so "1+6*x+8*x^2" also parses) and the JSON term list produced by
Polynomial.to_json_data().
"""

from typing import Any, Iterable, Mapping

from ..errors import PolynomialParseError
from ..models.polynomial import Monomial, Polynomial
from .patterns import PATTERN_POLY_FACTOR, PATTERN_POLY_TERM


class PolynomialParser:
    """Parser for polynomial text and JSON."""

    @classmethod
    def parse(cls, text: str) -> Polynomial:
        """
        Parse text such as '1 + 6*x + 8*x^2' or '-4*x + 16*x^2'.

        Raises:
            PolynomialParseError: if a term or factor is not recognised
        """
        compact = "".join(text.split())
        if not compact:
            raise PolynomialParseError("empty polynomial text")

        terms: dict[Monomial, int] = {}
        position = 0
        for match in PATTERN_POLY_TERM.finditer(compact):
            if match.start() != position:
                raise PolynomialParseError(f"dangling sign at offset {position} in {text!r}")
            position = match.end()
            sign = -1 if match.group(1) == "-" else 1
            monomial, coefficient = cls._parse_term(match.group(2), text)
            terms[monomial] = terms.get(monomial, 0) + sign * coefficient

        if position != len(compact):
            raise PolynomialParseError(f"trailing sign in {text!r}")
        return Polynomial(terms)

    @classmethod
    def _parse_term(cls, term: str, text: str) -> tuple[Monomial, int]:
        coefficient = 1
        powers = {"x": 0, "y": 0, "z": 0}
        for factor in term.split("*"):
            match = PATTERN_POLY_FACTOR.match(factor)
            if not match:
                raise PolynomialParseError(f"cannot read factor {factor!r} in {text!r}")
            number, variable, power = match.groups()
            if number is not None:
                coefficient *= int(number)
            else:
                powers[variable] += int(power) if power else 1
        return Monomial(powers["x"], powers["y"], powers["z"]), coefficient

    @classmethod
    def parse_json(cls, data: Iterable[Mapping[str, Any]]) -> Polynomial:
        """
        Rebuild a polynomial from [{"x","y","z","c"}, ...] records.

        Raises:
            PolynomialParseError: on missing coefficients or non-integer values
        """
        terms: dict[Monomial, int] = {}
        try:
            for record in data:
                monomial = Monomial(
                    int(record.get("x", 0)), int(record.get("y", 0)), int(record.get("z", 0))
                )
                terms[monomial] = terms.get(monomial, 0) + int(record["c"])
        except (KeyError, TypeError, ValueError, AttributeError) as e:
            raise PolynomialParseError(f"malformed polynomial JSON: {e}") from e
        return Polynomial(terms)

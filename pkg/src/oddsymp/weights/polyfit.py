"""Exact rational interpolation of integer sequences."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence


class InconsistentData(ValueError):
    """No polynomial within the requested degree bound fits the points."""


@dataclass(frozen=True)
class PolynomialFit:
    coefficients: tuple[Fraction, ...]  # constant term first
    degree: int
    points: int

    @property
    def spare_checks(self) -> int:
        """Points beyond the degree + 1 needed to determine the polynomial."""
        return self.points - self.degree - 1

    def __call__(self, x) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coefficients):
            acc = acc * x + c
        return acc

    def __str__(self) -> str:
        terms = []
        for k in range(len(self.coefficients) - 1, -1, -1):
            c = self.coefficients[k]
            if c == 0:
                continue
            mono = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
            if mono and c in (1, -1):
                coef = "-" if c == -1 else ""
            else:
                coef = str(c) + ("*" if mono else "")
            terms.append(coef + mono)
        return " + ".join(terms).replace("+ -", "- ") or "0"

    def as_dict(self) -> dict:
        return {
            "degree": self.degree,
            "coefficients": [str(c) for c in self.coefficients],
            "polynomial": str(self),
            "points": self.points,
            "spare_checks": self.spare_checks,
        }


def fit_polynomial(
    points: Iterable[tuple[int | Fraction, int | Fraction]], max_degree: int | None = None
) -> PolynomialFit:
    """Minimal-degree polynomial through all points, via Newton divided differences."""
    pts = [(Fraction(x), Fraction(y)) for x, y in points]
    if len(pts) < 2:
        raise ValueError("need at least two points")
    xs = [x for x, _ in pts]
    if len(set(xs)) != len(xs):
        raise ValueError("repeated abscissa")
    # divided-difference table, keeping the top edge
    column = [y for _, y in pts]
    newton = [column[0]]
    for level in range(1, len(pts)):
        column = [
            (column[i + 1] - column[i]) / (xs[i + level] - xs[i]) for i in range(len(column) - 1)
        ]
        newton.append(column[0])
    degree = max((k for k, c in enumerate(newton) if c), default=0)
    if max_degree is not None and degree > max_degree:
        raise InconsistentData(f"data needs degree {degree} > {max_degree}")
    # expand sum newton[k] prod_(i<k) (x - x_i) into monomials
    coeffs = [Fraction(0)] * (degree + 1)
    basis = [Fraction(1)]
    for k in range(degree + 1):
        for i, b in enumerate(basis):
            coeffs[i] += newton[k] * b
        basis = [Fraction(0)] + basis
        for i in range(len(basis) - 1):
            basis[i] -= xs[k] * basis[i + 1]
    return PolynomialFit(tuple(coeffs), degree, len(pts))


def fit_values(args: Sequence, values: Sequence, max_degree: int | None = None) -> PolynomialFit:
    return fit_polynomial(zip(args, values), max_degree)

"""Lefschetz numbers and the Lefschetz zeta function of a surface map."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import NotSquare
from .linalg import MatrixQ, det_one_minus_tA, trace_power
from .ring import RationalFunction, TruncatedSeries, rf_log_derivative_t, series_exp

__all__ = [
    "GradedAction",
    "lefschetz_number",
    "zeta_function",
    "zeta_log_derivative",
    "zeta_series_from_lefschetz",
]


@dataclass(frozen=True)
class GradedAction:
    """Square matrices ``(A0, A1, A2)`` of a map acting in degrees 0, 1, 2."""

    maps: tuple[MatrixQ, MatrixQ, MatrixQ]

    def __post_init__(self):
        maps = tuple(self.maps)
        if len(maps) != 3:
            raise ValueError(f"a surface has exactly three homology degrees, got {len(maps)}")
        for i, A in enumerate(maps):
            if not A.is_square():
                raise NotSquare(f"degree {i} map is {A.rows}x{A.cols}")
        object.__setattr__(self, "maps", maps)

    @classmethod
    def of(cls, A0, A1, A2) -> GradedAction:
        return cls(tuple(A if isinstance(A, MatrixQ) else _matrix(A) for A in (A0, A1, A2)))

    def __getitem__(self, i: int) -> MatrixQ:
        return self.maps[i]

    @property
    def dims(self) -> tuple[int, int, int]:
        return tuple(A.rows for A in self.maps)


def _matrix(rows: Sequence[Sequence]) -> MatrixQ:
    rows = list(rows)
    return MatrixQ(rows, rows=len(rows), cols=len(rows[0]) if rows else 0)


def lefschetz_number(g: GradedAction, k: int) -> Fraction:
    """``L(phi^k) = sum_i (-1)^i Tr(A_i^k)``."""
    if k < 1:
        raise ValueError("Lefschetz numbers are defined here for k >= 1")
    return sum(((-1) ** i * trace_power(A, k) for i, A in enumerate(g.maps)), Fraction(0))


def zeta_function(g: GradedAction) -> RationalFunction:
    """``det(1 - tA1) / (det(1 - tA0) det(1 - tA2))``."""
    A0, A1, A2 = g.maps
    return RationalFunction(det_one_minus_tA(A1), det_one_minus_tA(A0) * det_one_minus_tA(A2))


def zeta_log_derivative(g: GradedAction) -> RationalFunction:
    """``t zeta'/zeta``; its ``t^k`` coefficient is ``L(phi^k)``."""
    return rf_log_derivative_t(zeta_function(g))


def zeta_series_from_lefschetz(g: GradedAction, order: int) -> TruncatedSeries:
    """``exp(sum_{k=1}^{order} L(phi^k) t^k / k)`` truncated at ``t^order``."""
    if order < 0:
        raise ValueError("order must be non-negative")
    coeffs = [Fraction(0)] + [lefschetz_number(g, k) / k for k in range(1, order + 1)]
    return series_exp(TruncatedSeries(coeffs, order=order))

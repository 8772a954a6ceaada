"""Exact row reduction over the rationals."""

from fractions import Fraction
from typing import Hashable, Iterable, Mapping, Optional

Row = dict[Hashable, Fraction]


class EchelonBasis:
    """
    An incrementally built echelon basis of sparse rational row vectors.

    Each accepted row is reduced against the earlier pivots; its pivot is the
    entry with the smallest numerator magnitude (ties broken by key order), so
    the basis depends only on the order rows are added.
    """

    def __init__(self) -> None:
        self._pivots: list[tuple[Hashable, Row]] = []

    @property
    def rank(self) -> int:
        return len(self._pivots)

    def reduce(self, row: Mapping[Hashable, Fraction]) -> Row:
        """The remainder of `row` after elimination against the current pivots."""
        remainder: Row = {k: Fraction(v) for k, v in row.items() if v != 0}
        for column, pivot_row in self._pivots:
            factor = remainder.get(column)
            if not factor:
                continue
            for key, value in pivot_row.items():
                updated = remainder.get(key, Fraction(0)) - factor * value
                if updated:
                    remainder[key] = updated
                else:
                    remainder.pop(key, None)
        return remainder

    def add(self, row: Mapping[Hashable, Fraction]) -> bool:
        """Add a row; returns False when it already lies in the span."""
        remainder = self.reduce(row)
        if not remainder:
            return False
        column = min(remainder, key=lambda k: (abs(remainder[k].numerator), repr(k)))
        lead = remainder[column]
        self._pivots.append((column, {k: v / lead for k, v in remainder.items()}))
        return True

    def contains(self, row: Mapping[Hashable, Fraction]) -> bool:
        return not self.reduce(row)


def rank(rows: Iterable[Mapping[Hashable, Fraction]], limit: Optional[int] = None) -> int:
    """Rank of the span of `rows`, stopping early once `limit` is reached."""
    basis = EchelonBasis()
    for row in rows:
        if limit is not None and basis.rank >= limit:
            break
        basis.add(row)
    return basis.rank

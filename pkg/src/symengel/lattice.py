"""Exact integer lattices in row Hermite normal form.

Conventions: a lattice is the Z-row-span of an integer matrix.  Its canonical
basis is the row HNF: nonzero rows only, pivot columns strictly increasing,
pivots positive, and entries above each pivot reduced into ``[0, pivot)``.
All arithmetic uses Python ints, so there is no overflow.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Mapping, Sequence

from .tensor_core import Tensor, Word

Matrix = list[list[int]]
INFINITE = math.inf


class DimensionMismatchError(ValueError):
    pass


class NotASublatticeError(ValueError):
    pass


def hnf_rows(rows: Sequence[Sequence[int]], ncols: int | None = None) -> tuple[tuple[int, ...], ...]:
    """Row Hermite normal form of an integer matrix, zero rows dropped."""
    a = [list(map(int, r)) for r in rows]
    if ncols is None:
        ncols = len(a[0]) if a else 0
    for r in a:
        if len(r) != ncols:
            raise DimensionMismatchError(f"row of length {len(r)} in a matrix with {ncols} columns")
    a = [r for r in a if any(r)]
    pivot_row = 0
    pivots: list[int] = []
    for col in range(ncols):
        if pivot_row == len(a):
            break
        # Euclid on the column: keep pulling the smallest nonzero entry up
        # until it divides (and has cleared) everything below.
        while True:
            live = [i for i in range(pivot_row, len(a)) if a[i][col]]
            if not live:
                break
            best = min(live, key=lambda i: abs(a[i][col]))
            a[pivot_row], a[best] = a[best], a[pivot_row]
            piv = a[pivot_row]
            done = True
            for i in range(pivot_row + 1, len(a)):
                entry = a[i][col]
                if entry:
                    q = entry // piv[col]
                    row = a[i]
                    for c in range(col, ncols):
                        if piv[c]:
                            row[c] -= q * piv[c]
                    if row[col]:
                        done = False
            if done:
                break
        if not any(a[i][col] for i in range(pivot_row, len(a))):
            continue
        piv = a[pivot_row]
        if piv[col] < 0:
            a[pivot_row] = piv = [-x for x in piv]
        p = piv[col]
        for i in range(pivot_row):
            q = a[i][col] // p
            if q:
                row = a[i]
                for c in range(col, ncols):
                    if piv[c]:
                        row[c] -= q * piv[c]
        pivots.append(col)
        pivot_row += 1
        # drop rows that became zero so later scans stay short
        a = a[:pivot_row] + [r for r in a[pivot_row:] if any(r)]
    return tuple(tuple(r) for r in a[:pivot_row])


@dataclass(frozen=True)
class Lattice:
    """A sublattice of Z^ncols, stored by its HNF basis.

    ``words`` optionally names the columns (one word per coordinate) so that
    tensors can be tested for membership directly.
    """

    rows: tuple[tuple[int, ...], ...]
    ncols: int
    words: tuple[Word, ...] | None = None

    def __post_init__(self):
        if self.words is not None and len(self.words) != self.ncols:
            raise DimensionMismatchError(f"{len(self.words)} column words for {self.ncols} columns")

    @property
    def rank(self) -> int:
        return len(self.rows)

    @property
    def pivots(self) -> list[int]:
        return [next(c for c, x in enumerate(r) if x) for r in self.rows]

    def column_of(self) -> Mapping[Word, int]:
        if self.words is None:
            raise DimensionMismatchError("lattice has no word labels")
        return {w: i for i, w in enumerate(self.words)}

    def __contains__(self, item) -> bool:
        return contains(self, item)[0]


def hnf(rows: Sequence[Sequence[int]], ncols: int | None = None, words: Sequence[Word] | None = None) -> Lattice:
    if ncols is None:
        ncols = len(words) if words is not None else (len(rows[0]) if rows else 0)
    return Lattice(hnf_rows(rows, ncols), ncols, tuple(words) if words is not None else None)


def lattice_of_tensors(tensors: Sequence[Tensor], words: Sequence[Word]) -> Lattice:
    """HNF of the span of ``tensors`` in the coordinates given by ``words``."""
    words = tuple(words)
    column = {w: i for i, w in enumerate(words)}
    rows = []
    for t in tensors:
        try:
            rows.append(t.to_vector(column, len(words)))
        except KeyError as exc:
            raise DimensionMismatchError(f"word {exc.args[0]} not in the ambient basis") from None
    return hnf(rows, len(words), words)


def _as_vector(lat: Lattice, item) -> list[int]:
    if isinstance(item, Tensor):
        column = lat.column_of()
        try:
            return item.to_vector(column, lat.ncols)
        except KeyError as exc:
            raise DimensionMismatchError(f"word {exc.args[0]} not in the ambient basis") from None
    vec = [int(x) for x in item]
    if len(vec) != lat.ncols:
        raise DimensionMismatchError(f"vector of length {len(vec)} in ambient dimension {lat.ncols}")
    return vec


def contains(lat: Lattice, item) -> tuple[bool, tuple[int, ...] | None]:
    """Membership test returning ``(True, coords)`` or ``(False, None)``.

    ``coords`` is the unique integer vector with ``item == coords @ lat.rows``.
    """
    vec = _as_vector(lat, item)
    coords = []
    start = 0
    for row, piv in zip(lat.rows, lat.pivots):
        if any(vec[start:piv]):
            return False, None
        q, r = divmod(vec[piv], row[piv])
        if r:
            return False, None
        if q:
            for c in range(piv, lat.ncols):
                if row[c]:
                    vec[c] -= q * row[c]
        coords.append(q)
        start = piv
    if any(vec):
        return False, None
    return True, tuple(coords)


def rank(lat: Lattice) -> int:
    return lat.rank


def index(sup: Lattice, sub: Lattice) -> int | float:
    """``[sup : sub]``; ``math.inf`` when ``sub`` has smaller rank.

    Raises :class:`NotASublatticeError` if some basis row of ``sub`` is not
    in ``sup``.  The finite value is the product of the HNF pivots of
    ``sub`` written in ``sup``-coordinates, i.e. ``|det|`` of the change of
    basis.
    """
    if sup.ncols != sub.ncols:
        raise DimensionMismatchError(f"ambient dimensions {sup.ncols} and {sub.ncols} differ")
    coords = []
    for row in sub.rows:
        ok, c = contains(sup, row)
        if not ok:
            raise NotASublatticeError(f"row {row} of the sublattice is not in the superlattice")
        coords.append(c)
    if sub.rank < sup.rank:
        return INFINITE
    reduced = hnf_rows(coords, sup.rank)
    return math.prod(r[i] for i, r in enumerate(reduced))


def same_lattice(a: Lattice, b: Lattice) -> bool:
    return a.ncols == b.ncols and a.rows == b.rows

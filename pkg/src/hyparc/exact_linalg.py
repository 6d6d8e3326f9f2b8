"""Exact linear algebra over the rationals.

Vectors are tuples of ``fractions.Fraction``.  A subspace is stored by its
reduced row-echelon basis (every pivot 1, pivots strictly increasing, zeros
above and below each pivot), which makes the representation canonical: two
subspaces are equal iff their basis tuples are equal.  No floating point is
used anywhere; every operation is exact.

Covector spaces (linear forms) and point spaces share this machinery; the
semantic split is maintained by the callers (see ``zero_set``, which maps a
space of forms to the point space they annihilate).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Optional, Sequence

Vector = tuple[Fraction, ...]

_ZERO = Fraction(0)
_ONE = Fraction(1)


class DimensionMismatchError(ValueError):
    """Operands live in different ambient dimensions."""


class InternalError(RuntimeError):
    """A state the underlying theory rules out. Indicates a bug, not bad input."""


def vector(coords: Iterable) -> Vector:
    """Coerce an iterable of exact scalars (int/Fraction/str) to a Vector."""
    return tuple(Fraction(c) for c in coords)


def primitive_vector(coords: Sequence[Fraction]) -> tuple[int, ...]:
    """Canonical integer representative of a projective class.

    Clears denominators, divides by the gcd, and makes the first nonzero
    entry positive.  Raises on the zero vector (it has no projective class).
    """
    fracs = [Fraction(c) for c in coords]
    if all(c == 0 for c in fracs):
        raise ValueError("zero vector has no primitive representative")
    denom_lcm = 1
    for c in fracs:
        denom_lcm = denom_lcm * c.denominator // gcd(denom_lcm, c.denominator)
    ints = [int(c * denom_lcm) for c in fracs]
    g = 0
    for v in ints:
        g = gcd(g, v)
    ints = [v // g for v in ints]
    first = next(v for v in ints if v != 0)
    if first < 0:
        ints = [-v for v in ints]
    return tuple(ints)


def _rref(rows: Iterable[Sequence[Fraction]], width: int) -> list[list[Fraction]]:
    """Reduced row echelon form; returns only the nonzero rows."""
    mat = [list(r) for r in rows]
    row = 0
    for col in range(width):
        pivot = next((i for i in range(row, len(mat)) if mat[i][col] != 0), None)
        if pivot is None:
            continue
        mat[row], mat[pivot] = mat[pivot], mat[row]
        inv = mat[row][col]
        if inv != 1:
            mat[row] = [x / inv for x in mat[row]]
        for i in range(len(mat)):
            if i != row and mat[i][col] != 0:
                factor = mat[i][col]
                mat[i] = [a - factor * b for a, b in zip(mat[i], mat[row])]
        row += 1
        if row == len(mat):
            break
    return mat[:row]


@dataclass(frozen=True)
class Subspace:
    """A linear subspace in canonical (reduced row-echelon) basis form."""

    ambient_dim: int
    basis: tuple[Vector, ...]

    @property
    def rank(self) -> int:
        return len(self.basis)

    @property
    def is_zero(self) -> bool:
        return not self.basis

    def __post_init__(self):
        for b in self.basis:
            if len(b) != self.ambient_dim:
                raise DimensionMismatchError(
                    f"basis vector of length {len(b)} in ambient dimension "
                    f"{self.ambient_dim}"
                )


def span(vectors: Iterable[Sequence[Fraction]], ambient_dim: Optional[int] = None) -> Subspace:
    """Canonical subspace spanned by the given vectors.

    ``ambient_dim`` is required when ``vectors`` is empty (the zero space has
    no vector to infer it from).
    """
    vecs = [vector(v) for v in vectors]
    if ambient_dim is None:
        if not vecs:
            raise ValueError("ambient_dim is required for an empty span")
        ambient_dim = len(vecs[0])
    for v in vecs:
        if len(v) != ambient_dim:
            raise DimensionMismatchError(
                f"vector of length {len(v)} in ambient dimension {ambient_dim}"
            )
    reduced = _rref(vecs, ambient_dim)
    return Subspace(ambient_dim, tuple(tuple(r) for r in reduced))


def zero_space(ambient_dim: int) -> Subspace:
    return Subspace(ambient_dim, ())


def full_space(ambient_dim: int) -> Subspace:
    rows = []
    for i in range(ambient_dim):
        row = [_ZERO] * ambient_dim
        row[i] = _ONE
        rows.append(tuple(row))
    return Subspace(ambient_dim, tuple(rows))


def _check_same_ambient(u: Subspace, v: Subspace) -> None:
    if u.ambient_dim != v.ambient_dim:
        raise DimensionMismatchError(
            f"ambient dimensions differ: {u.ambient_dim} vs {v.ambient_dim}"
        )


def sum_spaces(u: Subspace, v: Subspace) -> Subspace:
    """Canonical span of the union of the two bases."""
    _check_same_ambient(u, v)
    return span(list(u.basis) + list(v.basis), u.ambient_dim)


def intersect(u: Subspace, v: Subspace) -> Subspace:
    """Intersection via the Zassenhaus block construction.

    Row-reduce the block matrix [[U | U], [V | 0]]; rows whose left half
    vanished carry a basis of the intersection in their right half.
    """
    _check_same_ambient(u, v)
    n = u.ambient_dim
    rows: list[list[Fraction]] = []
    for b in u.basis:
        rows.append(list(b) + list(b))
    for b in v.basis:
        rows.append(list(b) + [_ZERO] * n)
    reduced = _rref(rows, 2 * n)
    inter = [row[n:] for row in reduced if all(x == 0 for x in row[:n])]
    return span(inter, n)


def contains(u: Subspace, x: Sequence[Fraction]) -> bool:
    """Exact membership test: is x in u?"""
    vec = vector(x)
    if len(vec) != u.ambient_dim:
        raise DimensionMismatchError(
            f"vector of length {len(vec)} in ambient dimension {u.ambient_dim}"
        )
    return all(c == 0 for c in _reduce_against(u.basis, vec))


def _reduce_against(basis: Sequence[Vector], vec: Vector) -> list[Fraction]:
    """Residual of vec after elimination against an RREF basis."""
    res = list(vec)
    for row in basis:
        pivot = next(i for i, x in enumerate(row) if x != 0)
        if res[pivot] != 0:
            factor = res[pivot]
            res = [a - factor * b for a, b in zip(res, row)]
    return res


def nullspace(rows: Iterable[Sequence[Fraction]], width: int) -> Subspace:
    """Canonical basis of {x : Rx = 0} for the given row matrix."""
    reduced = _rref([vector(r) for r in rows], width)
    pivots = [next(i for i, x in enumerate(row) if x != 0) for row in reduced]
    free = [j for j in range(width) if j not in pivots]
    basis = []
    for f in free:
        vec = [_ZERO] * width
        vec[f] = _ONE
        for row, p in zip(reduced, pivots):
            vec[p] = -row[f]
        basis.append(vec)
    return span(basis, width)


def zero_set(forms: Subspace) -> Subspace:
    """Point space annihilated by a space of linear forms.

    The rank is the ambient dimension minus the rank of the forms; the
    projective dimension of the zero set is that minus one (with the empty
    set assigned dimension -1).
    """
    return nullspace(forms.basis, forms.ambient_dim)


def solve_coordinates(rows: Sequence[Vector], target: Sequence[Fraction]) -> Optional[list[Fraction]]:
    """Coordinates of target in the (independent) row list, or None.

    Solves sum_i x_i rows[i] = target by elimination on the transpose.
    """
    if not rows:
        return [] if all(Fraction(c) == 0 for c in target) else None
    width = len(rows[0])
    tgt = vector(target)
    if len(tgt) != width:
        raise DimensionMismatchError("target length differs from row length")
    k = len(rows)
    # Augmented system: columns are the rows, last column is the target.
    aug = [[rows[j][i] for j in range(k)] + [tgt[i]] for i in range(width)]
    reduced = _rref(aug, k + 1)
    coords: list[Fraction] = [_ZERO] * k
    for row in reduced:
        pivot = next(i for i, x in enumerate(row) if x != 0)
        if pivot == k:
            return None  # inconsistent: target outside the span
        coords[pivot] = row[k]
    return coords

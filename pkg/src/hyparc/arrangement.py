"""Hyperplane arrangements in projective n-space.

An arrangement is a deduplicated set of nonzero linear forms in n+1
variables, one per hyperplane, each canonicalized to a primitive integer
vector.  Profiling computes the key combinatorial statistics:

* ``m``  -- projective dimension of the common intersection of all
  hyperplanes (the empty set counts as dimension -1),
* ``s``  -- the largest number of hyperplanes with nonempty common
  intersection,
* general position -- every subset of min(r, n+1) forms is independent.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from .exact_linalg import Vector, primitive_vector, span, vector


class ArrangementError(ValueError):
    """Invalid arrangement input (zero form, wrong arity, empty list...)."""


@dataclass(frozen=True, order=True)
class LinearForm:
    """A projective covector, canonicalized to a primitive integer vector."""

    coeffs: tuple[int, ...]

    @classmethod
    def from_coefficients(cls, coords: Sequence) -> "LinearForm":
        return cls(primitive_vector([Fraction(c) for c in coords]))

    def vector(self) -> Vector:
        return vector(self.coeffs)


@dataclass(frozen=True)
class Arrangement:
    """The set of defining forms plus the ambient projective dimension n."""

    n: int
    forms: tuple[LinearForm, ...]
    warnings: tuple[str, ...] = ()

    @property
    def r(self) -> int:
        return len(self.forms)

    def form_vectors(self) -> list[Vector]:
        return [f.vector() for f in self.forms]


@dataclass(frozen=True)
class ArrangementProfile:
    m: int
    r: int
    s: int
    general_position: bool


def load(n: int, raw_forms: Sequence[Sequence]) -> Arrangement:
    """Canonicalize, deduplicate and sort the input forms.

    Forms are deduplicated by projective class (proportional forms collapse,
    with a warning) and sorted lexicographically on their canonical integer
    coefficients, so every downstream enumeration order is deterministic.
    """
    if n < 1:
        raise ArrangementError(f"ambient projective dimension must be >= 1, got {n}")
    if not raw_forms:
        raise ArrangementError("empty form list")
    canonical: list[LinearForm] = []
    warnings: list[str] = []
    seen: dict[tuple[int, ...], int] = {}
    for idx, raw in enumerate(raw_forms):
        coords = [Fraction(c) for c in raw]
        if len(coords) != n + 1:
            raise ArrangementError(
                f"form {idx} has {len(coords)} coefficients, expected {n + 1}"
            )
        if all(c == 0 for c in coords):
            raise ArrangementError(f"form {idx} is the zero form")
        form = LinearForm.from_coefficients(coords)
        if form.coeffs in seen:
            warnings.append(
                f"form {idx} is proportional to form {seen[form.coeffs]}; deduplicated"
            )
            continue
        seen[form.coeffs] = idx
        canonical.append(form)
    canonical.sort()
    return Arrangement(n=n, forms=tuple(canonical), warnings=tuple(warnings))


def compute_m(a: Arrangement) -> int:
    """Projective dimension of the common intersection of all hyperplanes."""
    return a.n - span(a.form_vectors(), a.n + 1).rank


def compute_s(a: Arrangement) -> int:
    """Largest subset size with nonempty common projective intersection.

    Maximizes |T| subject to rank(span T) <= n.  Rank is monotone in the
    subset, so the search grows subsets incrementally and prunes any branch
    whose rank reaches n+1; a dependent form is always taken (it enlarges the
    subset without changing the rank).
    """
    vecs = a.form_vectors()
    r, cap = len(vecs), a.n
    best = 0

    def reduce(rows: list[list[Fraction]], v: Vector) -> list[Fraction]:
        res = list(v)
        for row in rows:
            pivot = next(i for i, x in enumerate(row) if x != 0)
            if res[pivot] != 0:
                factor = res[pivot] / row[pivot]
                res = [x - factor * y for x, y in zip(res, row)]
        return res

    def dfs(i: int, rows: list[list[Fraction]], count: int) -> None:
        nonlocal best
        if count + (r - i) <= best:
            return
        if i == r:
            best = max(best, count)
            return
        res = reduce(rows, vecs[i])
        if all(x == 0 for x in res):
            dfs(i + 1, rows, count + 1)  # free: rank unchanged
        else:
            if len(rows) < cap:
                dfs(i + 1, rows + [res], count + 1)
            dfs(i + 1, rows, count)

    dfs(0, [], 0)
    return best


def is_general_position(a: Arrangement) -> bool:
    """Every subset of min(r, n+1) forms is linearly independent."""
    vecs = a.form_vectors()
    k = min(a.r, a.n + 1)
    return all(span(combo, a.n + 1).rank == k for combo in combinations(vecs, k))


def profile(a: Arrangement) -> ArrangementProfile:
    return ArrangementProfile(
        m=compute_m(a),
        r=a.r,
        s=compute_s(a),
        general_position=is_general_position(a),
    )

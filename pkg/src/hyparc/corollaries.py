"""Independent verdicts used as cross-checks against the partition search.

* Finiteness / hyperbolicity: the common intersection is empty and, for
  every proper nonempty subset of the forms, some form lies in the span of
  the subset intersected with the span of its complement.  This is decided
  by a direct bipartition scan, independent of the search module.
* General-position bound: when more hyperplanes than can meet at a point,
  the maximal dimension is at most floor(s / (r - s)), with equality for
  arrangements in general position.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .arrangement import Arrangement, compute_m, compute_s
from .dimension_search import DimensionReport
from .exact_linalg import contains, intersect, span

BIPARTITION_SCAN_LIMIT = 22


@dataclass(frozen=True)
class Verdict:
    finiteness: bool
    gp_bound: Optional[int]
    gp_bound_achieved: Optional[bool]


def finiteness_verdict(a: Arrangement) -> bool:
    """True iff every point set on the complement is finite.

    Equivalently the complement is Brody hyperbolic.  Scans every proper
    nonempty subset (up to complement symmetry) with early exit on the first
    subset whose span/complement-span overlap misses all forms.
    """
    if a.r > BIPARTITION_SCAN_LIMIT:
        raise ValueError(
            f"finiteness scan refused: {a.r} forms exceeds {BIPARTITION_SCAN_LIMIT}"
        )
    if compute_m(a) != -1:
        return False
    vecs = a.form_vectors()
    r = a.r
    others = list(range(1, r))
    for mask in range(2 ** (r - 1) - 1):
        side = [0] + [others[k] for k in range(r - 1) if mask >> k & 1]
        comp = [i for i in range(r) if i not in set(side)]
        overlap = intersect(
            span([vecs[i] for i in side], a.n + 1),
            span([vecs[i] for i in comp], a.n + 1),
        )
        if overlap.is_zero or not any(contains(overlap, v) for v in vecs):
            return False
    return True


def general_position_bound(a: Arrangement) -> Optional[int]:
    """floor(s / (r - s)) when r > s, else None."""
    s = compute_s(a)
    if a.r <= s:
        return None
    return s // (a.r - s)


def verdict(a: Arrangement) -> Verdict:
    s = compute_s(a)
    bound = general_position_bound(a)
    return Verdict(
        finiteness=finiteness_verdict(a),
        gp_bound=bound,
        gp_bound_achieved=(s == a.n) if bound is not None else None,
    )


def cross_check(a: Arrangement, report: DimensionReport) -> list[str]:
    """Consistency checks between the search result and the corollaries.

    Returns a list of discrepancy descriptions; an empty list means the two
    independent code paths agree.
    """
    discrepancies: list[str] = []
    s = compute_s(a)
    finite = finiteness_verdict(a)
    if finite != (report.d_max <= 0):
        discrepancies.append(
            f"finiteness verdict {finite} disagrees with d_max={report.d_max}"
        )
    if a.r > s:
        bound = s // (a.r - s)
        if report.d_max > bound:
            discrepancies.append(
                f"d_max={report.d_max} exceeds the bound {bound} (s={s}, r={a.r})"
            )
        if s == a.n and report.d_max != bound:
            discrepancies.append(
                f"general position: d_max={report.d_max} should equal the bound {bound}"
            )
    return discrepancies

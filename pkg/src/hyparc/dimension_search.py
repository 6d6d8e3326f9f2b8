"""Partition-lattice search for the achievable complement dimensions.

A partition of the form set into p >= 2 blocks is *valid* when no form lies
in W = sum over blocks of (block span intersected with the span of the other
blocks).  The maximal achievable dimension is m + p_max over valid
partitions, with the guaranteed baseline m + 1 when no partition with at
least two blocks is valid.

Key structural facts used by the search:

* The span of a union of blocks equals the sum of the block spans, so the
  per-block contribution to W depends only on the block, not the partition.
  Block spans and overlaps are therefore memoized per arrangement.
* Validity is preserved under coarsening (merging blocks).  Contrapositive:
  if any bipartition coarsening of a candidate is invalid, the candidate is
  invalid.  The search precomputes all bipartition verdicts and uses them to
  discard candidates before the full check; if no bipartition is valid, no
  partition with >= 2 blocks can be.

Partitions are enumerated via restricted-growth strings in lexicographic
order, which fixes the reported witness deterministically.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional

from .arrangement import Arrangement, compute_m
from .exact_linalg import InternalError, Subspace, contains, span, zero_space

Blocks = tuple[tuple[int, ...], ...]

BRUTE_FORCE_LIMIT = 9  # Bell(9) = 21147 partitions


@dataclass(frozen=True)
class PartitionCheck:
    valid: bool
    w_space: Subspace
    violating_form: Optional[int]


@dataclass(frozen=True)
class DimensionReport:
    m: int
    d_max: int
    achievable: tuple[int, ...]
    best_partition: Optional[Blocks]
    parts_max: Optional[int]


def partitions_rgs(r: int, blocks: Optional[int] = None) -> Iterator[tuple[int, ...]]:
    """Set partitions of range(r) as restricted-growth strings, lex order.

    With ``blocks`` given, only partitions with exactly that many blocks are
    produced (branches that can no longer reach the count are pruned).
    """
    if r < 1:
        return
    rgs = [0] * r

    def rec(i: int, maxlab: int) -> Iterator[tuple[int, ...]]:
        if i == r:
            if blocks is None or maxlab + 1 == blocks:
                yield tuple(rgs)
            return
        hi = maxlab + 1
        if blocks is not None:
            hi = min(hi, blocks - 1)
            if maxlab + (r - i) < blocks - 1:
                return  # cannot reach the required block count
        for lab in range(hi + 1):
            rgs[i] = lab
            yield from rec(i + 1, max(maxlab, lab))

    yield from rec(1, 0)


def blocks_of(rgs: tuple[int, ...]) -> Blocks:
    nblocks = max(rgs) + 1
    blocks: list[list[int]] = [[] for _ in range(nblocks)]
    for idx, lab in enumerate(rgs):
        blocks[lab].append(idx)
    return tuple(tuple(b) for b in blocks)


def rgs_of(blocks: Blocks) -> tuple[int, ...]:
    r = sum(len(b) for b in blocks)
    labels = {}
    for idx in range(r):
        for lab, block in enumerate(sorted(blocks, key=min)):
            if idx in block:
                labels[idx] = lab
    return tuple(labels[i] for i in range(r))


class SpanCache:
    """Per-arrangement memo of block spans and block/complement overlaps."""

    def __init__(self, a: Arrangement):
        self.a = a
        self.vectors = a.form_vectors()
        self.all_indices = frozenset(range(a.r))
        self._span: dict[frozenset, Subspace] = {}
        self._overlap: dict[frozenset, Subspace] = {}

    def span_of(self, indices: frozenset) -> Subspace:
        cached = self._span.get(indices)
        if cached is None:
            cached = span([self.vectors[i] for i in sorted(indices)], self.a.n + 1)
            self._span[indices] = cached
        return cached

    def overlap(self, block: frozenset) -> Subspace:
        """(block span) intersected with (span of all other forms)."""
        cached = self._overlap.get(block)
        if cached is None:
            from .exact_linalg import intersect

            cached = intersect(
                self.span_of(block), self.span_of(self.all_indices - block)
            )
            self._overlap[block] = cached
        return cached


def _validate_partition(a: Arrangement, blocks: Blocks) -> None:
    seen: set[int] = set()
    if len(blocks) < 2:
        raise ValueError("partition must have at least 2 blocks")
    for block in blocks:
        if not block:
            raise ValueError("partition contains an empty block")
        for idx in block:
            if idx in seen:
                raise ValueError(f"index {idx} appears in two blocks")
            if not 0 <= idx < a.r:
                raise ValueError(f"index {idx} out of range for {a.r} forms")
            seen.add(idx)
    if len(seen) != a.r:
        raise ValueError("partition does not cover all form indices")


def check_partition(
    a: Arrangement, blocks: Blocks, cache: Optional[SpanCache] = None
) -> PartitionCheck:
    """Evaluate the separation criterion for one partition.

    Computes W = sum over blocks of (block span ∩ span of the other blocks)
    and reports the first form (in canonical order) lying in W, if any.
    """
    _validate_partition(a, blocks)
    if cache is None:
        cache = SpanCache(a)
    w_rows: list = []
    for block in blocks:
        w_rows.extend(cache.overlap(frozenset(block)).basis)
    w_space = span(w_rows, a.n + 1)
    violating = None
    if not w_space.is_zero:
        for idx, vec in enumerate(cache.vectors):
            if contains(w_space, vec):
                violating = idx
                break
    return PartitionCheck(
        valid=violating is None, w_space=w_space, violating_form=violating
    )


def _merges_all_valid(blocks: Blocks, bip_ok: dict[frozenset, bool]) -> bool:
    """Are all bipartition coarsenings of ``blocks`` valid?

    Each bipartition coarsening merges the blocks into two groups; the group
    containing index 0 is the cache key.  Necessary condition for validity.
    """
    p = len(blocks)
    first = frozenset(blocks[0])
    rest = blocks[1:]
    for mask in range(2 ** (p - 1) - 1):  # exclude merging everything together
        side = set(first)
        for k in range(p - 1):
            if mask >> k & 1:
                side.update(rest[k])
        if not bip_ok[frozenset(side)]:
            return False
    return True


def max_valid_parts(
    a: Arrangement, max_parts: Optional[int] = None
) -> tuple[Optional[int], Optional[Blocks]]:
    """Maximum number of blocks of a valid partition, with a witness.

    Returns (None, None) when no partition with >= 2 blocks is valid (or the
    arrangement has a single form).  The witness is the lexicographically
    least restricted-growth string among the valid partitions with the
    maximal block count.
    """
    r = a.r
    if r < 2:
        return None, None
    m = compute_m(a)
    cap = min(r, a.n - m)  # d = m + p cannot exceed n
    if max_parts is not None:
        cap = min(cap, max_parts)
    if cap < 2:
        return None, None
    cache = SpanCache(a)

    # Verdicts for every bipartition, keyed by the side containing index 0.
    # A bipartition's W is exactly the overlap of either side.  Skipped for
    # large r, where the 2^(r-1) pre-pass would dominate.
    bip_ok: Optional[dict[frozenset, bool]] = None
    if r <= 16:
        bip_ok = {}
        any_valid = False
        others = list(range(1, r))
        for mask in range(2 ** (r - 1) - 1):  # exclude side == all indices
            side = frozenset([0] + [others[k] for k in range(r - 1) if mask >> k & 1])
            overlap = cache.overlap(side)
            ok = overlap.is_zero or not any(
                contains(overlap, v) for v in cache.vectors
            )
            bip_ok[side] = ok
            any_valid = any_valid or ok
        if not any_valid:
            return None, None  # every partition coarsens to some bipartition

    for p in range(cap, 1, -1):
        for rgs in partitions_rgs(r, blocks=p):
            blocks = blocks_of(rgs)
            if bip_ok is not None:
                if p == 2:
                    if bip_ok[frozenset(blocks[0])]:
                        return p, blocks
                    continue
                if not _merges_all_valid(blocks, bip_ok):
                    continue
            if check_partition(a, blocks, cache).valid:
                return p, blocks
    return None, None


def brute_force_max_parts(
    a: Arrangement, limit: int = BRUTE_FORCE_LIMIT
) -> tuple[Optional[int], Optional[Blocks]]:
    """Oracle: exhaustively check every partition with >= 2 blocks.

    No search pruning at all; same result contract as ``max_valid_parts``.
    Refuses arrangements above ``limit`` forms (Bell numbers explode).
    """
    if a.r > limit:
        raise ValueError(
            f"brute force refused: {a.r} forms exceeds the limit of {limit}"
        )
    if a.r < 2:
        return None, None
    cache = SpanCache(a)
    best_parts: Optional[int] = None
    best_blocks: Optional[Blocks] = None
    for rgs in partitions_rgs(a.r):
        blocks = blocks_of(rgs)
        if len(blocks) < 2:
            continue
        if check_partition(a, blocks, cache).valid:
            if best_parts is None or len(blocks) > best_parts:
                best_parts = len(blocks)
                best_blocks = blocks
    return best_parts, best_blocks


def achievable_dimensions(
    a: Arrangement,
    use_brute_force: bool = False,
    max_parts: Optional[int] = None,
    brute_limit: int = BRUTE_FORCE_LIMIT,
) -> DimensionReport:
    """Full classification: maximal dimension d_max and the range below it.

    d_max = m + p_max when a valid partition exists, else the guaranteed
    baseline m + 1.  Every dimension from 0 up to d_max is achievable
    (witnesses of any smaller dimension exist; see the witness module).
    """
    m = compute_m(a)
    if use_brute_force:
        parts, witness = brute_force_max_parts(a, limit=brute_limit)
    else:
        parts, witness = max_valid_parts(a, max_parts=max_parts)
    d_max = m + parts if parts is not None else m + 1
    if d_max > a.n or d_max < m + 1:
        raise InternalError(
            f"computed d_max={d_max} outside [{m + 1}, {a.n}]; this cannot happen"
        )
    return DimensionReport(
        m=m,
        d_max=d_max,
        achievable=tuple(range(0, d_max + 1)),
        best_partition=witness,
        parts_max=parts,
    )

"""Soft covering approximation spaces.

The space is a covering soft set together with the deduplicated family of
its block values.  The lower approximation of a set is the union of the
blocks inside it; the upper approximation adds, for every point not yet
reached, every block of that point's minimal description (the inclusion-
minimal blocks containing it).

Mask-level accessors (``lower_mask``/``upper_mask``/``block_masks``) are
exposed for the exhaustive sweeps in :mod:`softrough.verify` and
:mod:`softrough.topology`; per-element minimal descriptions are precomputed
once at construction.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Union

from .errors import NotACovering, UniverseMismatch
from .pawlak import RegionReport
from .sets import SetFamily, Subset, Universe
from .softset import SoftSet, is_covering


class SoftCoveringSpace:
    """Covering soft set plus its deduplicated cover family."""

    __slots__ = ("soft_set", "cover", "_md_masks", "_md_union")

    def __init__(self, soft_set: SoftSet):
        if not is_covering(soft_set):
            raise NotACovering(
                "soft set is not a covering: blocks must be nonempty and union to the universe"
            )
        self.soft_set = soft_set
        self.cover = soft_set.block_family()
        masks = self.cover.block_masks
        md_masks: list[tuple[int, ...]] = []
        md_union: list[int] = []
        for pos in range(len(soft_set.universe)):
            bit = 1 << pos
            holding = [m for m in masks if m & bit]
            minimal = tuple(
                m for m in holding if not any(c != m and c & ~m == 0 for c in holding)
            )
            md_masks.append(minimal)
            acc = 0
            for m in minimal:
                acc |= m
            md_union.append(acc)
        self._md_masks = tuple(md_masks)
        self._md_union = tuple(md_union)

    @classmethod
    def from_blocks(
        cls,
        universe: Universe,
        blocks: Iterable[Union[Subset, Iterable[str]]],
        parameter_prefix: str = "e",
    ) -> "SoftCoveringSpace":
        """Space over anonymous parameters e1, e2, ... mapped to ``blocks``."""
        assignment = {
            f"{parameter_prefix}{i + 1}": block for i, block in enumerate(blocks)
        }
        return cls(SoftSet(universe, assignment))

    @property
    def universe(self) -> Universe:
        return self.soft_set.universe

    @property
    def block_masks(self) -> tuple[int, ...]:
        return self.cover.block_masks

    def lower_mask(self, mask: int) -> int:
        """Union of the cover blocks contained in ``mask``."""
        acc = 0
        for bmask in self.cover.block_masks:
            if bmask & ~mask == 0:
                acc |= bmask
        return acc

    def upper_mask(self, mask: int) -> int:
        """Lower approximation plus the minimal-description blocks of the rest."""
        low = self.lower_mask(mask)
        rest = mask & ~low
        acc = low
        while rest:
            pos = (rest & -rest).bit_length() - 1
            rest &= rest - 1
            acc |= self._md_union[pos]
        return acc

    def minimal_description_masks(self, pos: int) -> tuple[int, ...]:
        return self._md_masks[pos]

    def __repr__(self) -> str:
        return f"SoftCoveringSpace({self.cover})"


@dataclass(frozen=True)
class MinimalDescription:
    """Inclusion-minimal cover blocks containing one element."""

    element: str
    blocks: SetFamily


@dataclass(frozen=True)
class IntersectionConditionReport:
    """Whether every pairwise block intersection is a union of blocks.

    When the condition fails, ``witness`` is the first offending block pair
    in canonical order and ``intersection`` their intersection.
    """

    holds: bool
    witness: Optional[tuple[Subset, Subset]]
    intersection: Optional[Subset]

    def __bool__(self) -> bool:
        return self.holds


def _check_query(s: SoftCoveringSpace, x: Subset) -> None:
    if x.universe != s.universe:
        raise UniverseMismatch("query set belongs to a different universe")


def minimal_description(s: SoftCoveringSpace, element: str) -> MinimalDescription:
    """Minimal blocks of the cover containing ``element``."""
    pos = s.universe.index(element)
    blocks = [Subset(s.universe, m) for m in s._md_masks[pos]]
    return MinimalDescription(element=element, blocks=SetFamily(s.universe, blocks))


def soft_lower(s: SoftCoveringSpace, x: Subset) -> Subset:
    """Union of the cover blocks contained in ``x``."""
    _check_query(s, x)
    return Subset(s.universe, s.lower_mask(x.mask))


def soft_upper(s: SoftCoveringSpace, x: Subset) -> Subset:
    """Lower approximation of ``x`` plus all minimal-description blocks of
    the points of ``x`` it misses."""
    _check_query(s, x)
    return Subset(s.universe, s.upper_mask(x.mask))


def soft_regions(s: SoftCoveringSpace, x: Subset) -> RegionReport:
    """Regions of ``x``; definable means lower and upper coincide."""
    _check_query(s, x)
    lower = Subset(s.universe, s.lower_mask(x.mask))
    upper = Subset(s.universe, s.upper_mask(x.mask))
    return RegionReport.from_bounds(lower, upper)


def is_intersection_union_closed(s: SoftCoveringSpace) -> IntersectionConditionReport:
    """Check that every pairwise intersection of cover blocks is a union of
    cover blocks; empty intersections pass as the empty union."""
    masks = s.cover.block_masks
    for i, a in enumerate(masks):
        for b in masks[i + 1 :]:
            inter = a & b
            acc = 0
            for m in masks:
                if m & ~inter == 0:
                    acc |= m
            if acc != inter:
                return IntersectionConditionReport(
                    holds=False,
                    witness=(Subset(s.universe, a), Subset(s.universe, b)),
                    intersection=Subset(s.universe, inter),
                )
    return IntersectionConditionReport(holds=True, witness=None, intersection=None)

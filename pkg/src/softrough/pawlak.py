"""Classical approximation space over a partition of the universe.

Serves as the baseline the partition-cover coincidence checks compare
against: on a partition soft set the soft covering operators must agree
with these class-based ones.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Union

from .errors import NotAPartition, UniverseMismatch
from .sets import SetFamily, Subset, Universe
from .softset import SoftSet, is_partition


@dataclass(frozen=True)
class RegionReport:
    """Lower/upper approximations of one query set plus the derived regions."""

    lower: Subset
    upper: Subset
    positive: Subset
    negative: Subset
    boundary: Subset
    definable: bool

    @classmethod
    def from_bounds(cls, lower: Subset, upper: Subset) -> "RegionReport":
        return cls(
            lower=lower,
            upper=upper,
            positive=lower,
            negative=upper.complement(),
            boundary=upper - lower,
            definable=lower == upper,
        )


class PawlakSpace:
    """Universe together with the equivalence classes of a partition."""

    __slots__ = ("universe", "classes")

    def __init__(self, universe: Universe, classes: Union[SetFamily, Iterable[Subset]]):
        family = classes if isinstance(classes, SetFamily) else SetFamily(universe, classes)
        if family.universe != universe:
            raise UniverseMismatch("classes belong to a different universe")
        acc = 0
        for block in family:
            if block.mask == 0:
                raise NotAPartition("partition classes must be nonempty")
            if acc & block.mask:
                raise NotAPartition(f"classes overlap at {block & Subset(universe, acc)}")
            acc |= block.mask
        if acc != universe.full_mask:
            missing = Subset(universe, universe.full_mask & ~acc)
            raise NotAPartition(f"classes do not cover the universe; missing {missing}")
        self.universe = universe
        self.classes = family

    def class_of(self, name: str) -> Subset:
        pos = self.universe.index(name)
        for block in self.classes:
            if block.mask >> pos & 1:
                return block
        raise AssertionError("partition invariant violated")  # pragma: no cover

    def __repr__(self) -> str:
        return f"PawlakSpace({self.classes})"


def pawlak_from_partition_soft_set(s: SoftSet) -> PawlakSpace:
    """Approximation space whose classes are the blocks of a partition soft set."""
    if not is_partition(s):
        raise NotAPartition("soft set blocks do not form a partition of the universe")
    return PawlakSpace(s.universe, s.block_family())


def _check_query(p: PawlakSpace, x: Subset) -> None:
    if x.universe != p.universe:
        raise UniverseMismatch("query set belongs to a different universe")


def pawlak_lower(p: PawlakSpace, x: Subset) -> Subset:
    """Union of the classes contained in ``x``."""
    _check_query(p, x)
    acc = 0
    for cmask in p.classes.block_masks:
        if cmask & ~x.mask == 0:
            acc |= cmask
    return Subset(p.universe, acc)


def pawlak_upper(p: PawlakSpace, x: Subset) -> Subset:
    """Union of the classes meeting ``x``."""
    _check_query(p, x)
    acc = 0
    for cmask in p.classes.block_masks:
        if cmask & x.mask:
            acc |= cmask
    return Subset(p.universe, acc)


def pawlak_regions(p: PawlakSpace, x: Subset) -> RegionReport:
    """Regions of ``x`` with respect to the partition."""
    return RegionReport.from_bounds(pawlak_lower(p, x), pawlak_upper(p, x))

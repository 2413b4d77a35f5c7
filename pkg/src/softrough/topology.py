"""Finite topology engine for soft covering spaces.

Three ways of producing a family of candidate open sets:

* all unions of finite intersections of cover blocks (cover as a subbase);
* the fixed points of the lower approximation;
* the fixed points of the upper approximation.

The fixed-point families are only guaranteed to satisfy the topology axioms
when every pairwise block intersection is a union of blocks, so families
carry an axiom checker that reports the first violating pair.  Interior and
closure are computed by scanning the finite family of opens, which is exact
at desk scale.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Union

from .covering import SoftCoveringSpace
from .errors import NotATopology, UniverseMismatch, UniverseTooLarge
from .sets import DEFAULT_MAX_EXHAUSTIVE, SetFamily, Subset, Universe

ORIGINS = ("subbase", "lower-fixed", "upper-fixed", "explicit")


@dataclass(frozen=True)
class AxiomViolation:
    """First family pair whose union or intersection escapes the family."""

    kind: str  # "union" or "intersection"
    left: Subset
    right: Subset
    missing: Subset


@dataclass(frozen=True)
class TopologyAxiomReport:
    """Axiom check outcome for a finite family of sets.

    Over a finite universe arbitrary unions and intersections reduce to the
    pairwise ones, so the open-set axioms and the closed-set-system axioms
    (both demanding the empty set, the universe, and closure under pairwise
    union and intersection) test the same four facts; ``is_topology`` and
    ``satisfies_closed_axioms`` therefore coincide and are reported as two
    views of one check.
    """

    contains_empty: bool
    contains_universe: bool
    violation: Optional[AxiomViolation]

    @property
    def is_topology(self) -> bool:
        return self.contains_empty and self.contains_universe and self.violation is None

    @property
    def satisfies_closed_axioms(self) -> bool:
        return self.is_topology

    def __bool__(self) -> bool:
        return self.is_topology

    def describe(self) -> str:
        if self.is_topology:
            return "satisfied"
        if not self.contains_empty:
            return "violated: empty set missing from family"
        if not self.contains_universe:
            return "violated: universe missing from family"
        v = self.violation
        op = "∩" if v.kind == "intersection" else "∪"
        return f"violated: {v.left} {op} {v.right} = {v.missing} not in family"


class TopologyFamily:
    """Family of candidate open sets with a cached axiom check."""

    __slots__ = ("universe", "opens", "origin", "_axioms")

    def __init__(
        self,
        universe: Universe,
        opens: Union[SetFamily, Iterable[Subset]],
        origin: str = "explicit",
    ):
        if origin not in ORIGINS:
            raise ValueError(f"origin must be one of {ORIGINS}, got {origin!r}")
        family = opens if isinstance(opens, SetFamily) else SetFamily(universe, opens)
        if family.universe != universe:
            raise UniverseMismatch("opens belong to a different universe")
        self.universe = universe
        self.opens = family
        self.origin = origin
        self._axioms: Optional[TopologyAxiomReport] = None

    def axioms(self) -> TopologyAxiomReport:
        if self._axioms is None:
            self._axioms = _check_axioms(self)
        return self._axioms

    def __iter__(self):
        return iter(self.opens)

    def __len__(self) -> int:
        return len(self.opens)

    def __repr__(self) -> str:
        return f"TopologyFamily({self.origin}, {len(self.opens)} sets)"


def _closure(seed: Iterable[int], combine) -> set[int]:
    """Close a set of masks under a binary mask operation."""
    known = set(seed)
    queue = list(known)
    while queue:
        a = queue.pop()
        for b in list(known):
            c = combine(a, b)
            if c not in known:
                known.add(c)
                queue.append(c)
    return known


def generate_from_subbase(s: SoftCoveringSpace) -> TopologyFamily:
    """Topology with the cover as subbase: base = finite intersections of
    blocks (the empty intersection contributes the universe), opens = all
    unions of base members (the empty union contributes the empty set)."""
    full = s.universe.full_mask
    base = _closure(s.block_masks, lambda a, b: a & b)
    base.add(full)
    opens = _closure(base, lambda a, b: a | b)
    opens.add(0)
    return TopologyFamily(
        s.universe,
        [Subset(s.universe, m) for m in opens],
        origin="subbase",
    )


def lower_fixed_point_family(
    s: SoftCoveringSpace, max_exhaustive: Optional[int] = None
) -> TopologyFamily:
    """All subsets fixed by the lower approximation."""
    s.universe.require_exhaustive(max_exhaustive)
    fixed = [
        Subset(s.universe, m)
        for m in range(1 << len(s.universe))
        if s.lower_mask(m) == m
    ]
    return TopologyFamily(s.universe, fixed, origin="lower-fixed")


def upper_fixed_point_family(
    s: SoftCoveringSpace, max_exhaustive: Optional[int] = None
) -> TopologyFamily:
    """All subsets fixed by the upper approximation."""
    s.universe.require_exhaustive(max_exhaustive)
    fixed = [
        Subset(s.universe, m)
        for m in range(1 << len(s.universe))
        if s.upper_mask(m) == m
    ]
    return TopologyFamily(s.universe, fixed, origin="upper-fixed")


def _check_axioms(t: TopologyFamily) -> TopologyAxiomReport:
    masks = t.opens.block_masks
    if len(masks) > (1 << DEFAULT_MAX_EXHAUSTIVE):
        raise UniverseTooLarge(
            f"axiom check over {len(masks)} sets refused; family too large"
        )
    universe = t.universe
    contains_empty = t.opens.has_mask(0)
    contains_universe = t.opens.has_mask(universe.full_mask)
    violation = None
    for i, a in enumerate(masks):
        for b in masks[i + 1 :]:
            inter = a & b
            if not t.opens.has_mask(inter):
                violation = AxiomViolation(
                    kind="intersection",
                    left=Subset(universe, a),
                    right=Subset(universe, b),
                    missing=Subset(universe, inter),
                )
                break
            union = a | b
            if not t.opens.has_mask(union):
                violation = AxiomViolation(
                    kind="union",
                    left=Subset(universe, a),
                    right=Subset(universe, b),
                    missing=Subset(universe, union),
                )
                break
        if violation is not None:
            break
    return TopologyAxiomReport(
        contains_empty=contains_empty,
        contains_universe=contains_universe,
        violation=violation,
    )


def is_topology(t: TopologyFamily) -> TopologyAxiomReport:
    """Axiom report for the family; truthy exactly when all axioms hold."""
    return t.axioms()


def _require_topology(t: TopologyFamily) -> None:
    report = t.axioms()
    if not report.is_topology:
        raise NotATopology(
            f"{t.origin} family is not a topology ({report.describe()})"
        )


def _check_query(t: TopologyFamily, x: Subset) -> None:
    if x.universe != t.universe:
        raise UniverseMismatch("query set belongs to a different universe")


def _interior_mask(t: TopologyFamily, mask: int) -> int:
    acc = 0
    for omask in t.opens.block_masks:
        if omask & ~mask == 0:
            acc |= omask
    return acc


def interior(t: TopologyFamily, x: Subset) -> Subset:
    """Largest open set contained in ``x``."""
    _require_topology(t)
    _check_query(t, x)
    return Subset(t.universe, _interior_mask(t, x.mask))


def closure(t: TopologyFamily, x: Subset) -> Subset:
    """Smallest closed set containing ``x``."""
    _require_topology(t)
    _check_query(t, x)
    full = t.universe.full_mask
    return Subset(t.universe, full & ~_interior_mask(t, full & ~x.mask))


def boundary(t: TopologyFamily, x: Subset) -> Subset:
    """Closure minus interior."""
    _require_topology(t)
    _check_query(t, x)
    full = t.universe.full_mask
    cl = full & ~_interior_mask(t, full & ~x.mask)
    return Subset(t.universe, cl & ~_interior_mask(t, x.mask))

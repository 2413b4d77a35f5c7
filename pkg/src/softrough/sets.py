"""Exact set algebra over a fixed finite universe.

A :class:`Universe` fixes an ordered tuple of distinct element names.  A
:class:`Subset` stores its members as a bitmask over universe positions
(element ``i`` occupies bit ``i``), so equality, inclusion and the boolean
operations are single integer instructions and sweeps over all ``2**n``
subsets stay cheap.  Canonical order, used for every deterministic output,
is ascending bitmask value: the empty set first, the full universe last.

Everything here is immutable after construction and safe to share across
concurrent tasks.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Optional, Union

from .errors import UniverseMismatch, UnknownElement, UniverseTooLarge

#: Hard capacity for universes; bitmask code assumes small n.
MAX_UNIVERSE = 30

#: Default refusal threshold for exhaustive 2**n subset sweeps.
DEFAULT_MAX_EXHAUSTIVE = 20


class Universe:
    """Ordered finite ground set; element order fixes all canonical output."""

    __slots__ = ("elements", "_index")

    def __init__(self, elements: Iterable[str]):
        names = tuple(elements)
        if not names:
            raise ValueError("a universe needs at least one element")
        if len(names) > MAX_UNIVERSE:
            raise UniverseTooLarge(
                f"universe capacity is {MAX_UNIVERSE} elements, got {len(names)}"
            )
        index: dict[str, int] = {}
        for pos, name in enumerate(names):
            if not isinstance(name, str):
                raise TypeError(f"element names must be strings, got {name!r}")
            if name in index:
                raise ValueError(f"duplicate element name {name!r}")
            index[name] = pos
        self.elements = names
        self._index = index

    def __len__(self) -> int:
        return len(self.elements)

    @property
    def size(self) -> int:
        return len(self.elements)

    @property
    def full_mask(self) -> int:
        return (1 << len(self.elements)) - 1

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise UnknownElement(f"{name!r} is not an element of the universe") from None

    def __contains__(self, name: object) -> bool:
        return name in self._index

    def subset(self, names: Iterable[str] = ()) -> "Subset":
        mask = 0
        for name in names:
            mask |= 1 << self.index(name)
        return Subset(self, mask)

    def empty(self) -> "Subset":
        return Subset(self, 0)

    def full(self) -> "Subset":
        return Subset(self, self.full_mask)

    def require_exhaustive(self, limit: Optional[int] = None) -> None:
        """Refuse a 2**n sweep over this universe beyond ``limit`` elements."""
        cap = DEFAULT_MAX_EXHAUSTIVE if limit is None else limit
        if len(self.elements) > cap:
            raise UniverseTooLarge(
                f"exhaustive sweep over {len(self.elements)} elements refused "
                f"(limit {cap}); raise the limit to force it"
            )

    def subsets(self, limit: Optional[int] = None) -> Iterator["Subset"]:
        """All subsets in canonical order; guarded by :meth:`require_exhaustive`."""
        self.require_exhaustive(limit)
        for mask in range(1 << len(self.elements)):
            yield Subset(self, mask)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Universe):
            return NotImplemented
        return self.elements == other.elements

    def __hash__(self) -> int:
        return hash(self.elements)

    def __repr__(self) -> str:
        return f"Universe({list(self.elements)!r})"


class Subset:
    """Immutable subset of a :class:`Universe`, stored as a bitmask."""

    __slots__ = ("universe", "mask")

    def __init__(self, universe: Universe, mask: int = 0):
        if mask < 0 or mask >> len(universe):
            raise ValueError(f"mask {mask:#x} does not fit universe of size {len(universe)}")
        self.universe = universe
        self.mask = mask

    @classmethod
    def from_names(cls, universe: Universe, names: Iterable[str]) -> "Subset":
        return universe.subset(names)

    def names(self) -> tuple[str, ...]:
        """Member names in universe order."""
        mask = self.mask
        return tuple(
            name for pos, name in enumerate(self.universe.elements) if mask >> pos & 1
        )

    def _other(self, value: "Subset") -> "Subset":
        if not isinstance(value, Subset):
            raise TypeError(f"expected a Subset, got {type(value).__name__}")
        if value.universe != self.universe:
            raise UniverseMismatch("subsets belong to different universes")
        return value

    def __or__(self, other: "Subset") -> "Subset":
        return Subset(self.universe, self.mask | self._other(other).mask)

    def __and__(self, other: "Subset") -> "Subset":
        return Subset(self.universe, self.mask & self._other(other).mask)

    def __sub__(self, other: "Subset") -> "Subset":
        return Subset(self.universe, self.mask & ~self._other(other).mask)

    def complement(self) -> "Subset":
        return Subset(self.universe, self.universe.full_mask & ~self.mask)

    def issubset(self, other: "Subset") -> bool:
        return self.mask & ~self._other(other).mask == 0

    def __le__(self, other: "Subset") -> bool:
        return self.issubset(other)

    def __lt__(self, other: "Subset") -> bool:
        other = self._other(other)
        return self.mask != other.mask and self.mask & ~other.mask == 0

    def __ge__(self, other: "Subset") -> bool:
        return self._other(other).issubset(self)

    def __gt__(self, other: "Subset") -> bool:
        return self._other(other) < self

    def __contains__(self, name: str) -> bool:
        return bool(self.mask >> self.universe.index(name) & 1)

    def __iter__(self) -> Iterator[str]:
        return iter(self.names())

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __bool__(self) -> bool:
        return self.mask != 0

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Subset):
            return NotImplemented
        return self.universe == other.universe and self.mask == other.mask

    def __hash__(self) -> int:
        return hash((self.universe.elements, self.mask))

    def __str__(self) -> str:
        return "{" + ",".join(self.names()) + "}"

    def __repr__(self) -> str:
        return f"Subset({self})"


class SetFamily:
    """Deduplicated collection of subsets of one universe, canonically ordered."""

    __slots__ = ("universe", "blocks", "_mask_set")

    def __init__(self, universe: Universe, blocks: Iterable[Subset] = ()):
        masks = set()
        for block in blocks:
            if not isinstance(block, Subset):
                raise TypeError(f"expected Subsets, got {type(block).__name__}")
            if block.universe != universe:
                raise UniverseMismatch("family block belongs to a different universe")
            masks.add(block.mask)
        self.universe = universe
        self.blocks = tuple(Subset(universe, m) for m in sorted(masks))
        self._mask_set = frozenset(masks)

    @property
    def block_masks(self) -> tuple[int, ...]:
        return tuple(b.mask for b in self.blocks)

    def union(self) -> Subset:
        mask = 0
        for block in self.blocks:
            mask |= block.mask
        return Subset(self.universe, mask)

    def has_mask(self, mask: int) -> bool:
        return mask in self._mask_set

    def __contains__(self, item: object) -> bool:
        return (
            isinstance(item, Subset)
            and item.universe == self.universe
            and item.mask in self._mask_set
        )

    def __iter__(self) -> Iterator[Subset]:
        return iter(self.blocks)

    def __len__(self) -> int:
        return len(self.blocks)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SetFamily):
            return NotImplemented
        return self.universe == other.universe and self._mask_set == other._mask_set

    def __hash__(self) -> int:
        return hash((self.universe.elements, self._mask_set))

    def __str__(self) -> str:
        return "{" + ", ".join(str(b) for b in self.blocks) + "}"

    def __repr__(self) -> str:
        return f"SetFamily({self})"


FamilyLike = Union[SetFamily, Iterable[Subset]]


def complement(x: Subset) -> Subset:
    """Members of the universe not in ``x``."""
    return x.complement()


def family_union(blocks: FamilyLike, universe: Optional[Universe] = None) -> Subset:
    """Union of a family of subsets; the empty input yields the empty set.

    An empty plain iterable carries no universe, so ``universe`` must be
    passed explicitly for that case.
    """
    if isinstance(blocks, SetFamily):
        if universe is not None and universe != blocks.universe:
            raise UniverseMismatch("family and explicit universe disagree")
        return blocks.union()
    items = tuple(blocks)
    if universe is None:
        if not items:
            raise ValueError("family_union of an empty iterable needs universe=")
        universe = items[0].universe
    mask = 0
    for block in items:
        if not isinstance(block, Subset):
            raise TypeError(f"expected Subsets, got {type(block).__name__}")
        if block.universe != universe:
            raise UniverseMismatch("family block belongs to a different universe")
        mask |= block.mask
    return Subset(universe, mask)


def is_union_of_blocks(target: Subset, family: FamilyLike) -> bool:
    """True iff ``target`` is a union of blocks of ``family``.

    The union of all blocks contained in ``target`` is the unique maximal
    union of blocks inside it, so ``target`` is a union of blocks exactly
    when that union reaches ``target``.  The empty set always qualifies
    (empty union).
    """
    fam = family if isinstance(family, SetFamily) else SetFamily(target.universe, family)
    if fam.universe != target.universe:
        raise UniverseMismatch("target and family belong to different universes")
    acc = 0
    tmask = target.mask
    for bmask in fam.block_masks:
        if bmask & ~tmask == 0:
            acc |= bmask
    return acc == tmask

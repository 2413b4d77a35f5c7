"""Soft sets over a finite universe and their relation correspondence.

A soft set assigns to each parameter a subset of the universe (its block).
Blocks may repeat across parameters; the approximation machinery only ever
looks at the deduplicated family of block values.
"""

from __future__ import annotations

from typing import Iterable, Mapping, Union

from .errors import UniverseMismatch
from .sets import SetFamily, Subset, Universe, family_union

BlockSpec = Union[Subset, Iterable[str]]


class SoftSet:
    """Mapping from an ordered finite parameter set to subsets of a universe."""

    __slots__ = ("universe", "parameters", "_assignment")

    def __init__(self, universe: Universe, assignment: Mapping[str, BlockSpec]):
        params: list[str] = []
        blocks: dict[str, Subset] = {}
        for parameter, value in assignment.items():
            if not isinstance(parameter, str):
                raise TypeError(f"parameter names must be strings, got {parameter!r}")
            if parameter in blocks:
                raise ValueError(f"duplicate parameter name {parameter!r}")
            if isinstance(value, Subset):
                if value.universe != universe:
                    raise UniverseMismatch(
                        f"block of parameter {parameter!r} belongs to a different universe"
                    )
                block = value
            else:
                block = universe.subset(value)
            params.append(parameter)
            blocks[parameter] = block
        self.universe = universe
        self.parameters = tuple(params)
        self._assignment = blocks

    def block(self, parameter: str) -> Subset:
        return self._assignment[parameter]

    @property
    def blocks(self) -> tuple[Subset, ...]:
        """Block values in parameter order, duplicates preserved."""
        return tuple(self._assignment[p] for p in self.parameters)

    def block_family(self) -> SetFamily:
        """Deduplicated family of block values, canonically ordered."""
        return SetFamily(self.universe, self.blocks)

    def items(self) -> Iterable[tuple[str, Subset]]:
        return ((p, self._assignment[p]) for p in self.parameters)

    def __len__(self) -> int:
        return len(self.parameters)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SoftSet):
            return NotImplemented
        return (
            self.universe == other.universe
            and self.parameters == other.parameters
            and all(self._assignment[p].mask == other._assignment[p].mask for p in self.parameters)
        )

    def __hash__(self) -> int:
        return hash(
            (
                self.universe.elements,
                self.parameters,
                tuple(self._assignment[p].mask for p in self.parameters),
            )
        )

    def __repr__(self) -> str:
        body = ", ".join(f"{p}: {self._assignment[p]}" for p in self.parameters)
        return f"SoftSet({body})"


class BinaryRelation:
    """Binary relation from a parameter list to a universe."""

    __slots__ = ("domain", "codomain", "pairs")

    def __init__(
        self,
        domain: Iterable[str],
        codomain: Universe,
        pairs: Iterable[tuple[str, str]],
    ):
        dom = tuple(domain)
        if len(dom) != len(set(dom)):
            raise ValueError("relation domain has duplicate parameter names")
        dom_set = set(dom)
        frozen = frozenset((p, y) for p, y in pairs)
        for p, y in frozen:
            if p not in dom_set:
                raise ValueError(f"pair parameter {p!r} is not in the domain")
            codomain.index(y)  # raises UnknownElement
        self.domain = dom
        self.codomain = codomain
        self.pairs = frozen

    def __len__(self) -> int:
        return len(self.pairs)

    def __contains__(self, pair: object) -> bool:
        return pair in self.pairs

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BinaryRelation):
            return NotImplemented
        return (
            self.domain == other.domain
            and self.codomain == other.codomain
            and self.pairs == other.pairs
        )

    def __hash__(self) -> int:
        return hash((self.domain, self.codomain.elements, self.pairs))

    def __repr__(self) -> str:
        return f"BinaryRelation({len(self.pairs)} pairs over {len(self.domain)} parameters)"


def is_full(s: SoftSet) -> bool:
    """True iff the blocks of ``s`` union to the whole universe."""
    return family_union(s.blocks, universe=s.universe).mask == s.universe.full_mask


def is_covering(s: SoftSet) -> bool:
    """True iff ``s`` is full and every block is nonempty."""
    return all(b.mask != 0 for b in s.blocks) and is_full(s)


def is_partition(s: SoftSet) -> bool:
    """True iff the deduplicated blocks are nonempty, disjoint, and cover U."""
    acc = 0
    for block in s.block_family():
        if block.mask == 0 or acc & block.mask:
            return False
        acc |= block.mask
    return acc == s.universe.full_mask


def induced_relation(s: SoftSet) -> BinaryRelation:
    """Relation pairing each parameter with the members of its block."""
    pairs = [(p, y) for p, block in s.items() for y in block.names()]
    return BinaryRelation(s.parameters, s.universe, pairs)


def soft_set_from_relation(r: BinaryRelation) -> SoftSet:
    """Soft set whose block at each parameter is that parameter's image."""
    masks = {p: 0 for p in r.domain}
    for p, y in r.pairs:
        masks[p] |= 1 << r.codomain.index(y)
    return SoftSet(
        r.codomain, {p: Subset(r.codomain, masks[p]) for p in r.domain}
    )

"""Indiscernibility partitions and rough membership over information tables.

An information system is a total table: a universe of objects described by
categorical attributes. Objects agreeing on every attribute of a chosen set
are indiscernible; the induced partition drives the membership function

    membership(o) = |block(o) ∩ target| / |block(o)|

which is kept as an exact ``fractions.Fraction`` throughout. Floats never
appear: downstream edge rules test ``> 0`` and ``= 1`` exactly.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping

from .errors import DomainError, ParameterError

__all__ = [
    "InformationSystem",
    "Partition",
    "MembershipAssignment",
    "partition_by_attributes",
    "rough_membership",
    "assign_memberships",
    "lower_approximation",
    "upper_approximation",
]


@dataclass(frozen=True)
class InformationSystem:
    """A total table of categorical values over a finite universe.

    ``objects`` and ``attributes`` keep declaration order; ``decision``
    names the subset of attributes excluded from the condition set.
    Attribute values are opaque strings, compared exactly after stripping
    surrounding whitespace.
    """

    objects: tuple[str, ...]
    attributes: tuple[str, ...]
    values: Mapping[str, Mapping[str, str]]  # object -> attribute -> value
    decision: frozenset[str] = frozenset()

    def __post_init__(self):
        if not self.objects:
            raise ParameterError("information system needs at least one object")
        if len(set(self.objects)) != len(self.objects):
            raise ParameterError("object identifiers must be unique")
        for attr in self.decision:
            if attr not in self.attributes:
                raise ParameterError(f"unknown decision attribute {attr!r}")
        for obj in self.objects:
            row = self.values.get(obj)
            if row is None:
                raise ParameterError(f"object {obj!r} has no row of values")
            for attr in self.attributes:
                if attr not in row:
                    raise ParameterError(f"missing value for ({obj!r}, {attr!r})")

    @property
    def condition_attributes(self) -> tuple[str, ...]:
        return tuple(a for a in self.attributes if a not in self.decision)

    def value(self, obj: str, attr: str) -> str:
        return self.values[obj][attr]

    def objects_where(self, attr: str, value: str) -> frozenset[str]:
        """Objects whose ``attr`` equals ``value`` (exact string match)."""
        if attr not in self.attributes:
            raise ParameterError(f"unknown attribute {attr!r}")
        return frozenset(o for o in self.objects if self.values[o][attr] == value)


@dataclass(frozen=True)
class Partition:
    """Disjoint non-empty blocks covering a universe.

    Blocks are canonicalized: members sorted lexicographically, blocks
    sorted by their smallest member, so identical relations always print
    identically.
    """

    blocks: tuple[tuple[str, ...], ...]
    _index: dict[str, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        canon = tuple(sorted((tuple(sorted(b)) for b in self.blocks), key=lambda b: b[0]))
        object.__setattr__(self, "blocks", canon)
        index: dict[str, int] = {}
        for i, block in enumerate(canon):
            if not block:
                raise ParameterError("partition blocks must be non-empty")
            for obj in block:
                if obj in index:
                    raise ParameterError(f"object {obj!r} appears in two blocks")
                index[obj] = i
        object.__setattr__(self, "_index", index)

    @property
    def universe(self) -> frozenset[str]:
        return frozenset(self._index)

    def block_of(self, obj: str) -> tuple[str, ...]:
        try:
            return self.blocks[self._index[obj]]
        except KeyError:
            raise DomainError(f"object {obj!r} is not in the universe") from None


@dataclass(frozen=True)
class MembershipAssignment:
    """Exact membership value per object, for one target set.

    ``order`` is the display order (the source table's row order); values
    are Fractions in [0, 1].
    """

    order: tuple[str, ...]
    values: Mapping[str, Fraction]
    target: frozenset[str]

    def __post_init__(self):
        for obj in self.order:
            v = self.values[obj]
            if not 0 <= v <= 1:
                raise ParameterError(f"membership of {obj!r} outside [0, 1]: {v}")

    def value(self, obj: str) -> Fraction:
        try:
            return self.values[obj]
        except KeyError:
            raise DomainError(f"object {obj!r} has no membership value") from None


def partition_by_attributes(system: InformationSystem, attrs: Iterable[str]) -> Partition:
    """Group objects that agree on every attribute in ``attrs``."""
    attrs = tuple(attrs)
    if not attrs:
        raise ParameterError("attribute set must be non-empty")
    for attr in attrs:
        if attr not in system.attributes:
            raise ParameterError(f"unknown attribute {attr!r}")
    groups: dict[tuple[str, ...], list[str]] = {}
    for obj in system.objects:
        key = tuple(system.values[obj][a] for a in attrs)
        groups.setdefault(key, []).append(obj)
    return Partition(tuple(tuple(g) for g in groups.values()))


def _check_target(partition: Partition, target: Iterable[str]) -> frozenset[str]:
    target = frozenset(target)
    unknown = target - partition.universe
    if unknown:
        raise DomainError(f"target contains unknown objects: {sorted(unknown)}")
    return target


def rough_membership(partition: Partition, target: Iterable[str], obj: str) -> Fraction:
    """|block(obj) ∩ target| / |block(obj)| as an exact rational."""
    target = _check_target(partition, target)
    block = partition.block_of(obj)
    hits = sum(1 for member in block if member in target)
    return Fraction(hits, len(block))


def assign_memberships(
    partition: Partition,
    target: Iterable[str],
    order: Iterable[str] | None = None,
) -> MembershipAssignment:
    """Membership values for every object, in ``order`` (default: canonical)."""
    target = _check_target(partition, target)
    if order is None:
        order = sorted(partition.universe)
    order = tuple(order)
    values = {obj: rough_membership(partition, target, obj) for obj in order}
    return MembershipAssignment(order=order, values=values, target=target)


def lower_approximation(partition: Partition, target: Iterable[str]) -> frozenset[str]:
    """Objects whose whole block lies inside the target (membership = 1)."""
    target = _check_target(partition, target)
    return frozenset(
        obj for block in partition.blocks if set(block) <= target for obj in block
    )


def upper_approximation(partition: Partition, target: Iterable[str]) -> frozenset[str]:
    """Objects whose block meets the target (membership > 0)."""
    target = _check_target(partition, target)
    return frozenset(
        obj for block in partition.blocks if set(block) & target for obj in block
    )

"""Attack graphs and index-based argument sets.

An argumentation framework is a finite directed graph whose nodes are
arguments and whose edges are attacks. Arguments carry a human-readable
label and a dense integer index; sets of arguments are stored as bitmasks
over the index range, which keeps the counting operators and fixpoint
iterations cheap even under exhaustive subset scans.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

DEFAULT_MAX_ARGS = 24


@dataclass(frozen=True)
class ArgumentId:
    """An argument: dense index plus display label."""

    index: int
    label: str

    def __str__(self) -> str:
        return self.label


class ArgumentationFramework:
    """An immutable directed attack graph.

    Labels are unique non-empty strings. Attacks are ordered pairs of
    declared labels; self-attacks are allowed and duplicates collapse.
    """

    __slots__ = ("_labels", "_index", "_pairs", "_attacker_masks",
                 "_target_masks", "_hash")

    def __init__(self, arguments: Sequence[str],
                 attacks: Iterable[tuple[str, str]] = ()) -> None:
        labels = tuple(arguments)
        index: dict[str, int] = {}
        for lab in labels:
            if not lab:
                raise ValueError("argument labels must be non-empty")
            if lab in index:
                raise ValueError(f"duplicate argument label {lab!r}")
            index[lab] = len(index)
        pairs: set[tuple[int, int]] = set()
        for src, dst in attacks:
            if src not in index:
                raise ValueError(f"attack source {src!r} is not declared")
            if dst not in index:
                raise ValueError(f"attack target {dst!r} is not declared")
            pairs.add((index[src], index[dst]))
        attacker_masks = [0] * len(labels)
        target_masks = [0] * len(labels)
        for s, d in pairs:
            attacker_masks[d] |= 1 << s
            target_masks[s] |= 1 << d
        self._labels = labels
        self._index = index
        self._pairs = frozenset(pairs)
        self._attacker_masks = tuple(attacker_masks)
        self._target_masks = tuple(target_masks)
        self._hash = hash((labels, self._pairs))

    # -- basic inspection ------------------------------------------------

    def __len__(self) -> int:
        return len(self._labels)

    @property
    def labels(self) -> tuple[str, ...]:
        return self._labels

    @property
    def arguments(self) -> tuple[ArgumentId, ...]:
        return tuple(ArgumentId(i, lab) for i, lab in enumerate(self._labels))

    @property
    def attacks(self) -> tuple[tuple[str, str], ...]:
        """Attack pairs as labels, sorted by (source index, target index)."""
        return tuple((self._labels[s], self._labels[d])
                     for s, d in sorted(self._pairs))

    @property
    def attack_indices(self) -> frozenset[tuple[int, int]]:
        return self._pairs

    def argument(self, label: str) -> ArgumentId:
        try:
            return ArgumentId(self._index[label], label)
        except KeyError:
            raise KeyError(f"unknown argument {label!r}") from None

    def __contains__(self, label: str) -> bool:
        return label in self._index

    def index_of(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise KeyError(f"unknown argument {label!r}") from None

    def attacker_mask(self, index: int) -> int:
        return self._attacker_masks[index]

    def target_mask(self, index: int) -> int:
        return self._target_masks[index]

    def attackers_of(self, label: str) -> "ArgumentSet":
        return ArgumentSet(self, self._attacker_masks[self.index_of(label)])

    def targets_of(self, label: str) -> "ArgumentSet":
        return ArgumentSet(self, self._target_masks[self.index_of(label)])

    def defenders_of(self, label: str) -> "ArgumentSet":
        """Attackers of the attackers."""
        mask = 0
        att = self._attacker_masks[self.index_of(label)]
        while att:
            low = att & -att
            mask |= self._attacker_masks[low.bit_length() - 1]
            att ^= low
        return ArgumentSet(self, mask)

    def in_degree(self, label: str) -> int:
        return self._attacker_masks[self.index_of(label)].bit_count()

    @property
    def max_in_degree(self) -> int:
        return max((m.bit_count() for m in self._attacker_masks), default=0)

    # -- set construction ------------------------------------------------

    @property
    def full_mask(self) -> int:
        return (1 << len(self._labels)) - 1

    def empty_set(self) -> "ArgumentSet":
        return ArgumentSet(self, 0)

    def full_set(self) -> "ArgumentSet":
        return ArgumentSet(self, self.full_mask)

    def set_of(self, labels: Iterable[str]) -> "ArgumentSet":
        mask = 0
        for lab in labels:
            mask |= 1 << self.index_of(lab)
        return ArgumentSet(self, mask)

    def set_from_mask(self, mask: int) -> "ArgumentSet":
        if mask & ~self.full_mask:
            raise ValueError("mask has bits outside the argument range")
        return ArgumentSet(self, mask)

    # -- equality --------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, ArgumentationFramework)
                and self._labels == other._labels
                and self._pairs == other._pairs)

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return (f"ArgumentationFramework({len(self._labels)} arguments, "
                f"{len(self._pairs)} attacks)")


@dataclass(frozen=True)
class ArgumentSet:
    """A subset of a framework's arguments, stored as a bitmask."""

    framework: ArgumentationFramework
    mask: int

    def __post_init__(self) -> None:
        if self.mask & ~self.framework.full_mask:
            raise ValueError("mask has bits outside the argument range")

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __bool__(self) -> bool:
        return self.mask != 0

    def __iter__(self) -> Iterator[ArgumentId]:
        m = self.mask
        labels = self.framework.labels
        while m:
            low = m & -m
            i = low.bit_length() - 1
            yield ArgumentId(i, labels[i])
            m ^= low

    def __contains__(self, item: object) -> bool:
        if isinstance(item, ArgumentId):
            return bool(self.mask >> item.index & 1)
        if isinstance(item, str):
            return bool(self.mask >> self.framework.index_of(item) & 1)
        return False

    @property
    def labels(self) -> tuple[str, ...]:
        return tuple(a.label for a in self)

    def _check(self, other: "ArgumentSet") -> None:
        if other.framework != self.framework:
            raise ValueError("argument sets belong to different frameworks")

    def union(self, other: "ArgumentSet") -> "ArgumentSet":
        self._check(other)
        return ArgumentSet(self.framework, self.mask | other.mask)

    def intersection(self, other: "ArgumentSet") -> "ArgumentSet":
        self._check(other)
        return ArgumentSet(self.framework, self.mask & other.mask)

    def difference(self, other: "ArgumentSet") -> "ArgumentSet":
        self._check(other)
        return ArgumentSet(self.framework, self.mask & ~other.mask)

    def complement(self) -> "ArgumentSet":
        return ArgumentSet(self.framework, self.framework.full_mask & ~self.mask)

    def issubset(self, other: "ArgumentSet") -> bool:
        self._check(other)
        return self.mask & ~other.mask == 0

    def __le__(self, other: "ArgumentSet") -> bool:
        return self.issubset(other)

    def __str__(self) -> str:
        return "{" + ", ".join(self.labels) + "}"


def random_framework(n_args: int, edge_prob: float,
                     seed: int) -> ArgumentationFramework:
    """A seeded random framework with labels a0..a{n-1}.

    Each ordered pair, self-attacks included, is drawn independently with
    the given probability; pairs are visited row-major by index so the same
    seed always yields the same graph.
    """
    if n_args < 0:
        raise ValueError("n_args must be non-negative")
    if not 0.0 <= edge_prob <= 1.0:
        raise ValueError("edge_prob must lie in [0, 1]")
    rng = random.Random(seed)
    labels = [f"a{i}" for i in range(n_args)]
    attacks = [(labels[s], labels[d])
               for s in range(n_args) for d in range(n_args)
               if rng.random() < edge_prob]
    return ArgumentationFramework(labels, attacks)


def connected_components(
        fw: ArgumentationFramework) -> tuple[ArgumentationFramework, ...]:
    """Weakly connected components as label-preserving sub-frameworks.

    Components are ordered by their smallest member index; isolated
    arguments form singleton components.
    """
    n = len(fw)
    undirected = [fw.attacker_mask(i) | fw.target_mask(i) for i in range(n)]
    seen = 0
    parts: list[ArgumentationFramework] = []
    for start in range(n):
        if seen >> start & 1:
            continue
        comp = 1 << start
        frontier = 1 << start
        while frontier:
            nxt = 0
            m = frontier
            while m:
                low = m & -m
                nxt |= undirected[low.bit_length() - 1]
                m ^= low
            frontier = nxt & ~comp
            comp |= nxt
        seen |= comp
        members = [i for i in range(n) if comp >> i & 1]
        labels = [fw.labels[i] for i in members]
        inside = set(members)
        attacks = [(fw.labels[s], fw.labels[d]) for s, d in fw.attack_indices
                   if s in inside and d in inside]
        parts.append(ArgumentationFramework(labels, attacks))
    return tuple(parts)


def disjoint_union(a: ArgumentationFramework,
                   b: ArgumentationFramework) -> ArgumentationFramework:
    """Side-by-side union of two frameworks with disjoint label sets."""
    clash = set(a.labels) & set(b.labels)
    if clash:
        raise ValueError(f"label sets overlap: {sorted(clash)}")
    return ArgumentationFramework(a.labels + b.labels,
                                  a.attacks + b.attacks)


def relabel(fw: ArgumentationFramework,
            mapping: dict[str, str]) -> ArgumentationFramework:
    """Rename arguments through a total injective label mapping."""
    missing = [lab for lab in fw.labels if lab not in mapping]
    if missing:
        raise ValueError(f"mapping misses labels: {missing}")
    new_labels = [mapping[lab] for lab in fw.labels]
    if len(set(new_labels)) != len(new_labels):
        raise ValueError("mapping is not injective on the framework's labels")
    return ArgumentationFramework(
        new_labels, [(mapping[s], mapping[d]) for s, d in fw.attacks])

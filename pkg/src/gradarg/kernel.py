"""Graded acceptability kernel: counting operators and their iteration.

The neutrality operator at tolerance l keeps the arguments with fewer
than l attackers inside a set. The defense operator at grade (m, n)
keeps the arguments with fewer than m live attackers, where an attacker
counts as live when the set musters fewer than n counter-attackers
against it. Defense is exactly neutrality composed with itself at the
two thresholds, and both collapse to the classical Dung operators at
threshold one.

Iterating defense from below (least fixpoint) or from above (greatest
fixpoint under the swapped grade) yields the streams that build graded
extensions; the full stage-by-stage record is kept so callers can
inspect convergence.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .errors import NotExpandableError
from .framework import ArgumentationFramework, ArgumentSet


@dataclass(frozen=True)
class GradeParams:
    """The (l, m, n) triple: conflict tolerance, defense-failure
    tolerance, and required counter-attackers."""

    l: int
    m: int
    n: int

    def __post_init__(self) -> None:
        if self.l < 1 or self.m < 1 or self.n < 1:
            raise ValueError("grade parameters must be positive")

    @property
    def existence_safe(self) -> bool:
        """Whether the parameters lie in the region where grounded
        extensions are guaranteed to exist (n >= m and l >= m)."""
        return self.n >= self.m and self.l >= self.m

    @property
    def defense_grade(self) -> "DefenseGrade":
        return DefenseGrade(self.m, self.n)


@dataclass(frozen=True)
class DefenseGrade:
    """The (m, n) pair grading the defense operator."""

    m: int
    n: int

    def __post_init__(self) -> None:
        if self.m < 1 or self.n < 1:
            raise ValueError("grade parameters must be positive")


class GradeOrdering(Enum):
    STRONGER = "stronger"
    WEAKER = "weaker"
    EQUAL = "equal"
    INCOMPARABLE = "incomparable"


def compare_grades(g1: DefenseGrade, g2: DefenseGrade) -> GradeOrdering:
    """Partial strength order: (m,n) is at least as strong as (s,t)
    iff m <= s and t <= n; lower failure tolerance and higher
    counter-attack demands mean fewer arguments get defended."""
    if g1 == g2:
        return GradeOrdering.EQUAL
    if g1.m <= g2.m and g2.n <= g1.n:
        return GradeOrdering.STRONGER
    if g2.m <= g1.m and g1.n <= g2.n:
        return GradeOrdering.WEAKER
    return GradeOrdering.INCOMPARABLE


def compare_grades_lexicographic(g1: DefenseGrade,
                                 g2: DefenseGrade) -> GradeOrdering:
    """Total refinement of the strength order: m ascending first, then
    n descending. Never returns INCOMPARABLE and agrees with
    compare_grades wherever that is decisive."""
    k1, k2 = (g1.m, -g1.n), (g2.m, -g2.n)
    if k1 == k2:
        return GradeOrdering.EQUAL
    return GradeOrdering.STRONGER if k1 < k2 else GradeOrdering.WEAKER


# -- mask-level operators (hot path) -----------------------------------


def neutrality_mask(fw: ArgumentationFramework, l: int, xmask: int) -> int:
    out = 0
    bit = 1
    for i in range(len(fw)):
        if (fw.attacker_mask(i) & xmask).bit_count() < l:
            out |= bit
        bit <<= 1
    return out


def defense_mask(fw: ArgumentationFramework, m: int, n: int,
                 xmask: int) -> int:
    out = 0
    bit = 1
    attacker_mask = fw.attacker_mask
    for i in range(len(fw)):
        live = 0
        att = attacker_mask(i)
        while att:
            low = att & -att
            if (attacker_mask(low.bit_length() - 1) & xmask).bit_count() < n:
                live += 1
                if live >= m:
                    break
            att ^= low
        if live < m:
            out |= bit
        bit <<= 1
    return out


# -- public operators ---------------------------------------------------


def graded_neutrality(fw: ArgumentationFramework, l: int,
                      x: ArgumentSet) -> ArgumentSet:
    """Arguments with fewer than l attackers inside x."""
    if l < 1:
        raise ValueError("l must be positive")
    if x.framework != fw:
        raise ValueError("argument set belongs to a different framework")
    return ArgumentSet(fw, neutrality_mask(fw, l, x.mask))


def graded_defense(fw: ArgumentationFramework, m: int, n: int,
                   x: ArgumentSet) -> ArgumentSet:
    """Arguments with fewer than m attackers that x fails to
    counter-attack at least n times."""
    if m < 1 or n < 1:
        raise ValueError("m and n must be positive")
    if x.framework != fw:
        raise ValueError("argument set belongs to a different framework")
    return ArgumentSet(fw, defense_mask(fw, m, n, x.mask))


def saturation_bound(fw: ArgumentationFramework) -> int:
    """K = max in-degree + 1. All thresholds at or above K behave
    identically: n_l is constantly full for l >= K, d_mn is constantly
    full for m >= K, and d_mn no longer depends on n for n >= K."""
    return fw.max_in_degree + 1


def unattacked_closure(fw: ArgumentationFramework) -> ArgumentSet:
    """The arguments with no attackers at all."""
    mask = 0
    for i in range(len(fw)):
        if fw.attacker_mask(i) == 0:
            mask |= 1 << i
    return ArgumentSet(fw, mask)


@dataclass(frozen=True)
class IterationStream:
    """A recorded defense-operator iteration.

    ``stages`` runs from the start value up to and including the first
    repeated stage, so ``stages[stabilized_at] == stages[stabilized_at+1]``
    always holds and ``limit`` is the repeated value. ``grade`` is the
    grade of the operator actually applied at each step (for the upper
    stream this is the swapped grade).
    """

    framework: ArgumentationFramework
    grade: DefenseGrade
    start: ArgumentSet
    stages: tuple[ArgumentSet, ...]
    stabilized_at: int

    @property
    def limit(self) -> ArgumentSet:
        return self.stages[-1]


def _iterate_to_fixpoint(fw: ArgumentationFramework, m: int, n: int,
                         start_mask: int) -> tuple[list[int], int]:
    """Iterate the (m, n) defense operator, returning all stages up to
    and including the first repeat. Only valid for monotone orbits
    (each stage comparable with the next); callers guarantee that."""
    stages = [start_mask]
    while True:
        nxt = defense_mask(fw, m, n, stages[-1])
        stages.append(nxt)
        if nxt == stages[-2]:
            return stages, len(stages) - 2


def lfp_from(fw: ArgumentationFramework, m: int, n: int,
             x: ArgumentSet) -> IterationStream:
    """The non-decreasing defense iteration from x; its limit is the
    least fixpoint of the (m, n) defense operator containing x.

    Requires x to defend itself at grade (m, n), otherwise the
    sequence would not be monotone.
    """
    if x.framework != fw:
        raise ValueError("argument set belongs to a different framework")
    first = defense_mask(fw, m, n, x.mask)
    if x.mask & ~first:
        raise NotExpandableError(
            f"start set {x} is not contained in its own grade-({m},{n}) defense")
    stages, stabilized = _iterate_to_fixpoint(fw, m, n, x.mask)
    return IterationStream(fw, DefenseGrade(m, n), x,
                           tuple(ArgumentSet(fw, s) for s in stages),
                           stabilized)


def gfp_from(fw: ArgumentationFramework, m: int, n: int,
             x: ArgumentSet) -> IterationStream:
    """The non-increasing iteration of the swapped-grade defense
    operator d_nm starting from the n-neutral set of x; its limit is
    the greatest fixpoint of d_nm inside that start.

    The parameter swap is encoded here once: callers pass the same
    (m, n) they would pass to lfp_from. The same self-defense
    precondition applies.
    """
    if x.framework != fw:
        raise ValueError("argument set belongs to a different framework")
    if x.mask & ~defense_mask(fw, m, n, x.mask):
        raise NotExpandableError(
            f"start set {x} is not contained in its own grade-({m},{n}) defense")
    top = neutrality_mask(fw, n, x.mask)
    stages, stabilized = _iterate_to_fixpoint(fw, n, m, top)
    return IterationStream(fw, DefenseGrade(n, m), x,
                           tuple(ArgumentSet(fw, s) for s in stages),
                           stabilized)

"""Graded extension families: fixpoint constructions and brute force.

A set is an extension at grade (l, m, n) when it tolerates at most l-1
internal attacks per member (conflict-freeness), defends each member
against all but at most m-1 attackers, each discounted once n
counter-attacks are mustered (self-defense), and, depending on the
semantics, is a fixpoint, the least fixpoint, a maximal such set, or
additionally a fixpoint of the m-neutrality operator (stability).

Two independent routes are provided: direct constructions by fixpoint
iteration (valid on the existence-safe parameter region n >= m, l >= m)
and exhaustive subset enumeration (valid anywhere, exponential).
"""
from __future__ import annotations

import os
from dataclasses import dataclass
from enum import Enum
from typing import Iterator

from .errors import (ConstraintViolatedError, NoExtensionError,
                     NotAdmissibleError, NotReachingError, TooLargeError)
from .framework import ArgumentationFramework, ArgumentSet, DEFAULT_MAX_ARGS
from .kernel import (GradeParams, IterationStream, defense_mask, lfp_from,
                     neutrality_mask)

MAX_ARGS_ENV = "GRADARG_MAX_ARGS"


class Semantics(Enum):
    ADMISSIBLE = "admissible"
    COMPLETE = "complete"
    GROUNDED = "grounded"
    PREFERRED = "preferred"
    STABLE = "stable"


class Existence(Enum):
    FOUND = "found"
    NONE_EXISTS = "none-exists"
    NO_UNIQUE_MINIMUM = "no-unique-minimum"


class JustificationMode(Enum):
    CREDULOUS = "credulous"
    SCEPTICAL = "sceptical"


@dataclass(frozen=True)
class Witness:
    """A diagnostic attached to negative verdicts: the set involved and
    the predicate clause it falls foul of."""

    clause: str
    arguments: ArgumentSet | None = None


@dataclass(frozen=True)
class ExtensionFamily:
    semantics: Semantics
    params: GradeParams
    extensions: tuple[ArgumentSet, ...]
    existence: Existence
    witness: Witness | None = None


@dataclass(frozen=True)
class JustifiedReport:
    semantics: Semantics
    params: GradeParams
    mode: JustificationMode
    arguments: ArgumentSet


@dataclass(frozen=True)
class ConvergenceReport:
    converged: bool
    params: GradeParams
    lower: IterationStream
    witness: Witness


def resolve_max_args(explicit: int | None = None) -> int:
    """Enumeration cap: explicit argument, else GRADARG_MAX_ARGS, else 24."""
    if explicit is not None:
        return explicit
    env = os.environ.get(MAX_ARGS_ENV)
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise ValueError(f"{MAX_ARGS_ENV} must be an integer, got {env!r}")
    return DEFAULT_MAX_ARGS


# -- predicates ---------------------------------------------------------


def is_l_conflict_free(fw: ArgumentationFramework, l: int,
                       x: ArgumentSet) -> bool:
    return _l_conflict_free_mask(fw, l, x.mask)


def _l_conflict_free_mask(fw: ArgumentationFramework, l: int,
                          xmask: int) -> bool:
    m = xmask
    while m:
        low = m & -m
        if (fw.attacker_mask(low.bit_length() - 1) & xmask).bit_count() >= l:
            return False
        m ^= low
    return True


def is_lmn_admissible(fw: ArgumentationFramework, params: GradeParams,
                      x: ArgumentSet) -> bool:
    return (_l_conflict_free_mask(fw, params.l, x.mask)
            and x.mask & ~defense_mask(fw, params.m, params.n, x.mask) == 0)


def is_lmn_complete(fw: ArgumentationFramework, params: GradeParams,
                    x: ArgumentSet) -> bool:
    return (_l_conflict_free_mask(fw, params.l, x.mask)
            and defense_mask(fw, params.m, params.n, x.mask) == x.mask)


def is_lmn_stable(fw: ArgumentationFramework, params: GradeParams,
                  x: ArgumentSet) -> bool:
    """Stable: a defense fixpoint that is also a fixpoint of m-neutrality
    (so it keeps everything it fails to attack m times out) and is
    l-conflict-free."""
    return (defense_mask(fw, params.m, params.n, x.mask) == x.mask
            and neutrality_mask(fw, params.m, x.mask) == x.mask
            and _l_conflict_free_mask(fw, params.l, x.mask))


# -- brute-force enumeration --------------------------------------------


def _subsets_by_popcount(n: int) -> Iterator[int]:
    """All masks over n bits, popcount ascending, value ascending within
    each popcount class (Gosper's hack)."""
    yield 0
    top = 1 << n
    for k in range(1, n + 1):
        x = (1 << k) - 1
        while x < top:
            yield x
            c = x & -x
            r = x + c
            x = (((r ^ x) >> 2) // c) | r


def enumerate_extensions(fw: ArgumentationFramework, semantics: Semantics,
                         params: GradeParams,
                         max_args: int | None = None) -> ExtensionFamily:
    """Scan all subsets for the requested extension predicate.

    Valid at every parameter triple; exponential in the argument count,
    hence the cap. Extensions come out sorted by (size, bitmask).
    """
    cap = resolve_max_args(max_args)
    if len(fw) > cap:
        raise TooLargeError(
            f"{len(fw)} arguments exceed the enumeration cap {cap}")
    l, m, n = params.l, params.m, params.n
    if semantics is Semantics.ADMISSIBLE:
        hits = [x for x in _subsets_by_popcount(len(fw))
                if _l_conflict_free_mask(fw, l, x)
                and x & ~defense_mask(fw, m, n, x) == 0]
        return _family(fw, semantics, params, hits)
    if semantics is Semantics.STABLE:
        hits = [x for x in _subsets_by_popcount(len(fw))
                if defense_mask(fw, m, n, x) == x
                and neutrality_mask(fw, m, x) == x
                and _l_conflict_free_mask(fw, l, x)]
        return _family(fw, semantics, params, hits)
    completes = [x for x in _subsets_by_popcount(len(fw))
                 if _l_conflict_free_mask(fw, l, x)
                 and defense_mask(fw, m, n, x) == x]
    if semantics is Semantics.COMPLETE:
        return _family(fw, semantics, params, completes)
    if semantics is Semantics.PREFERRED:
        maximal = [x for x in completes
                   if not any(y != x and x & ~y == 0 for y in completes)]
        return _family(fw, semantics, params, maximal)
    if semantics is Semantics.GROUNDED:
        if not completes:
            limit = _lfp_mask(fw, m, n)
            return ExtensionFamily(
                semantics, params, (), Existence.NONE_EXISTS,
                Witness("no l-conflict-free defense fixpoint exists; "
                        "least defense fixpoint shown",
                        ArgumentSet(fw, limit)))
        least = [x for x in completes
                 if all(x & ~y == 0 for y in completes)]
        if not least:
            return ExtensionFamily(
                semantics, params, (), Existence.NO_UNIQUE_MINIMUM,
                Witness("complete family has no least element; "
                        "a minimal element shown",
                        ArgumentSet(fw, completes[0])))
        return _family(fw, semantics, params, least)
    raise ValueError(f"unknown semantics {semantics!r}")


def _family(fw: ArgumentationFramework, semantics: Semantics,
            params: GradeParams, masks: list[int]) -> ExtensionFamily:
    masks = sorted(masks, key=lambda x: (x.bit_count(), x))
    return ExtensionFamily(
        semantics, params,
        tuple(ArgumentSet(fw, x) for x in masks),
        Existence.FOUND if masks else Existence.NONE_EXISTS,
        None if masks else Witness("no subset satisfies the predicate"))


# -- constructions ------------------------------------------------------


def _require_constraint(params: GradeParams) -> None:
    if not params.existence_safe:
        raise ConstraintViolatedError(
            f"params (l={params.l}, m={params.m}, n={params.n}) lie outside "
            "the existence-safe region (need n >= m and l >= m)")


def _lfp_mask(fw: ArgumentationFramework, m: int, n: int) -> int:
    cur = 0
    while True:
        nxt = defense_mask(fw, m, n, cur)
        if nxt == cur:
            return cur
        cur = nxt


def grounded_unconditional(fw: ArgumentationFramework,
                           params: GradeParams) -> ArgumentSet | None:
    """Least defense fixpoint if l-conflict-free, else None.

    Provably equal to what enumerate_extensions reports for the grounded
    semantics at any triple: every fixpoint contains the least one, so a
    conflict inside the least fixpoint persists in all of them.
    """
    limit = _lfp_mask(fw, params.m, params.n)
    if _l_conflict_free_mask(fw, params.l, limit):
        return ArgumentSet(fw, limit)
    return None


def grounded_by_construction(fw: ArgumentationFramework,
                             params: GradeParams) -> ExtensionFamily:
    """The least complete extension, built by iterating defense from
    the empty set; only defined on the existence-safe region."""
    _require_constraint(params)
    stream = lfp_from(fw, params.m, params.n, fw.empty_set())
    limit = stream.limit
    if not _l_conflict_free_mask(fw, params.l, limit.mask):
        return ExtensionFamily(
            Semantics.GROUNDED, params, (), Existence.NONE_EXISTS,
            Witness("least defense fixpoint is not l-conflict-free", limit))
    return ExtensionFamily(Semantics.GROUNDED, params, (limit,),
                           Existence.FOUND)


def complete_closure(fw: ArgumentationFramework, params: GradeParams,
                     x: ArgumentSet) -> ArgumentSet:
    """The smallest complete extension containing an admissible set.

    A start that is l-conflict-free but not m-conflict-free (possible
    only when l > m) can grow into a fixpoint with too many internal
    attacks. Any complete superset of the start would have to contain
    that fixpoint, and conflict-freeness survives taking subsets, so in
    that case no complete extension contains the start at all.
    """
    _require_constraint(params)
    if not is_lmn_admissible(fw, params, x):
        raise NotAdmissibleError(
            f"start set {x} is not ({params.l},{params.m},{params.n})-admissible")
    limit = lfp_from(fw, params.m, params.n, x).limit
    if not _l_conflict_free_mask(fw, params.l, limit.mask):
        raise NoExtensionError(
            f"no ({params.l},{params.m},{params.n})-complete extension "
            f"contains {x}: its defense closure is not "
            f"{params.l}-conflict-free", Witness(
                "defense closure with too many internal attacks", limit))
    return limit


def preferred_by_reachability(fw: ArgumentationFramework,
                              params: GradeParams,
                              x: ArgumentSet) -> ArgumentSet:
    """The defense closure of an admissible set that attack-reaches the
    whole graph.

    The closure is always the smallest complete extension containing the
    start. With l == m it is also maximal, hence preferred: nothing
    outside it can join without either losing its defense chain back to
    the start or breaching the conflict bound. With l > m the extra
    conflict tolerance lets mutually attacking arguments defend each
    other in a cycle that never bottoms out in the start, so a strictly
    larger complete extension may exist.
    """
    _require_constraint(params)
    if not is_lmn_admissible(fw, params, x):
        raise NotAdmissibleError(
            f"start set {x} is not ({params.l},{params.m},{params.n})-admissible")
    reached = 0
    frontier = x.mask
    while frontier:
        step = 0
        m = frontier
        while m:
            low = m & -m
            step |= fw.target_mask(low.bit_length() - 1)
            m ^= low
        frontier = step & ~reached
        reached |= step
    if reached != fw.full_mask:
        missing = ArgumentSet(fw, fw.full_mask & ~reached)
        raise NotReachingError(
            f"start set {x} does not attack-reach {missing}")
    limit = lfp_from(fw, params.m, params.n, x).limit
    if not _l_conflict_free_mask(fw, params.l, limit.mask):
        raise NoExtensionError(
            f"no ({params.l},{params.m},{params.n})-complete extension "
            f"contains {x}: its defense closure is not "
            f"{params.l}-conflict-free", Witness(
                "defense closure with too many internal attacks", limit))
    return limit


def stable_convergence_check(fw: ArgumentationFramework, params: GradeParams,
                             x: ArgumentSet) -> ConvergenceReport:
    """Whether the lower defense stream meets its upper shadow.

    The upper stream applies n-neutrality to each lower stage; the lower
    stages grow, so the upper ones shrink, and on a finite graph the
    upper limit is the n-neutral set of the lower limit. When the two
    limits coincide, that common set is the smallest stable extension
    containing the start, re-checked against the stable predicate.
    """
    _require_constraint(params)
    if not is_lmn_admissible(fw, params, x):
        raise NotAdmissibleError(
            f"start set {x} is not ({params.l},{params.m},{params.n})-admissible")
    lower = lfp_from(fw, params.m, params.n, x)
    upper = neutrality_mask(fw, params.n, lower.limit.mask)
    if upper != lower.limit.mask:
        return ConvergenceReport(
            False, params, lower,
            Witness("upper limit differs from the least fixpoint",
                    ArgumentSet(fw, upper)))
    limit = lower.limit
    if not is_lmn_stable(fw, params, limit):
        return ConvergenceReport(
            False, params, lower,
            Witness("streams meet but the limit is not stable", limit))
    return ConvergenceReport(
        True, params, lower,
        Witness("smallest stable extension containing the start", limit))


def justified(fw: ArgumentationFramework, semantics: Semantics,
              params: GradeParams, mode: JustificationMode,
              max_args: int | None = None) -> JustifiedReport:
    """Credulous = union of the family; sceptical = intersection.

    Over an empty family the sceptical set is everything (empty
    intersection over a finite universe) and the credulous set is empty.
    """
    family = enumerate_extensions(fw, semantics, params, max_args)
    if mode is JustificationMode.CREDULOUS:
        mask = 0
        for ext in family.extensions:
            mask |= ext.mask
    else:
        mask = fw.full_mask
        for ext in family.extensions:
            mask &= ext.mask
    return JustifiedReport(semantics, params, mode, ArgumentSet(fw, mask))

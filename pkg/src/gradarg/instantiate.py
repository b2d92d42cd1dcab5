"""From stratified propositional bases to defeat graphs.

A knowledge base is a sequence of strata B1..Bk, B1 strongest.
Arguments are minimal consistent premise sets with their claims;
attacks hit premise occurrences whose negation the attacker claims,
and an attack defeats unless the attacker is strictly less preferred
than the attacked premise. Preferred subtheories are computed
independently, stratum by stratum, so the correspondence with stable
extensions of the defeat graph can be checked rather than assumed.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable

from .errors import (AtomBoundError, KnowledgeBaseError,
                     TooManyArgumentsError)
from .framework import ArgumentationFramework, ArgumentSet
from .kernel import GradeParams
from .logic import (MAX_ATOMS, Formula, atoms, complement, complementary,
                    entails, format_formula, is_consistent, parse_formula)
from .semantics import (JustificationMode, Semantics, enumerate_extensions,
                        resolve_max_args)


@dataclass(frozen=True)
class KnowledgeBase:
    """Stratified base; stratum 1 is the most preferred."""

    strata: tuple[tuple[Formula, ...], ...]

    def __post_init__(self) -> None:
        if not self.strata:
            raise KnowledgeBaseError("empty knowledge base")
        seen: set[Formula] = set()
        names: set[str] = set()
        for level, stratum in enumerate(self.strata, start=1):
            if not stratum:
                raise KnowledgeBaseError(f"stratum {level} is empty")
            for f in stratum:
                if f in seen:
                    raise KnowledgeBaseError(
                        f"duplicate formula {format_formula(f)!r}")
                seen.add(f)
                names |= atoms(f)
        if len(names) > MAX_ATOMS:
            raise AtomBoundError(
                f"{len(names)} atoms exceed the bound {MAX_ATOMS}")

    @property
    def formulas(self) -> tuple[Formula, ...]:
        return tuple(f for stratum in self.strata for f in stratum)

    def stratum_of(self, f: Formula) -> int:
        for level, stratum in enumerate(self.strata, start=1):
            if f in stratum:
                return level
        raise KeyError(format_formula(f))


_KB_LINE = re.compile(r"(\d+)\s*:\s*(\S.*)")


def parse_kb(text: str) -> KnowledgeBase:
    """Lines `k: <formula>`; k is a positive stratum index, 1 strongest.
    Duplicate formulas are rejected wherever they appear."""
    by_level: dict[int, list[Formula]] = {}
    seen: dict[Formula, int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        match = _KB_LINE.fullmatch(line)
        if not match:
            raise KnowledgeBaseError(
                "expected 'k: formula' with a positive stratum index", lineno)
        level = int(match.group(1))
        if level < 1:
            raise KnowledgeBaseError("stratum index must be >= 1", lineno)
        try:
            formula = parse_formula(match.group(2))
        except Exception as exc:
            raise KnowledgeBaseError(str(exc), lineno) from exc
        if formula in seen:
            raise KnowledgeBaseError(
                f"formula already given on line {seen[formula]}", lineno)
        seen[formula] = lineno
        by_level.setdefault(level, []).append(formula)
    if not by_level:
        raise KnowledgeBaseError("empty knowledge base")
    return KnowledgeBase(tuple(
        tuple(by_level[k]) for k in sorted(by_level)))


def _maximal_consistent(prefix: tuple[Formula, ...],
                        stratum: tuple[Formula, ...]) -> list[tuple[Formula, ...]]:
    kept_masks: list[int] = []
    kept: list[tuple[Formula, ...]] = []
    size = len(stratum)
    # descending popcount so kept sets are maximal by construction
    for mask in sorted(range(1 << size), key=lambda v: (-v.bit_count(), v)):
        if any(prev & mask == mask for prev in kept_masks):
            continue
        chosen = tuple(stratum[i] for i in range(size) if mask >> i & 1)
        if is_consistent(prefix + chosen):
            kept_masks.append(mask)
            kept.append(chosen)
    return kept


def preferred_subtheories(kb: KnowledgeBase) -> tuple[frozenset[Formula], ...]:
    """All bases obtainable by greedily taking a maximal consistent
    subset of each stratum in preference order."""
    prefixes: list[tuple[Formula, ...]] = [()]
    for stratum in kb.strata:
        prefixes = [prefix + chosen
                    for prefix in prefixes
                    for chosen in _maximal_consistent(prefix, stratum)]
    ordered = kb.formulas
    index = {f: i for i, f in enumerate(ordered)}

    def mask_of(subset: Iterable[Formula]) -> int:
        out = 0
        for f in subset:
            out |= 1 << index[f]
        return out

    unique = {mask_of(p): frozenset(p) for p in prefixes}
    return tuple(unique[m] for m in sorted(unique))


@dataclass(frozen=True)
class ClassicalArgument:
    premises: frozenset[Formula]
    claim: Formula

    @property
    def is_premise_arg(self) -> bool:
        return self.premises == frozenset((self.claim,))

    def __str__(self) -> str:
        inner = ", ".join(sorted(format_formula(f) for f in self.premises))
        return f"({{{inner}}}, {format_formula(self.claim)})"


def _minimal_entailing(base: tuple[Formula, ...],
                       goal: Formula) -> list[frozenset[Formula]]:
    kept_masks: list[int] = []
    out: list[frozenset[Formula]] = []
    size = len(base)
    # ascending popcount: any superset of a kept set is non-minimal
    for mask in sorted(range(1 << size), key=lambda v: (v.bit_count(), v)):
        if any(prev & mask == prev for prev in kept_masks):
            continue
        chosen = [base[i] for i in range(size) if mask >> i & 1]
        if is_consistent(chosen) and entails(chosen, goal):
            kept_masks.append(mask)
            out.append(frozenset(chosen))
    return out


def generate_arguments(kb: KnowledgeBase,
                       max_args: int | None = None) -> tuple[ClassicalArgument, ...]:
    """Premise arguments plus every minimal consistent entailer of the
    negation of a base formula. Order: premise bitmask, then claim text."""
    base = kb.formulas
    found: set[ClassicalArgument] = set()
    for beta in base:
        if is_consistent([beta]):
            found.add(ClassicalArgument(frozenset((beta,)), beta))
    for goal in {complement(beta) for beta in base}:
        for premises in _minimal_entailing(base, goal):
            found.add(ClassicalArgument(premises, goal))
    cap = resolve_max_args(max_args)
    if len(found) > cap:
        raise TooManyArgumentsError(
            f"{len(found)} generated arguments exceed the limit {cap}")
    index = {f: i for i, f in enumerate(base)}

    def key(arg: ClassicalArgument) -> tuple[int, str]:
        mask = 0
        for f in arg.premises:
            mask |= 1 << index[f]
        return mask, format_formula(arg.claim)

    return tuple(sorted(found, key=key))


@dataclass(frozen=True)
class DefeatGraph:
    framework: ArgumentationFramework
    arguments: tuple[ClassicalArgument, ...]
    attack_pairs: frozenset[tuple[str, str]]

    def argument_of(self, label: str) -> ClassicalArgument:
        return self.arguments[self.framework.index_of(label)]

    def label_of(self, arg: ClassicalArgument) -> str:
        return self.framework.labels[self.arguments.index(arg)]


def build_defeat_graph(kb: KnowledgeBase,
                       max_args: int | None = None) -> DefeatGraph:
    """Attacks hit a premise occurrence whose complement the attacker
    claims; the attack defeats unless some attacker premise sits
    strictly below that occurrence's stratum."""
    args = generate_arguments(kb, max_args)
    labels = [f"A{i + 1}" for i in range(len(args))]
    attacks: set[tuple[str, str]] = set()
    defeats: set[tuple[str, str]] = set()
    for i, attacker in enumerate(args):
        worst = max((kb.stratum_of(g) for g in attacker.premises), default=0)
        for j, target in enumerate(args):
            for beta in target.premises:
                if not complementary(attacker.claim, beta):
                    continue
                attacks.add((labels[i], labels[j]))
                if worst <= kb.stratum_of(beta):
                    defeats.add((labels[i], labels[j]))
    framework = ArgumentationFramework(labels, sorted(defeats))
    return DefeatGraph(framework, args, frozenset(attacks))


@dataclass(frozen=True)
class CorrespondenceReport:
    matches: bool
    subtheory_premise_sets: tuple[frozenset[Formula], ...]
    stable_premise_sets: tuple[frozenset[Formula], ...]
    stable_equals_preferred: bool
    detail: str


def _premise_sets(graph: DefeatGraph,
                  extensions: tuple[ArgumentSet, ...]) -> set[frozenset[Formula]]:
    out: set[frozenset[Formula]] = set()
    for ext in extensions:
        combined: frozenset[Formula] = frozenset()
        for arg_id in ext:
            combined |= graph.arguments[arg_id.index].premises
        out.add(combined)
    return out


def ps_correspondence_check(kb: KnowledgeBase,
                            max_args: int | None = None) -> CorrespondenceReport:
    """Premise sets of the (1,1,1)-stable extensions of the defeat graph
    must be exactly the preferred subtheories, and on these graphs the
    stable and preferred families must coincide."""
    graph = build_defeat_graph(kb, max_args)
    params = GradeParams(1, 1, 1)
    stable = enumerate_extensions(graph.framework, Semantics.STABLE, params,
                                  max_args=max_args)
    preferred = enumerate_extensions(graph.framework, Semantics.PREFERRED,
                                     params, max_args=max_args)
    stable_sets = _premise_sets(graph, stable.extensions)
    subtheories = set(preferred_subtheories(kb))
    same_family = set(stable.extensions) == set(preferred.extensions)
    sets_match = stable_sets == subtheories
    if sets_match and same_family:
        detail = "premise sets of stable extensions match the subtheories"
    elif not sets_match:
        only_stable = stable_sets - subtheories
        only_ps = subtheories - stable_sets
        parts = []
        if only_stable:
            parts.append("extra stable premise sets: " + "; ".join(
                sorted("{" + ", ".join(sorted(map(format_formula, s))) + "}"
                       for s in only_stable)))
        if only_ps:
            parts.append("unmatched subtheories: " + "; ".join(
                sorted("{" + ", ".join(sorted(map(format_formula, s))) + "}"
                       for s in only_ps)))
        detail = "; ".join(parts)
    else:
        detail = "stable and preferred families differ on the defeat graph"

    def sort_key(s: frozenset[Formula]) -> tuple[str, ...]:
        return tuple(sorted(format_formula(f) for f in s))

    return CorrespondenceReport(
        matches=sets_match and same_family,
        subtheory_premise_sets=tuple(sorted(subtheories, key=sort_key)),
        stable_premise_sets=tuple(sorted(stable_sets, key=sort_key)),
        stable_equals_preferred=same_family,
        detail=detail)


@dataclass(frozen=True)
class InferenceReport:
    holds: bool
    mode: JustificationMode
    params: GradeParams
    goal: Formula
    premise_sets: tuple[frozenset[Formula], ...]


def graded_inference(kb: KnowledgeBase, params: GradeParams, goal: Formula,
                     mode: JustificationMode,
                     max_args: int | None = None) -> InferenceReport:
    """Whether every (sceptical) or some (credulous) premise set of an
    lmn-preferred extension of the defeat graph entails the goal."""
    graph = build_defeat_graph(kb, max_args)
    family = enumerate_extensions(graph.framework, Semantics.PREFERRED,
                                  params, max_args=max_args)
    sets = sorted(_premise_sets(graph, family.extensions),
                  key=lambda s: tuple(sorted(map(format_formula, s))))
    answers = [entails(s, goal) for s in sets]
    holds = (all(answers) if mode is JustificationMode.SCEPTICAL
             else any(answers))
    return InferenceReport(holds=holds, mode=mode, params=params, goal=goal,
                           premise_sets=tuple(sets))

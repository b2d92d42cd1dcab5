"""Shared strategies and helpers for the test suite."""
from __future__ import annotations

import itertools
import random

from hypothesis import strategies as st

import oracles as oc
from gradarg.framework import ArgumentationFramework, random_framework
from gradarg.logic import parse_formula

# -- plain-data views for the oracle ----------------------------------------


def labels_attacks(fw: ArgumentationFramework):
    return tuple(fw.labels), tuple(fw.attacks)


def family_sets(family) -> set[frozenset[str]]:
    return {frozenset(ext.labels) for ext in family.extensions}


def seeded_corpus(count: int, *, sizes=(3, 8), edge_prob: float = 0.18,
                  seed0: int = 0):
    """Deterministic stream of random frameworks with sizes cycling
    through the inclusive range."""
    lo, hi = sizes
    for i in range(count):
        yield random_framework(lo + i % (hi - lo + 1), edge_prob, seed0 + i)


def random_kb_text(seed: int) -> str:
    """Stratified bases of at most 5 formulas over at most 4 atoms and
    3 strata; tautologies and contradictions are excluded so premise
    arguments stay minimal and complements stay entailable."""
    rng = random.Random(seed)
    pool_atoms = "abcd"[:rng.randint(2, 4)]
    shapes = [
        lambda r: r.choice(pool_atoms),
        lambda r: "!" + r.choice(pool_atoms),
        lambda r: "{} | {}".format(*r.sample(pool_atoms, 2)),
        lambda r: "{} & {}".format(*r.sample(pool_atoms, 2)),
        lambda r: "{} -> {}".format(*r.sample(pool_atoms, 2)),
        lambda r: "!{} | !{}".format(*r.sample(pool_atoms, 2)),
    ]
    n_formulas = rng.randint(2, 5)
    n_strata = rng.randint(1, 3)
    seen: set[str] = set()
    lines: list[str] = []
    while len(lines) < n_formulas:
        text = rng.choice(shapes)(rng)
        f = parse_formula(text)
        if text in seen or oc.tautology(f) or not oc.consistent([f]):
            continue
        seen.add(text)
        lines.append(f"{rng.randint(1, n_strata)}: {text}")
    return "\n".join(lines) + "\n"


# -- hypothesis strategies ---------------------------------------------------


@st.composite
def frameworks(draw, max_args: int = 6, min_args: int = 1):
    n = draw(st.integers(min_args, max_args))
    labels = [f"x{i}" for i in range(n)]
    pairs = list(itertools.product(labels, repeat=2))
    attacks = draw(st.lists(st.sampled_from(pairs), unique=True,
                            max_size=len(pairs)))
    return ArgumentationFramework(labels, attacks)


@st.composite
def framework_and_subset(draw, max_args: int = 6):
    fw = draw(frameworks(max_args=max_args))
    mask = draw(st.integers(0, fw.full_mask))
    return fw, fw.set_from_mask(mask)

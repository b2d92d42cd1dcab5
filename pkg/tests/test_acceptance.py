"""End-to-end acceptance battery.

One test per shipped guarantee, so a verbose run reads as a checklist.
Each check recomputes its expected values through an independent route
(hand-checked constants, the brute-force oracle, or both).
"""
import random

import oracles as oc
from conftest import family_sets, labels_attacks, random_kb_text, seeded_corpus
from gradarg.fixtures import (defended_two_on_one, quality_precedence,
                              self_contradiction, self_loop_and_edge,
                              shared_target_chain, single_chain, three_cycle,
                              two_on_one)
from gradarg.framework import disjoint_union
from gradarg.instantiate import (build_defeat_graph, parse_kb,
                                 preferred_subtheories,
                                 ps_correspondence_check)
from gradarg.kernel import (GradeParams, defense_mask, gfp_from,
                            graded_defense, lfp_from, neutrality_mask,
                            saturation_bound, unattacked_closure)
from gradarg.logic import parse_formula
from gradarg.postulates import CheckResult, corpus_checks, named_counterexamples_match
from gradarg.ranking import (Relation, absolute_rank, contextual_equals_grounded,
                             contextual_rank)
from gradarg.semantics import (Existence, Semantics, complete_closure,
                               enumerate_extensions, grounded_by_construction)


def family(fw, semantics, l, m, n):
    return enumerate_extensions(fw, semantics, GradeParams(l, m, n))


def test_c01_three_cycle_relaxed_grades_accept_the_whole_cycle():
    """The odd cycle has only the empty classical extension, but with
    two tolerated attackers and single-attack defense the full set is
    the grounded, preferred, and stable extension at once."""
    fw = three_cycle()
    assert family_sets(family(fw, Semantics.COMPLETE, 1, 1, 1)) == {
        frozenset()}
    whole = {frozenset({"a", "b", "c"})}
    for semantics in (Semantics.GROUNDED, Semantics.PREFERRED,
                      Semantics.STABLE):
        got = family(fw, semantics, 2, 2, 1)
        assert got.existence is Existence.FOUND
        assert family_sets(got) == whole


def test_c02_shared_target_chain_closure_and_fixpoint_bounds():
    """Classical values on the mutual pair with a tail: empty grounded
    extension, defense closure of {a} is {a, d}, that closure is one of
    the two preferred extensions, and the upper iteration from the
    empty set stays at the full set."""
    fw = shared_target_chain()
    grounded = grounded_by_construction(fw, GradeParams(1, 1, 1))
    assert family_sets(grounded) == {frozenset()}
    closure = complete_closure(fw, GradeParams(1, 1, 1), fw.set_of(["a"]))
    assert sorted(closure.labels) == ["a", "d"]
    preferred = family_sets(family(fw, Semantics.PREFERRED, 1, 1, 1))
    assert frozenset(closure.labels) in preferred
    assert preferred == {frozenset({"a", "d"}), frozenset({"b", "d"})}
    upper = gfp_from(fw, 1, 1, fw.empty_set())
    assert frozenset(upper.limit.labels) == frozenset(fw.labels)


def test_c03_defended_two_on_one_saturates_in_two_steps_yet_has_no_extension():
    """Iterating two-tolerant defense from the empty set covers all
    five arguments after two applications, but the limit keeps a
    doubly-attacked member, so no (2,2,1) extension exists."""
    fw = defended_two_on_one()
    stream = lfp_from(fw, 2, 1, fw.empty_set())
    stages = [frozenset(stage.labels) for stage in stream.stages]
    assert stages[0] == frozenset()
    assert stages[1] == frozenset({"b3", "c3", "d3", "e3"})
    assert stages[2] == frozenset(fw.labels)
    assert stream.stabilized_at == 2
    listed = family(fw, Semantics.COMPLETE, 2, 2, 1)
    assert listed.existence is Existence.NONE_EXISTS
    assert listed.extensions == ()


def test_c04_two_on_one_defense_shrinks_as_counterattacks_are_required():
    """Raising the demanded number of counter-attackers from 1 to 3
    drops a2, whose attacker is only counter-attacked twice."""
    fw = two_on_one()
    x = fw.set_of(["d2", "c2", "a2"])
    assert sorted(graded_defense(fw, 1, 1, x).labels) == ["a2", "c2", "d2"]
    assert sorted(graded_defense(fw, 1, 2, x).labels) == ["a2", "c2", "d2"]
    assert sorted(graded_defense(fw, 1, 3, x).labels) == ["c2", "d2"]


def test_c05_contextual_ranking_orders_the_three_component_union():
    """On the chain, the double-attack graph, and the defended graph
    side by side: unattacked arguments outrank everything, double
    defense beats single defense, shallow defense beats deep defense,
    and the chain's middle beats the doubly-attacked middle."""
    fw = disjoint_union(disjoint_union(single_chain(), two_on_one()),
                        defended_two_on_one())
    order = contextual_rank(fw, fw.empty_set())
    for top in unattacked_closure(fw):
        assert order.strictly_above(top.label, "a2")
    assert order.strictly_above("a2", "a1")
    assert order.strictly_above("a1", "a3")
    assert order.strictly_above("b1", "b2")
    grades = order.signatures["a3"].grades
    assert (3, 3) in grades
    assert (2, 2) not in grades


def test_c06_construction_enumeration_and_classical_oracle_agree():
    """200 seeded frameworks: the fixpoint construction and brute-force
    enumeration return identical grounded families at every guarded
    triple, and at (1,1,1) all families match a from-the-definitions
    classical implementation."""
    p111 = GradeParams(1, 1, 1)
    for fw in seeded_corpus(200, sizes=(3, 8), edge_prob=0.18, seed0=0):
        bound = saturation_bound(fw)
        for m in range(1, bound + 1):
            for l in range(m, bound + 1):
                for n in range(m, bound + 1):
                    params = GradeParams(l, m, n)
                    built = grounded_by_construction(fw, params)
                    listed = enumerate_extensions(fw, Semantics.GROUNDED,
                                                  params)
                    assert built.existence == listed.existence, (fw, params)
                    assert family_sets(built) == family_sets(listed), (
                        fw, params)
        labels, attacks = labels_attacks(fw)
        assert family_sets(
            enumerate_extensions(fw, Semantics.GROUNDED, p111)) == {
                frozenset(oc.dung_grounded(labels, attacks))}
        assert family_sets(
            enumerate_extensions(fw, Semantics.COMPLETE, p111)) == (
                oc.dung_complete(labels, attacks))
        assert family_sets(
            enumerate_extensions(fw, Semantics.PREFERRED, p111)) == (
                oc.dung_preferred(labels, attacks))
        stable = enumerate_extensions(fw, Semantics.STABLE, p111)
        stable_sets = oc.dung_stable(labels, attacks)
        assert family_sets(stable) == stable_sets
        assert (stable.existence is Existence.FOUND) == bool(stable_sets)


def test_c07_kernel_laws_hold_exhaustively_on_small_frameworks():
    """Defense is the composition of the two neutrality passes and is
    monotone in the set argument; neutrality is antitone; and grades
    move the outputs monotonically (looser attack tolerance grows the
    neutral set, looser defense demand grows the defended set, higher
    counter-attack demand shrinks it)."""

    def masks_for(fw, seed):
        size = len(fw)
        if size <= 6:
            return range(1 << size)
        rng = random.Random(seed)
        return [rng.getrandbits(size) for _ in range(40)]

    small = seeded_corpus(24, sizes=(1, 6), edge_prob=0.25, seed0=700)
    bigger = seeded_corpus(8, sizes=(7, 8), edge_prob=0.18, seed0=760)
    for i, fw in enumerate([*small, *bigger]):
        labels, attacks = labels_attacks(fw)
        bound = saturation_bound(fw) + 1
        for xmask in masks_for(fw, seed=900 + i):
            x = fw.set_from_mask(xmask)
            for m in range(1, bound + 1):
                for n in range(1, bound + 1):
                    composed = neutrality_mask(
                        fw, m, neutrality_mask(fw, n, xmask))
                    assert defense_mask(fw, m, n, xmask) == composed
                    assert frozenset(graded_defense(fw, m, n, x).labels) == (
                        oc.graded_defense(labels, attacks, m, n,
                                          frozenset(x.labels)))
                    assert defense_mask(fw, m, n, xmask) & ~defense_mask(
                        fw, m + 1, n, xmask) == 0
                    assert defense_mask(fw, m, n + 1, xmask) & ~defense_mask(
                        fw, m, n, xmask) == 0
                assert neutrality_mask(fw, m, xmask) & ~neutrality_mask(
                    fw, m + 1, xmask) == 0
            for bit in range(len(fw)):
                ymask = xmask | (1 << bit)
                for g in range(1, bound + 1):
                    assert neutrality_mask(fw, g, ymask) & ~neutrality_mask(
                        fw, g, xmask) == 0
                    assert defense_mask(fw, g, g, xmask) & ~defense_mask(
                        fw, g, g, ymask) == 0


def test_c08_family_lattice_and_unattacked_core_on_the_corpus():
    """Stable extensions are complete, preferred extensions are
    complete, stable extensions are preferred whenever the tolerated
    attack count equals the defense demand (above it, extra tolerance
    admits non-maximal stable sets), and unattacked arguments sit
    inside every grounded extension that exists."""
    stable_cases = 0
    for fw in seeded_corpus(60, sizes=(3, 7), edge_prob=0.2, seed0=80):
        core = frozenset(unattacked_closure(fw).labels)
        bound = saturation_bound(fw)
        for m in range(1, bound + 1):
            for l in range(m, bound + 1):
                for n in range(m, bound + 1):
                    complete = family_sets(
                        family(fw, Semantics.COMPLETE, l, m, n))
                    preferred = family_sets(
                        family(fw, Semantics.PREFERRED, l, m, n))
                    stable = family_sets(
                        family(fw, Semantics.STABLE, l, m, n))
                    assert preferred <= complete
                    assert stable <= complete
                    if l == m:
                        assert stable <= preferred, (fw, l, m, n)
                        stable_cases += len(stable)
                    grounded = grounded_by_construction(
                        fw, GradeParams(l, m, n))
                    for ext in grounded.extensions:
                        assert core <= frozenset(ext.labels)
    assert stable_cases >= 100


def test_c09_contextual_ranking_collapses_to_grounded_membership():
    """Grading an argument into the empty-context ranking at (m, n) is
    the same fact as membership in the least defense fixpoint there,
    across the whole corpus."""
    for fw in seeded_corpus(200, sizes=(3, 8), edge_prob=0.18, seed0=0):
        agree, disagreement = contextual_equals_grounded(fw)
        assert agree, (fw, disagreement)


def test_c10_postulate_battery_returns_the_expected_verdict_table():
    """Verdicts on the named counterexamples, cross-checked witnesses,
    and an all-holds corpus sweep for the checkers that should hold."""
    matched, battery = named_counterexamples_match()
    assert matched
    by_name = {(v.postulate, v.semantics): v for v in battery}
    all_three = (Semantics.GROUNDED, Semantics.PREFERRED, Semantics.STABLE)
    assert by_name[("abstraction", all_three)].result is CheckResult.HOLDS
    assert by_name[("independence", all_three)].result is CheckResult.HOLDS
    assert by_name[("strict independence",
                    (Semantics.STABLE,))].result is CheckResult.VIOLATED
    assert by_name[("void precedence",
                    (Semantics.GROUNDED,
                     Semantics.PREFERRED))].result is CheckResult.HOLDS
    assert by_name[("void precedence",
                    (Semantics.STABLE,))].result is CheckResult.VIOLATED
    assert by_name[("self contradiction",
                    (Semantics.PREFERRED,))].result is CheckResult.VIOLATED
    quality = by_name[("quality precedence", (Semantics.PREFERRED,))]
    assert quality.result is CheckResult.VIOLATED
    assert quality.witness.pair == ("a", "b")
    assert quality.witness.relation is Relation.INCOMPARABLE
    assert quality.witness.framework == quality_precedence()
    for path_check in ("attack path addition", "attack path increase",
                       "defense path increase"):
        verdicts = [v for v in battery if v.postulate == path_check]
        assert verdicts and all(
            v.result is CheckResult.VIOLATED for v in verdicts)
    # the unattacked argument fails to outrank either neighbour of the
    # self-attacker under stable semantics
    stable_order = absolute_rank(self_loop_and_edge(), Semantics.STABLE)
    assert stable_order.compare("b", "c") is Relation.EQUIVALENT
    assert not stable_order.strictly_above("b", "a")
    contra = by_name[("self contradiction", (Semantics.PREFERRED,))]
    assert contra.witness.framework == self_contradiction()
    for verdict in corpus_checks(count=30, seed=0):
        assert verdict.result is CheckResult.HOLDS, str(verdict)


def test_c11_preferred_subtheories_match_stable_premise_sets():
    """The split base has exactly its two maximal consistent
    subtheories, and on it plus 50 random stratified bases the premise
    sets of stable extensions reproduce the subtheories exactly, with
    stable and preferred families agreeing."""
    kb = parse_kb("1: !a | !b\n2: a\n2: b\n")
    ps = {frozenset(s) for s in preferred_subtheories(kb)}
    assert ps == {
        frozenset({parse_formula("!a | !b"), parse_formula("a")}),
        frozenset({parse_formula("!a | !b"), parse_formula("b")})}
    report = ps_correspondence_check(kb)
    assert report.matches and report.stable_equals_preferred
    for seed in range(50):
        report = ps_correspondence_check(parse_kb(random_kb_text(seed)))
        assert report.matches, (seed, report.detail)
        assert report.stable_equals_preferred, seed


def test_c12a_accrued_negative_arguments_outrank_the_positive_side():
    """In the flat base {a, b, !a | !b, !a}, every argument claiming !a
    and the premise argument for b rank strictly above every argument
    built on the premise a."""
    graph = build_defeat_graph(parse_kb("1: a\n1: b\n1: !a | !b\n1: !a\n"))
    order = absolute_rank(graph.framework, Semantics.PREFERRED)
    neg_a, prem_a, prem_b = (parse_formula(t) for t in ("!a", "a", "b"))
    upper = {label for label in graph.framework.labels
             if graph.argument_of(label).claim == neg_a
             or graph.argument_of(label).premises == frozenset({prem_b})}
    lower = {label for label in graph.framework.labels
             if prem_a in graph.argument_of(label).premises}
    assert upper == {"A2", "A6", "A7"}
    assert lower == {"A1", "A3", "A5"}
    for top in upper:
        for bottom in lower:
            assert order.strictly_above(top, bottom), (top, bottom)


def test_c12b_demoting_the_negative_premise_flattens_the_ranking():
    """With !a moved to a weaker stratum, all seven arguments are
    expected to fall into a single equivalence class."""
    graph = build_defeat_graph(parse_kb("1: a\n1: b\n1: !a | !b\n2: !a\n"))
    order = absolute_rank(graph.framework, Semantics.PREFERRED)
    classes = order.equivalence_classes()
    assert len(classes) == 1, classes

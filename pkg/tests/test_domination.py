import pytest
from hypothesis import given, settings

from semitotal import (
    BudgetExceededError,
    Conventions,
    EmptyGraphError,
    Graph,
    IsolatesError,
    PLAIN,
    SEMITOTAL_EXACT,
    SEMITOTAL_WITHIN,
    TOTAL,
    Variant,
    WitnessRule,
    bits_list,
    brute_force_number,
    complete,
    complete_bipartite,
    count_by_size,
    cycle,
    disjoint_copies,
    domination_number,
    friendship,
    is_dominating,
    is_semitotal,
    is_total_dominating,
    mask_from,
    minimum_sets,
    path,
    petersen,
    semitotal,
    star,
)

from conftest import graphs
from corpus import family_corpus, full_corpus

ALL_VARIANTS = (PLAIN, TOTAL, SEMITOTAL_WITHIN, SEMITOTAL_EXACT)
OFF = Conventions(complete_singleton=False)


def valid_masks(g, variant):
    """Independent reference enumeration using only the membership predicates."""
    out = []
    for m in range(1, 1 << g.n):
        if variant.kind == "plain":
            ok = is_dominating(g, m)
        elif variant.kind == "total":
            ok = is_total_dominating(g, m)
        else:
            ok = is_semitotal(g, m, variant.rule)
        if ok:
            out.append(m)
    return out


# -- predicates -----------------------------------------------------------


def test_is_dominating_examples():
    assert is_dominating(cycle(4), mask_from([0, 2]))
    assert is_dominating(path(5), mask_from([1, 3]))
    assert not is_dominating(path(3), 0)
    with pytest.raises(EmptyGraphError):
        is_dominating(Graph(0, []), 0)


def test_is_total_dominating_examples():
    assert is_total_dominating(path(4), mask_from([1, 2]))
    assert not is_total_dominating(cycle(4), mask_from([0, 2]))
    assert not is_total_dominating(complete(2), mask_from([0]))
    with pytest.raises(IsolatesError):
        is_total_dominating(Graph.from_edges(3, [(0, 1)]), 0b111)


def test_is_semitotal_examples():
    c4 = cycle(4)
    pair = mask_from([0, 1])
    assert is_semitotal(c4, pair, WitnessRule.WITHIN_TWO)
    assert not is_semitotal(c4, pair, WitnessRule.EXACTLY_TWO)
    leaves = mask_from([1, 2, 3])
    assert is_semitotal(star(3), leaves, WitnessRule.EXACTLY_TWO)


def test_singletons_never_semitotal_via_predicate():
    for rule in WitnessRule:
        assert not is_semitotal(complete(3), mask_from([0]), rule)


# -- numbers --------------------------------------------------------------


def test_number_examples():
    for rule in WitnessRule:
        assert domination_number(path(5), semitotal(rule)) == 2
    assert domination_number(complete(5), SEMITOTAL_EXACT) == 1
    assert domination_number(complete(5), SEMITOTAL_EXACT, OFF) is None
    assert domination_number(complete_bipartite(2, 3), SEMITOTAL_EXACT) == 2
    assert domination_number(path(10), PLAIN) == 4
    for rule in WitnessRule:
        assert domination_number(path(10), semitotal(rule)) == 4


def test_brute_force_examples():
    assert brute_force_number(petersen(), PLAIN) == 3
    assert brute_force_number(petersen(), SEMITOTAL_EXACT) == 3
    assert brute_force_number(cycle(6), SEMITOTAL_WITHIN) == 3


def test_brute_force_budget():
    with pytest.raises(BudgetExceededError):
        brute_force_number(path(23), PLAIN)
    assert brute_force_number(path(23), PLAIN, budget=23) == 8


def test_empty_and_isolate_errors():
    empty = Graph(0, [])
    for op in (domination_number, brute_force_number):
        with pytest.raises(EmptyGraphError):
            op(empty, PLAIN)
    lonely = Graph.from_edges(3, [(0, 1)])
    for variant in (TOTAL, SEMITOTAL_WITHIN, SEMITOTAL_EXACT):
        with pytest.raises(IsolatesError):
            domination_number(lonely, variant)
    assert domination_number(lonely, PLAIN) == 2


def test_complete_gate_precedes_isolate_check():
    # K1 is complete: the convention applies even though it has no neighbor.
    assert domination_number(complete(1), SEMITOTAL_WITHIN) == 1
    with pytest.raises(IsolatesError):
        domination_number(complete(1), SEMITOTAL_WITHIN, OFF)


def test_disconnected_complete_component_is_undefined_under_exact_rule():
    two_k2 = disjoint_copies(complete(2), 2)
    assert domination_number(two_k2, SEMITOTAL_EXACT) is None
    assert brute_force_number(two_k2, SEMITOTAL_EXACT) is None
    # witnesses never cross components, so within-2 needs both whole copies
    assert domination_number(two_k2, SEMITOTAL_WITHIN) == 4


def test_minimum_sets_examples():
    assert minimum_sets(star(3), SEMITOTAL_EXACT) == [mask_from([1, 2, 3])]
    assert [bits_list(m) for m in minimum_sets(cycle(4), SEMITOTAL_EXACT)] == [[0, 2], [1, 3]]
    assert minimum_sets(path(3), PLAIN) == [mask_from([1])]
    assert minimum_sets(complete(4), SEMITOTAL_EXACT, limit=2) == [0b1, 0b10]
    assert minimum_sets(complete(3), SEMITOTAL_EXACT, OFF) == []


def test_minimum_sets_are_valid_and_optimal():
    for g in (path(7), cycle(8), complete_bipartite(3, 4), friendship(3)):
        for variant in ALL_VARIANTS:
            opt = domination_number(g, variant)
            sets = minimum_sets(g, variant, limit=50)
            valid = set(valid_masks(g, variant))
            assert sets, (g.name, variant)
            for m in sets:
                assert m.bit_count() == opt
                assert m in valid


# -- oracle agreement -----------------------------------------------------


@given(graphs(min_n=1, max_n=7))
@settings(max_examples=80, deadline=None)
def test_solver_matches_brute_force_random(g):
    for variant in ALL_VARIANTS:
        if variant.kind != "plain" and not g.is_isolate_free():
            continue
        assert domination_number(g, variant) == brute_force_number(g, variant)


def test_solver_matches_brute_force_sixteen_vertices():
    from semitotal import join, wheel

    big = [path(16), cycle(16), complete_bipartite(8, 8), wheel(16),
           friendship(7), join(path(7), path(9))]
    for g in big:
        for variant in ALL_VARIANTS:
            assert domination_number(g, variant) == brute_force_number(g, variant, budget=16)


def test_solver_matches_reference_enumeration_small():
    for g in (path(5), cycle(5), star(4), complete_bipartite(2, 3), friendship(2)):
        for variant in ALL_VARIANTS:
            ref = valid_masks(g, variant)
            expected = min((m.bit_count() for m in ref), default=None)
            assert domination_number(g, variant, OFF) == expected


# -- structural properties ------------------------------------------------


def test_sandwich_property_on_families():
    for g in family_corpus(12):
        if not g.is_isolate_free() or g.is_complete():
            continue
        gamma = domination_number(g, PLAIN)
        within = domination_number(g, SEMITOTAL_WITHIN)
        total = domination_number(g, TOTAL)
        assert gamma <= within <= total, g.name


def test_half_bound_on_connected_families():
    for g in family_corpus(14):
        if g.n < 4 or not g.is_connected() or g.is_complete():
            continue
        within = domination_number(g, SEMITOTAL_WITHIN)
        assert 2 * within <= g.n, g.name


@given(graphs(min_n=2, max_n=7))
@settings(max_examples=60, deadline=None)
def test_within_rule_is_superset_monotone(g):
    if not g.is_isolate_free():
        return
    for m in valid_masks(g, SEMITOTAL_WITHIN):
        for w in range(g.n):
            assert is_semitotal(g, m | 1 << w, WitnessRule.WITHIN_TWO)


@given(graphs(min_n=2, max_n=7))
@settings(max_examples=60, deadline=None)
def test_exact_rule_supersets_keep_domination_and_old_witnesses(g):
    if not g.is_isolate_free():
        return
    sphere = [g.sphere_exactly_two(v) for v in range(g.n)]
    for m in valid_masks(g, SEMITOTAL_EXACT):
        for w in range(g.n):
            bigger = m | 1 << w
            assert is_dominating(g, bigger)
            for v in bits_list(m):
                assert bigger & sphere[v]


@given(graphs(min_n=2, max_n=6))
@settings(max_examples=40, deadline=None)
def test_semitotal_predicate_against_networkx_distances(g):
    # independent oracle: recompute the witness condition with networkx BFS
    # distances instead of the package's distance-2 masks
    import networkx as nx

    if not g.is_isolate_free():
        return
    nxg = nx.Graph()
    nxg.add_nodes_from(range(g.n))
    nxg.add_edges_from(g.edges())
    lengths = dict(nx.all_pairs_shortest_path_length(nxg))

    def reference(members, rule):
        vs = bits_list(members)
        covered = set()
        for v in vs:
            covered |= {v} | set(nxg[v])
        if covered != set(range(g.n)):
            return False
        for v in vs:
            good = False
            for u in vs:
                if u == v or u not in lengths[v]:
                    continue
                d = lengths[v][u]
                if d == 2 or (rule is WitnessRule.WITHIN_TWO and d <= 2):
                    good = True
                    break
            if not good:
                return False
        return True

    for m in range(1 << g.n):
        for rule in WitnessRule:
            assert is_semitotal(g, m, rule) == reference(m, rule), (g.edges(), m, rule)


# -- counting -------------------------------------------------------------


def test_count_examples():
    assert count_by_size(star(3), SEMITOTAL_EXACT).coeffs == (0, 0, 0, 1, 0)
    assert count_by_size(cycle(4), SEMITOTAL_WITHIN)[2] == 6
    assert count_by_size(cycle(4), SEMITOTAL_EXACT)[2] == 2


def test_count_budget_error():
    with pytest.raises(BudgetExceededError):
        count_by_size(path(15), PLAIN, budget=14)


def test_count_matches_reference_enumeration():
    for g in (path(6), cycle(5), star(4), complete_bipartite(2, 3), complete(4)):
        for variant in ALL_VARIANTS:
            counts = count_by_size(g, variant, OFF)
            ref = valid_masks(g, variant)
            for i in range(g.n + 1):
                assert counts[i] == sum(m.bit_count() == i for m in ref)


def test_count_convention_gate_adds_singletons():
    with_gate = count_by_size(complete(4), SEMITOTAL_EXACT)
    without = count_by_size(complete(4), SEMITOTAL_EXACT, OFF)
    assert with_gate[1] == 4
    assert without[1] == 0
    assert with_gate.coeffs[2:] == without.coeffs[2:]


def test_count_coefficients_vanish_below_optimum():
    for g in (path(7), cycle(6), complete_bipartite(3, 3)):
        for variant in ALL_VARIANTS:
            counts = count_by_size(g, variant)
            opt = domination_number(g, variant)
            assert counts[opt] >= 1
            assert all(counts[i] == 0 for i in range(opt))


def test_plain_count_complement_identity():
    for g in (path(6), cycle(6), star(5)):
        counts = count_by_size(g, PLAIN)
        non_dominating = sum(1 for m in range(1 << g.n) if not is_dominating(g, m))
        assert counts.evaluate(1) + non_dominating == 1 << g.n


def test_counting_is_deterministic():
    a = count_by_size(friendship(3), SEMITOTAL_EXACT)
    b = count_by_size(friendship(3), SEMITOTAL_EXACT)
    assert a.coeffs == b.coeffs


def test_full_corpus_is_desk_scale():
    corpus = full_corpus(14)
    assert len(corpus) >= 150
    assert all(g.n <= 14 for g in corpus)

from itertools import combinations_with_replacement

import pytest

from minvan.sorou import canonicalize, sorou
from minvan.typegen import (
    GenerationConfig,
    candidate_f0s,
    generate_next_weight,
    partitions_into_parts,
    types_2pq_oracle,
    typesum_pool,
)
from minvan.types import TypeSum, render_type



CFG13 = GenerationConfig(target_weight=13)


def brute_force_partitions(n, k):
    out = set()
    for combo in combinations_with_replacement(range(1, n + 1), k):
        if sum(combo) == n:
            out.add(tuple(sorted(combo, reverse=True)))
    return out


def test_partitions_examples():
    assert partitions_into_parts(3, 2) == [(2, 1)]
    assert set(partitions_into_parts(6, 3)) == {(4, 1, 1), (3, 2, 1), (2, 2, 2)}
    # the independent brute force fixes the count (11, = p(6))
    brute = brute_force_partitions(13, 7)
    assert set(partitions_into_parts(13, 7)) == brute
    assert len(brute) == 11
    assert partitions_into_parts(2, 3) == []


def test_candidate_f0s_weight1():
    assert candidate_f0s(1, 7, CFG13) == [((1, 0),)]
    assert candidate_f0s(1, 2, CFG13) == [((1, 0),)]


def test_candidate_f0s_weight2_top7():
    cfg = GenerationConfig(target_weight=15, enable_conjugate_collapse=False)
    f0s = candidate_f0s(2, 7, cfg)
    assert sorou([(1, 0), (5, 1)]) in f0s
    assert sorou([(1, 0), (3, 1)]) in f0s
    assert sorou([(1, 0), (30, 1)]) in f0s  # 1 - nu_3 nu_5
    assert sorou([(1, 0), (2, 1)]) not in f0s  # vanishing subsorou
    # uncollapsed: one representative per rotation class of 1 + nu_30^e
    expected = {canonicalize(sorou([(1, 0), (30, e)])) for e in range(1, 30) if e != 15}
    assert set(f0s) == expected
    assert len(f0s) == 14
    collapsed = candidate_f0s(2, 7, GenerationConfig(target_weight=15))
    assert len(collapsed) == 6  # one per Galois orbit: orders 30,15,10,6,5,3


def test_candidate_f0s_repeated_terms_flag():
    base = GenerationConfig(target_weight=21)
    with_repeats = GenerationConfig(target_weight=21, allow_repeated_f0_terms=True)
    plain = set(candidate_f0s(3, 7, base))
    extended = set(candidate_f0s(3, 7, with_repeats))
    assert plain <= extended
    assert any(len(set(f0)) < 3 for f0 in extended - plain)


def test_uncollapsed_generation_counts(db16, shared_cache):
    # without the family collapse weight 15 has 15 distinct types
    # ((R_7:1+nu_5^y:R_5) splits into its two Galois members)
    from minvan.enumeration import type_statistics
    from minvan.store import TypeDatabase

    cfg = dict(enable_conjugate_collapse=False)
    db = TypeDatabase(collapse=False)
    for w in range(2, 16):
        new = generate_next_weight(db, GenerationConfig(target_weight=w, **cfg))
        db.commit_weight(w, [type_statistics(m, shared_cache) for m in new])
    assert len(db.records_for_weight(15)) == 15
    assert [len(db.records_for_weight(w)) for w in range(2, 15)] == [
        1, 1, 0, 1, 1, 2, 2, 2, 2, 4, 5, 8, 10]


def test_typesum_pool(db16):
    assert [render_type(t) for t in typesum_pool(3, 7, 1, db16)] == ["(R3;1:0)"]
    pool5 = typesum_pool(5, 7, 2, db16)
    assert {render_type(t) for t in pool5} == {"(R5;1:0)", "(R3;1:0)&(R2;1:0)"}
    pool6 = typesum_pool(6, 7, 1, db16)
    assert {render_type(t) for t in pool6} == {"(R5;1:0;(R3;1:0))"}


def test_generate_weight6_and_13(db16):
    by_weight = {w: db16.records_for_weight(w) for w in range(2, 17)}
    assert [render_type(r.type) for r in by_weight[6]] == ["(R5;1:0;(R3;1:0))"]
    w13 = {render_type(r.type) for r in by_weight[13]}
    expected = {
        "(R13;1:0)",
        "(R11;1:0;(R3;1:0);(R3;1:0))",
        "(R7;1:0;(R5;1:0;(R3;1:0);(R3;1:0);(R3;1:0)))",
        "(R7;1:0;(R5;1:0;(R3;1:0);(R3;1:0));(R3;1:0))",
        "(R7;1:0;(R5;1:0);(R5;1:0))",
        "(R7;1:0;(R5;1:0;(R3;1:0));(R3;1:0);(R3;1:0))",
        "(R7;1:0;(R5;1:0);(R3;1:0);(R3;1:0);(R3;1:0))",
        "(R7;1:0;(R3;1:0);(R3;1:0);(R3;1:0);(R3;1:0);(R3;1:0);(R3;1:0))",
    }
    assert w13 == expected


def test_weight15_includes_first_wf0_2_family(db16):
    w15 = {render_type(r.type) for r in db16.records_for_weight(15)}
    assert "(R7;1:0+5:1;(R5;1:0))" in w15


def test_determinism(db16):
    cfg = GenerationConfig(target_weight=13)
    first = generate_next_weight(_truncated(db16, 12), cfg)
    second = generate_next_weight(_truncated(db16, 12), cfg)
    assert first == second


def test_threads_do_not_change_output(db16):
    base = generate_next_weight(_truncated(db16, 12), GenerationConfig(target_weight=13))
    threaded = generate_next_weight(
        _truncated(db16, 12), GenerationConfig(target_weight=13, threads=2)
    )
    assert base == threaded


def test_incomplete_database_rejected(db16):
    with pytest.raises(ValueError):
        generate_next_weight(_truncated(db16, 12), GenerationConfig(target_weight=15))


def _truncated(db, max_weight):
    from minvan.store import TypeDatabase

    out = TypeDatabase(max_complete_weight=max_weight, collapse=db.collapse)
    out.records = [r for r in db.records if r.weight <= max_weight]
    return out


def test_2pq_oracle_35():
    got = {render_type(TypeSum((m,))) for m in types_2pq_oracle(3, 5, 9)}
    expected = {
        "(R2;1:0)",
        "(R3;1:0)",
        "(R5;1:0)",
        "(R5;1:0;(R3;1:0))",
        "(R5;1:0;(R3;1:0);(R3;1:0))",
        "(R5;1:0;(R3;1:0);(R3;1:0);(R3;1:0))",
        "(R5;1:0;(R3;1:0);(R3;1:0);(R3;1:0);(R3;1:0))",
    }
    assert got == expected
    assert {render_type(TypeSum((m,))) for m in types_2pq_oracle(3, 5, 2)} == {"(R2;1:0)"}


def test_2pq_oracle_57_families():
    got = {render_type(TypeSum((m,))) for m in types_2pq_oracle(5, 7, 16)}
    assert "(R7;1:0+5:1;(R5;1:0))" in got
    assert "(R7;1:0+5:1;(R5;1:0);(R5;1:0))" in got


def test_oracle_agrees_with_generator(db16):
    oracle = {render_type(TypeSum((m,))) for m in types_2pq_oracle(3, 5, 9)}
    generated = {
        render_type(r.type)
        for r in db16.records
        if r.weight <= 9 and all(30 % x == 0 for x in r.relative_orders)
    }
    assert generated == oracle


def test_minvan_filter_flag_no_effect_at_small_weight(db16, shared_cache):
    # with the filter off the same weight-13 list must emerge
    db12 = _truncated(db16, 12)
    on = generate_next_weight(db12, GenerationConfig(target_weight=13))
    off = generate_next_weight(
        db12, GenerationConfig(target_weight=13, enable_minvan_subtype_filter=False)
    )
    assert on == off


def test_every_generated_type_passes_both_minimality_paths(db16):
    from minvan.minimality import is_minimal_vanishing, is_minimal_vanishing_bruteforce
    from minvan.types import representative_sorou

    for record in db16.records:
        rep = representative_sorou(record.type)
        assert is_minimal_vanishing(rep).minimal
        if record.weight <= 14:
            assert is_minimal_vanishing_bruteforce(rep)

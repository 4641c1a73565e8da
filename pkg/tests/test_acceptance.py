"""Acceptance gate: one test per criterion, exact integer equalities only.

Run with ``pytest tests/test_acceptance.py -v -s`` to see one PASS line per
criterion; a failing criterion fails its test.
"""

from aperykit.affine import AffineMonoid, affine_members_bruteforce, apery_affine
from aperykit.apery import apery_delta, gaps_via_groebner, type_set
from aperykit.groebner import buchberger, ideal_generators, normal_form
from aperykit.orders import apery_order, lex_order
from aperykit.semigroup import (
    NumericalSemigroup,
    apery_bruteforce,
    gaps,
    hasse_diagram,
    pf_bruteforce,
    selmer_invariants,
    typeset_bruteforce,
)
from aperykit.homology import build_delta, pf_via_homology, reduced_homology_ranks

from .test_groebner import LEX_BASIS_7_9_11, NF_TABLE_7_9_11


def _ok(n: int, text: str) -> None:
    print(f"ACCEPTANCE {n} PASS: {text}")


def test_criterion_1_apery_golden_sets():
    cases = [
        ((7, 9, 11, 15), 7, [0, 9, 11, 15, 20, 24, 26]),
        ((7, 9, 11, 15), 15, [0, 7, 9, 11, 14, 16, 18, 20, 21, 23, 25, 27, 28, 32, 34]),
        ((7, 8, 9, 13), 13, [0, 7, 8, 9, 14, 15, 16, 17, 18, 23, 24, 25, 32]),
    ]
    for gens, s, expected in cases:
        S = NumericalSemigroup(gens)
        assert apery_bruteforce(S, s) == expected, (gens, s, "oracle")
        j = gens.index(s) + 1
        assert list(apery_delta(S, j).elements) == expected, (gens, s, "staircase")
    _ok(1, "published Apery sets reproduced by both routes")


def test_criterion_2_gaps_golden_sets():
    cases = [
        ((7, 9, 11), [1, 2, 3, 4, 5, 6, 8, 10, 12, 13, 15, 17, 19, 24, 26], 26),
        ((7, 8, 9, 13), [1, 2, 3, 4, 5, 6, 10, 11, 12, 19], 19),
    ]
    for gens, expected_gaps, expected_f in cases:
        S = NumericalSemigroup(gens)
        assert gaps(S) == expected_gaps
        assert selmer_invariants(S, gens[0]).frobenius == expected_f
        order = lex_order(len(gens) + 1)
        basis = buchberger(ideal_generators(S, order), order)
        assert gaps_via_groebner(S, basis) == expected_gaps
    _ok(2, "published gap sets and Frobenius numbers via both routes")


def test_criterion_3_groebner_structure():
    S = NumericalSemigroup([7, 9, 11])
    order = lex_order(4)
    basis = buchberger(ideal_generators(S, order), order)
    assert len(basis.elements) == 17
    assert basis.corners == {lead for lead, _ in LEX_BASIS_7_9_11}
    for l, expected in NF_TABLE_7_9_11.items():
        assert normal_form((l, 0, 0, 0), basis) == expected
    _ok(3, "17-element lex basis with published corners and normal-form table")


def test_criterion_4_typeset_machinery():
    S = NumericalSemigroup([7, 8, 9, 13])
    report = type_set(S)
    parts = {
        label.split("inner=")[1]: set(val) for label, val in report.extremal_sets.items()
    }
    assert parts["1-2-3,revlex"] == {24, 32}
    assert parts["1-3-2,revlex"] == {14, 18, 23, 25, 32}
    assert report.type_set == (32,)
    assert set.intersection(*parts.values()) == {32}

    S2 = NumericalSemigroup([3, 7, 11])
    report2 = type_set(S2)
    assert report2.type_set == (15, 19)
    assert report2.pf == (4, 8)
    edges = hasse_diagram(S2, 11)
    sinks = sorted(set(apery_bruteforce(S2, 11)) - {x for x, _ in edges})
    assert sinks == [15, 19]
    _ok(4, "published extremal sets, their intersection, and Hasse sinks")


def test_criterion_5_order_independence(corpus100, corpus100_pipelines):
    assert len(corpus100) == 100
    for S in corpus100:
        pipelines = corpus100_pipelines[S.generators]
        assert len(pipelines) >= 3  # lex layer plus k-1 >= 2 reverse-lex layers
        expected = apery_bruteforce(S, S.generators[-1])
        element_sets = {p.report.elements for p in pipelines}
        assert len(element_sets) == 1, S.generators
        assert list(pipelines[0].report.elements) == expected, S.generators
    _ok(5, "delta sets agree across inner orderings and match the oracle (100 monoids)")


def test_criterion_6_typeset_theorem(corpus100, corpus100_pipelines):
    for S in corpus100:
        pipelines = corpus100_pipelines[S.generators]
        expected = set(typeset_bruteforce(S))
        revlex_parts = [set(p.extremal) for p in pipelines if p.flavor == "revlex"]
        assert len(revlex_parts) == len(S.generators) - 1
        for part in revlex_parts:
            assert expected <= part, S.generators
        assert set.intersection(*revlex_parts) == expected, S.generators
    _ok(6, "extremal intersections equal the type set, each one containing it")


def test_criterion_7_selmer_gorenstein(corpus100, corpus_k2):
    for S in corpus100 + corpus_k2:
        inv = selmer_invariants(S, S.generators[0])
        gap_list = gaps(S)
        assert inv.genus == len(gap_list)
        assert inv.frobenius == gap_list[-1]
        ts = typeset_bruteforce(S)
        gorenstein = len(ts) == 1
        assert gorenstein == inv.symmetric
        assert gorenstein == (2 * inv.genus == inv.frobenius + 1)
    assert all(len(typeset_bruteforce(S)) == 1 for S in corpus_k2)
    _ok(7, "Apery-formula invariants and the symmetry equivalences hold")


def test_criterion_8_affine_theorem(corpus100):
    for S in corpus100[:30]:
        M = AffineMonoid(1, tuple((a,) for a in S.generators))
        for j in range(len(S.generators)):
            report = apery_affine(M, indices=(j,))
            got = sorted(p[0] for p in report.elements)
            assert got == apery_bruteforce(S, S.generators[j]), (S.generators, j)

    M2 = AffineMonoid(2, ((2, 0), (1, 1), (0, 2)))
    report = apery_affine(M2, indices=(0, 2))
    assert report.elements == ((0, 0), (1, 1))
    members = affine_members_bruteforce(M2, 10)
    for a in report.elements:
        assert a in members
        for b in ((2, 0), (0, 2)):
            diff = tuple(x - y for x, y in zip(a, b))
            assert any(c < 0 for c in diff) or diff not in members
    _ok(8, "block-order Apery sets match the oracle in d=1 and d=2")


def test_criterion_9_homology_corollary(corpus100):
    for S in corpus100:
        expected = pf_bruteforce(S)
        assert pf_via_homology(S) == expected, S.generators
        k = len(S.generators)
        total = sum(S.generators)
        sphere = tuple(1 if i == k - 1 else 0 for i in range(k + 1))
        for a in expected:
            assert reduced_homology_ranks(build_delta(S, a + total)) == sphere
    _ok(9, "homology route equals the definition route on the full corpus")


def test_criterion_10_determinism(corpus100):
    golden = [NumericalSemigroup([7, 9, 11]), NumericalSemigroup([7, 8, 9, 13])]
    for S in golden + corpus100[:10]:
        k = len(S.generators)
        for order in (lex_order(k + 1), apery_order(k, k, S.generators)):
            gens = ideal_generators(S, order)
            normal = buchberger(gens, order, strategy="normal")
            fifo = buchberger(gens, order, strategy="fifo")
            assert normal.elements == fifo.elements, (S.generators, order.label)
    _ok(10, "selection strategies produce identical reduced bases")

import random

import pytest

from logcy.divisor import Torus, cycle, descriptors
from logcy.enumeration import catalog, minimal_model
from logcy.homology import (
    NOT_APPLICABLE,
    SATISFIED,
    VIOLATED,
    AmbientBasis,
    LogCYPair,
    check_constraints,
    complement_betti,
    pair_from_obj,
    pair_to_obj,
    transport,
    validate_pair,
)
from logcy.divisor import PreconditionError
from logcy.moves import NonToricBlowUp, ToricBlowDown, ToricBlowUp


def moves_for(pair):
    d = pair.divisor
    if isinstance(d, Torus):
        return [NonToricBlowUp(0)]
    k = len(d.seq)
    out = [ToricBlowUp(e) for e in range(k)]
    out += [NonToricBlowUp(i) for i in range(k)]
    if k >= 3:
        out += [ToricBlowDown(i) for i in range(k) if d.seq[i] == -1]
    return out


def test_pairing_matrices():
    rational = AmbientBasis("rational", 2)
    assert rational.pairing_matrix() == ((1, 0, 0), (0, -1, 0), (0, 0, -1))
    ruled = AmbientBasis("ruled", 1)
    assert ruled.pairing_matrix() == ((0, 1, 0), (1, 0, 0), (0, 0, -1))
    assert ruled.pair((1, 0, 0), (0, 1, 0)) == 1
    assert ruled.pair((0, 0, 1), (0, 0, 1)) == -1


def test_b3_pair_valid():
    p = minimal_model("B3")
    assert validate_pair(p) == ()
    assert p.divisor.seq == (1, 1, 1)


def test_c4_b0_pair_valid():
    p = minimal_model("C4", 0)
    assert validate_pair(p) == ()
    assert p.divisor.seq == (0, 0, 0, 0)
    assert p.classes == ((0, 1), (1, 0), (0, 1), (1, 0))


def test_sum_violation_detected():
    basis = AmbientBasis("rational", 0)
    p = LogCYPair(cycle(1, 1, 1), basis, ((1,), (1,), (1,)), (2,))
    violations = validate_pair(p)
    assert "class_sum" in violations
    assert any(v.startswith("adjunction") for v in violations)


def test_transport_nontoric_on_b3():
    p = transport(minimal_model("B3"), NonToricBlowUp(2))
    assert p.divisor.seq == (1, 1, 0)
    assert p.classes == ((1, 0), (1, 0), (1, -1))
    assert p.c1 == (3, -1)
    assert validate_pair(p) == ()


def test_transport_toric_on_b3():
    # both ends of the blown-up edge lose the exceptional class
    p = transport(minimal_model("B3"), ToricBlowUp(0))
    assert p.divisor.seq == (0, -1, 0, 1)
    assert p.classes == ((1, -1), (0, 1), (1, -1), (1, 0))
    assert p.c1 == (3, -1)
    assert validate_pair(p) == ()


def test_transport_blow_down_inverts_blow_up():
    p = minimal_model("B3")
    up = transport(p, ToricBlowUp(1))
    down = transport(up, ToricBlowDown(2))
    assert down.divisor == p.divisor
    # classes regain the original values, padded by the now-unused class
    assert all(c[:1] == o for c, o in zip(down.classes, p.classes))
    assert validate_pair(down) == ()


def test_transport_torus_without_context():
    p = minimal_model("A")
    q = transport(p, NonToricBlowUp(0))
    assert q.divisor == Torus(-1)
    assert not q.has_homology
    with pytest.raises(PreconditionError):
        transport(p, ToricBlowUp(0))


def test_complement_betti():
    assert complement_betti(10, 3) == 6
    assert complement_betti(4, 3) == 0
    with pytest.raises(PreconditionError):
        complement_betti(3, 3)


def test_transport_closure_exhaustive_words_le_4():
    # every move word of length <= 4 from every minimal model, |params| <= 2
    stack = [entry.pair for entry in catalog((-2, 2))]
    for _ in range(4):
        next_stack = []
        for pair in stack:
            for move in moves_for(pair):
                child = transport(pair, move)
                assert validate_pair(child) == (), (pair.divisor, move)
                next_stack.append(child)
        stack = next_stack


def test_class_sum_after_random_words():
    rng = random.Random(7)
    for _ in range(200):
        entry = rng.choice(catalog((-2, 2)))
        pair = entry.pair
        for _ in range(rng.randint(0, 6)):
            options = moves_for(pair)
            if not options:
                break
            pair = transport(pair, rng.choice(options))
        if not pair.has_homology:
            continue
        total = pair.classes[0]
        for c in pair.classes[1:]:
            total = tuple(a + b for a, b in zip(total, c))
        assert total == pair.c1
        # total-class self-intersection agrees with the sequence descriptor
        assert pair.basis.pair(pair.c1, pair.c1) >= pair.basis.pair(total, total)
        assert pair.basis.pair(total, total) == descriptors(pair.divisor).s_total


def test_check_constraints_c4():
    report = {c.rule: c for c in check_constraints(minimal_model("C4", 0))}
    assert report["four_nonnegative_shape"].status == SATISFIED
    assert report["nonnegative_count_le_4"].status == SATISFIED
    assert report["disjoint_nonnegative_components"].status == SATISFIED


def test_check_constraints_b3():
    report = {c.rule: c for c in check_constraints(minimal_model("B3"))}
    assert report["at_most_three_homologous"].status == SATISFIED
    assert report["three_homologous_needs_length_3"].status == SATISFIED
    assert report["table_length_3_three_nonnegative"].status == SATISFIED


def test_check_constraints_constructed_violation():
    # two disjoint non-negative components with different classes: breaks the
    # light-cone rule; the surrounding class data is deliberately nonsensical
    basis = AmbientBasis("rational", 0)
    p = LogCYPair(
        cycle(1, 0, 4, 0), basis, ((1,), (0,), (2,), (0,)), (3,)
    )
    report = {c.rule: c for c in check_constraints(p)}
    assert report["disjoint_nonnegative_components"].status == VIOLATED


def test_check_constraints_not_applicable_for_torus():
    report = check_constraints(minimal_model("B1"))
    assert all(c.status == NOT_APPLICABLE for c in report)
    report = check_constraints(minimal_model("A"))
    assert all(c.status == NOT_APPLICABLE for c in report)


def test_table_rows_gated_by_cycle_b_plus():
    # (-3,-3) is negative definite, so the length-2 table row (which assumes
    # an indefinite cycle pairing) must come out not applicable, not violated
    basis = AmbientBasis("rational", 11)
    c1 = (3,) + tuple(-1 for _ in range(11))
    cls1 = (1,) + (-1,) * 4 + (0,) * 7
    cls2 = (2,) + (0,) * 4 + (-1,) * 7
    p = LogCYPair(cycle(-3, -3), basis, (cls1, cls2), c1)
    assert validate_pair(p) == ()
    report = {c.rule: c for c in check_constraints(p)}
    assert report["table_length_2_zero_nonnegative"].status == NOT_APPLICABLE


def test_pair_json_round_trip():
    for case, param in (("B3", None), ("C4", 0), ("D3", 1), ("A", None)):
        p = minimal_model(case, param)
        assert pair_from_obj(pair_to_obj(p)) == p

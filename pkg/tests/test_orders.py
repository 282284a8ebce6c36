"""Order relations: fixtures, route agreement, witnesses, and transfer."""

import random

import pytest

from matorder import (DIAMOND_ROUTES, RELATIONS, BackendError, Matrix,
                      ShapeError, diamond_via_dagger_minus,
                      diamond_via_range_split, diamond_via_rank,
                      idempotent_factor_witness, left_star_equivalents,
                      leq_diamond, leq_left_star, leq_minus, leq_right_star,
                      leq_space, leq_star, moore_penrose, projector_transfer,
                      right_star_equivalents)

# Nilpotent below an invertible: diamond holds, minus does not.
A1 = Matrix.exact([[0, 1], [0, 0]])
B1 = Matrix.exact([[1, 1], [0, 1]])
# Same lower matrix below a different invertible: minus holds, diamond fails.
B2 = Matrix.exact([[1, 0], [-1, 1]])
# Rank-one row below the identity: star fails but passes to projectors.
A3 = Matrix.exact([[1, 1], [0, 0]])
B3 = Matrix.identity(2)
# Diamond pair on which both one-sided star orders fail.
A4 = Matrix.exact([[1, 0], [0, 0]])
B4 = Matrix.exact([[1, 1], [1, -1]])


def test_registry_key_sets():
    assert set(RELATIONS) == {"star", "minus", "space", "diamond",
                              "left-star", "right-star"}
    assert set(DIAMOND_ROUTES) == {"definition", "dagger-minus",
                                   "range-split", "rank"}


def test_nilpotent_pair_verdicts():
    assert leq_diamond(A1, B1).verdict
    assert leq_space(A1, B1).verdict
    assert not leq_minus(A1, B1).verdict
    assert not leq_star(A1, B1).verdict
    for route in DIAMOND_ROUTES.values():
        assert route(A1, B1).verdict


def test_minus_without_diamond_pair():
    assert leq_minus(A1, B2).verdict
    assert not leq_diamond(A1, B2).verdict
    for route in DIAMOND_ROUTES.values():
        assert not route(A1, B2).verdict


def test_dagger_pair_reverses_the_split():
    ad = moore_penrose(A1)
    bd = moore_penrose(B1)
    assert leq_minus(ad, bd).verdict
    assert not leq_diamond(ad, bd).verdict
    ad2 = moore_penrose(A1)
    bd2 = moore_penrose(B2)
    assert leq_diamond(ad2, bd2).verdict
    assert not leq_minus(ad2, bd2).verdict


def test_projector_pair_star_verdicts():
    assert not leq_star(A3, B3).verdict
    direct, projected = projector_transfer(A3, B3, "star")
    assert (direct, projected) == (False, True)


def test_one_sided_star_failures():
    assert leq_diamond(A4, B4).verdict
    assert not leq_left_star(A4, B4).verdict
    assert not leq_right_star(A4, B4).verdict


def test_diagonal_star_pair():
    a = Matrix.exact([[2, 0], [0, 0]])
    b = Matrix.exact([[2, 0], [0, 1]])
    assert leq_star(a, b).verdict
    assert leq_left_star(a, b).verdict
    assert leq_right_star(a, b).verdict
    assert leq_minus(a, b).verdict
    assert leq_diamond(a, b).verdict


def test_space_needs_both_ranges():
    a = Matrix.exact([[1, 0], [0, 0]])
    b = Matrix.exact([[0, 0], [0, 1]])
    rep = leq_space(a, b)
    assert not rep.verdict
    assert not rep.witnesses["range_inclusion"]


def test_relations_are_reflexive():
    for name, rel in RELATIONS.items():
        rep = rel(B1, B1)
        assert rep.verdict, name
        assert rep.relation == name


def test_zero_is_below_everything():
    zero = Matrix.zeros(2, 2)
    for rel in RELATIONS.values():
        assert rel(zero, B4).verdict


def test_report_shape_and_dict():
    rep = leq_star(A1, B1)
    d = rep.to_dict()
    assert d["relation"] == "star" and d["verdict"] is False
    assert set(d["witnesses"]) == {"gram_left", "gram_right", "dagger_left",
                                   "dagger_right", "dagger_agrees", "margin"}
    assert rep.witnesses["dagger_agrees"] is True
    assert rep.witnesses["gram_left"] is False


def test_minus_witnesses_expose_ranks():
    rep = leq_minus(A1, B1)
    w = rep.witnesses
    assert (w["rank_a"], w["rank_b"], w["rank_diff"]) == (1, 2, 2)
    rep2 = leq_minus(A1, B2)
    assert rep2.witnesses["rank_diff"] == 1


def test_space_witnesses_cross_check():
    rep = leq_space(A1, B1, inner_samples=5, rng=random.Random(3))
    w = rep.witnesses
    assert w["range_inclusion"] and w["row_range_inclusion"]
    assert w["projector_identities"] and w["projector_agrees"]
    assert w["inner_inverse_identities"] is True
    norep = leq_space(A1, B1, inner_samples=0)
    assert norep.witnesses["inner_inverse_identities"] is None


def test_range_split_witnesses():
    rep = diamond_via_range_split(A1, B1)
    w = rep.witnesses
    assert w["intersection_dim"] == 0
    assert w["direct_sum"] is True
    assert w["dim_rows_a"] + w["dim_diff"] == w["dim_rows_b"]
    bad = diamond_via_range_split(A1, B2)
    assert not bad.verdict


def test_rank_route_witnesses():
    rep = diamond_via_rank(A1, B1)
    w = rep.witnesses
    assert w["rank_dagger_diff"] == w["rank_complement_product"] == 1
    assert w["row_range_inclusion"]
    bad = diamond_via_rank(A1, B2)
    assert not bad.verdict


def test_four_way_equivalents_all_true():
    a = Matrix.exact([[2, 0], [0, 0]])
    b = Matrix.exact([[2, 0], [0, 1]])
    for fourway in (left_star_equivalents, right_star_equivalents):
        rep = fourway(a, b)
        assert rep.verdict
        w = rep.witnesses
        assert w["all_equal"]
        assert w["definition"] and w["diamond_and_gram"]
        assert w["diamond_and_dagger"] and w["diamond_and_hermitian"]


def test_four_way_equivalents_all_false_but_diamond():
    for fourway in (left_star_equivalents, right_star_equivalents):
        rep = fourway(A4, B4)
        assert not rep.verdict
        w = rep.witnesses
        assert w["all_equal"]
        assert w["diamond"]
        assert not w["definition"]


def test_four_way_matches_plain_relation():
    rng = random.Random(11)
    from matorder.sampling import exact_pair

    for i in range(25):
        _, a, b = exact_pair(rng, 3, 3)
        assert left_star_equivalents(a, b).verdict == leq_left_star(a, b).verdict
        assert right_star_equivalents(a, b).verdict == leq_right_star(a, b).verdict


def test_factor_witness_examples():
    q = idempotent_factor_witness(A1, B1)
    assert q is not None
    assert q @ q == q
    assert q @ moore_penrose(B1) == moore_penrose(A1)
    assert q == Matrix.exact([[0, 0], [1, 1]])

    same = idempotent_factor_witness(B1, B1)
    assert same == Matrix.identity(2)

    zero = Matrix.zeros(2, 2)
    assert idempotent_factor_witness(zero, B1) == zero

    from matorder import DomainError
    with pytest.raises(DomainError):
        idempotent_factor_witness(A1, B2)


def test_projector_transfer_forward_only():
    direct, projected = projector_transfer(A1, B1, "diamond")
    assert direct and projected
    # Full-column weight on one column: projectors agree, pair does not.
    a = Matrix.exact([[1, 0], [1, 0]])
    b = Matrix.exact([[1, 1], [1, 1]])
    direct, projected = projector_transfer(a, b, "space")
    assert not direct and projected


def test_pair_validation_errors():
    with pytest.raises(ShapeError):
        leq_star(A1, Matrix.exact([[1, 2, 3]]))
    with pytest.raises(BackendError):
        leq_minus(A1, B1.to_float())
    with pytest.raises(Exception):
        projector_transfer(A1, B1, "no-such-relation")

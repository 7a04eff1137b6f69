import math

import pytest

import fiedler

NINE_EDGES = [(0, 1), (1, 2), (1, 3), (0, 4), (4, 5), (4, 6), (0, 7), (7, 8)]
NINE_WEIGHTS = [5, 2, 2, 4, 3, 3, 6, 4]
NINE_VECTOR = [0, -1, -2, -2, 1.25, 1.875, 1.875, 0, 0]

SIX_EDGES = [(0, 1), (0, 2), (3, 4), (3, 5), (0, 3)]
SIX_WEIGHTS = [2, 2, 3, 3, 20 / 9]
SIX_VECTOR = [-1, -2, -2, 1.25, 1.875, 1.875]


def cosine(a, b):
    dot = sum(x * y for x, y in zip(a, b))
    return abs(dot) / math.sqrt(sum(x * x for x in a) * sum(y * y for y in b))


def test_forward_nine_vertex_tree():
    s = fiedler.spectrum(9, NINE_EDGES, NINE_WEIGHTS)
    assert s["lambda2"] == pytest.approx(1.0, abs=1e-9)
    assert s["multiplicity"] == 1
    assert cosine(s["basis"][0], NINE_VECTOR) >= 1 - 1e-9
    assert fiedler.characteristic_set(9, NINE_EDGES, NINE_WEIGHTS) == {"kind": "I", "vertices": [0]}


def test_classify_tree_vectors():
    v = fiedler.classify_tree(9, NINE_EDGES, NINE_VECTOR)
    assert v["kind"] == "I" and v["char_vertex"] == 0
    assert v["branch_signs"].count("zero") == 1
    v = fiedler.classify_tree(6, SIX_EDGES, SIX_VECTOR)
    assert (v["kind"], v["negative_end"], v["positive_end"]) == ("II", 0, 3)
    r = fiedler.classify_tree(3, [(0, 1), (1, 2)], [1, 1, -2])
    assert r["kind"] is None and r["reason"]


def test_type2_inverse():
    res = fiedler.tree_inverse(6, SIX_EDGES, SIX_VECTOR)
    assert res["weights"] == pytest.approx(SIX_WEIGHTS, rel=1e-12)
    assert res["char_set"] == {"kind": "II", "vertices": [0, 3]}


def test_type1_inverse_with_parameters():
    res = fiedler.tree_inverse(9, NINE_EDGES, NINE_VECTOR, mu={2: 2.0}, filler={2: [1.0, 2.0]})
    assert res["weights"] == pytest.approx(NINE_WEIGHTS, rel=1e-12)
    assert res["predicted_multiplicity"] == 1
    res = fiedler.tree_inverse(9, NINE_EDGES, NINE_VECTOR, mu={2: 1.0})
    assert res["predicted_multiplicity"] == 2


def test_rescaled_inverse():
    res = fiedler.tree_inverse(6, SIX_EDGES, SIX_VECTOR, lam=3.0)
    assert res["weights"] == pytest.approx([3 * w for w in SIX_WEIGHTS], rel=1e-12)
    assert fiedler.spectrum(6, SIX_EDGES, res["weights"])["lambda2"] == pytest.approx(3.0, rel=1e-9)


def test_cycle_round_trip():
    x = [1, 2, 3, 2, 1, 0, -2, -5, -2, 0]
    v = fiedler.classify_cycle(x)
    assert v["periodic"] and v["balanced"]
    res = fiedler.cycle_inverse(x, 1.0)
    assert res["landed_index"] in (2, 3)
    assert res["residual"] <= 1e-12
    edges = [(i, (i + 1) % 10) for i in range(10)]
    eig = fiedler.spectrum(10, edges, res["weights"])["eigenvalues"]
    assert eig[res["landed_index"] - 1] == pytest.approx(1.0, rel=1e-9)


def test_contract_subdivide():
    sub = fiedler.subdivide(6, SIX_EDGES, SIX_WEIGHTS)
    assert sub["new_vertex"] == 6
    assert sub["char_set"] == {"kind": "I", "vertices": [6]}
    back = fiedler.contract(sub["n"], sub["edges"], sub["weights"])
    assert back["weights"] == pytest.approx(SIX_WEIGHTS, rel=1e-10)
    assert back["label_map"][6] is None
    assert fiedler.series_weight(5, 4) == pytest.approx(20 / 9)


def test_errors_carry_kind_and_witness():
    with pytest.raises(fiedler.FiedlerError) as info:
        fiedler.tree_inverse(3, [(0, 1), (1, 2)], [1, 1, -2])
    assert info.value.kind == "not-fiedler-like"
    assert isinstance(info.value.witness, list)
    with pytest.raises(ValueError):
        fiedler.contract(6, SIX_EDGES, SIX_WEIGHTS)

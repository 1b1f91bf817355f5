from __future__ import annotations

import dataclasses

import pytest

import ibondage.configs as configs
from fixtures import (
    SEEDED,
    cube,
    cycle,
    dodecahedron,
    embedded,
    seeded,
    spoke_wheel,
    t7j_closure,
    t9b_closure,
    t13b_closure,
    theta,
)
from ibondage.configs import (
    FACE_FREE,
    FAMILY_ORDER,
    ConfigWitness,
    detect_for_class,
    detect_girth4_mindeg3,
    detect_girth5,
    detect_girth7,
    detect_girth10,
    parse_witness_line,
    validate_witness,
)
from ibondage.embedding import PlanarEmbedding, compute_embedding
from ibondage.errors import ClassMismatch, TheoremViolation
from ibondage.generate import corpus

CLASSES = ("g5d2", "g4d3", "g7d2", "g10d2")


def _families(ws):
    return {w.family for w in ws}


def _mirror(e: PlanarEmbedding) -> PlanarEmbedding:
    """The same embedding seen from the other side of the sphere."""
    return PlanarEmbedding(e.graph, tuple(tuple(reversed(r)) for r in e.rotation))


def _replace_role(w: ConfigWitness, name: str, value: int) -> ConfigWitness:
    roles = tuple((k, value if k == name else v) for k, v in w.roles)
    return dataclasses.replace(w, roles=roles)


def test_c5_all_edges_t7a():
    g, e = embedded(cycle(5))
    ws = detect_girth5(g, e)
    assert [w.family for w in ws] == ["T7a"] * 5
    assert {(w["x"], w["y"]) for w in ws} == {tuple(sorted(p)) for p in g.edges}


def test_dodecahedron_t7a():
    g, e = embedded(dodecahedron())
    ws = detect_girth5(g, e)
    assert _families(ws) == {"T7a"} and len(ws) == 30


def test_cube_t9a():
    g, e = embedded(cube())
    ws = detect_girth4_mindeg3(g, e)
    assert _families(ws) == {"T9a"} and len(ws) == 12


def test_c7_lemma_and_t13a():
    ws = detect_girth7(cycle(7))
    assert sum(w.family == "L11" for w in ws) == 7  # one per edge
    assert sum(w.family == "T13a" for w in ws) == 7


def test_c10_t14a():
    ws = detect_girth10(cycle(10))
    assert _families(ws) == {"T14a"} and len(ws) == 10


@pytest.mark.parametrize("paths", [(5, 5, 5), (5, 5, 6)])
def test_theta_both_families(paths):
    g = theta(*paths)
    ws = detect_girth10(g)
    assert _families(ws) == {"T14a", "T14b"}
    assert {w["v"] for w in ws if w.family == "T14b"} == {0, 1}


def test_t7c_closure():
    g, e = embedded(spoke_wheel())
    ws = [w for w in detect_girth5(g, e) if w.family == "T7c"]
    assert ws
    w = ws[0]
    assert w["v"] == 0 and g.degree(w["v"]) == 5
    assert g.degree(w["v1"]) == g.degree(w["v2"]) == 2
    assert set(e.faces[w["f"]].walk) == {w["v"], w["v1"], w["v2"], w["v1p"], w["v2p"]}


def test_t9b_closure():
    g, e = embedded(t9b_closure())
    ws = [w for w in detect_girth4_mindeg3(g, e) if w.family == "T9b"]
    assert ws and all(w["v"] == 0 and w["u5"] == 5 for w in ws)
    assert {w["z1"] for w in ws} <= set(range(6, 11))


def test_t13b_closure():
    ws = [w for w in detect_girth7(t13b_closure()) if w.family == "T13b"]
    assert [(w["v"], w["u"]) for w in ws] == [(0, 1)]


def test_t7j_closure():
    g, e = embedded(t7j_closure())
    ws = [w for w in detect_girth5(g, e) if w.family == "T7j"]
    assert {w["w1"] for w in ws} == {13, 18, 19}
    for w in ws:
        assert (w["v"], w["u"], w["w"], w["p"]) == (0, 1, 2, 11)
        assert e.faces[w["f6"]].length == 6


@pytest.mark.parametrize("family", sorted(SEEDED))
def test_seeded_family_present(family):
    g, e = seeded(family)
    ws = detect_for_class(g, e, SEEDED[family][0])
    hits = [w for w in ws if w.family == family]
    assert hits and all(validate_witness(g, e, w) for w in hits)


def test_validator_rejects_wrong_degrees():
    g = theta(5, 5, 6)
    w = next(w for w in detect_girth10(g) if w.family == "T14a")
    assert validate_witness(g, None, w)
    bad = ConfigWitness("T14a", (("x", 0), ("y", 2)), class_tag="g10d2")  # hub has degree 3
    assert not validate_witness(g, None, bad)


def test_validator_rejects_off_face_roles():
    g, e = embedded(spoke_wheel())
    w = next(w for w in detect_girth5(g, e) if w.family == "T7c")
    # move v2p to a rim vertex that is not on the face
    other_rim = next(x for x in range(6, 11) if x not in e.faces[w["f"]].walk)
    assert not validate_witness(g, e, _replace_role(w, "v2p", other_rim))


def test_validator_rejects_t7j_when_u_and_w_share_a_face():
    g, e = embedded(t7j_closure())
    w = next(w for w in detect_girth5(g, e) if w.family == "T7j")
    swapped = _replace_role(w, "w", 1)
    assert not validate_witness(g, e, swapped)


def test_validator_rejects_foreign_embedding():
    g, e = embedded(spoke_wheel())
    w = next(w for w in detect_girth5(g, e) if w.family == "T7c")
    assert not validate_witness(g, _mirror(e), w)


def test_validator_tolerates_garbage():
    g = cycle(5)
    assert not validate_witness(g, None, ConfigWitness("T7a", (("x", 0),)))
    assert not validate_witness(g, None, ConfigWitness("T7a", (("x", 0), ("y", 99))))
    assert not validate_witness(g, None, ConfigWitness("T99", ()))


def test_witness_line_roundtrip():
    g, e = embedded(t7j_closure())
    for w in detect_girth5(g, e):
        back = parse_witness_line(w.to_line(), embedding=w.embedding)
        assert back == w
        assert validate_witness(g, e, back)


def test_class_mismatch():
    g, e = embedded(cycle(4))
    with pytest.raises(ClassMismatch):
        detect_girth5(g, e)
    with pytest.raises(ClassMismatch):
        detect_girth4_mindeg3(*embedded(cycle(6)))
    with pytest.raises(ClassMismatch):
        detect_girth10(cycle(9))


def test_empty_result_is_theorem_violation(monkeypatch):
    monkeypatch.setitem(configs.DETECTORS, "T14a", lambda g, e: [])
    monkeypatch.setitem(configs.DETECTORS, "T14b", lambda g, e: [])
    with pytest.raises(TheoremViolation) as info:
        detect_girth10(cycle(10))
    assert info.value.state["n"] == 10


def test_girth7_pair_reported_separately(monkeypatch):
    monkeypatch.setitem(configs.DETECTORS, "T13a", lambda g, e: [])
    monkeypatch.setitem(configs.DETECTORS, "T13b", lambda g, e: [])
    with pytest.raises(TheoremViolation, match="T13a/T13b"):
        detect_girth7(cycle(7))


@pytest.mark.parametrize("tag", CLASSES)
def test_soundness_determinism_completeness(tag):
    for g, e in corpus(tag, 40, base_seed=500):
        ws = detect_for_class(g, e, tag)
        assert ws
        assert all(validate_witness(g, e, w) for w in ws)
        assert ws == detect_for_class(g, e, tag)
        assert ws == sorted(ws, key=ConfigWitness.sort_key)


@pytest.mark.parametrize("tag", ["g5d2", "g4d3"])
def test_face_free_families_ignore_embedding(tag):
    for g, e in corpus(tag, 40, base_seed=900):
        for other in (_mirror(e), compute_embedding(g)):
            ours = [(w.family, w.roles) for w in detect_for_class(g, e, tag) if w.family in FACE_FREE]
            theirs = [(w.family, w.roles) for w in detect_for_class(g, other, tag) if w.family in FACE_FREE]
            assert ours == theirs


def test_family_order_covers_detectors():
    assert set(FAMILY_ORDER) == set(configs.DETECTORS)

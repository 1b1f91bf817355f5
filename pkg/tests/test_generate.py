from __future__ import annotations

import math

import pytest

from ibondage.configs import detect_for_class
from ibondage.embedding import check_planar_embedding, compute_embedding, is_planar
from ibondage.errors import InfeasibleSpec
from ibondage.formats import serialize_rotation
from ibondage.generate import ClassSpec, class_spec, corpus, generate
from ibondage.graph import girth
from oracles import girth_brute

CLASSES = ("g5d2", "g4d3", "g7d2", "g10d2")


@pytest.mark.parametrize("tag", CLASSES)
def test_members_reverified(tag):
    spec = class_spec(tag, 24, 0)
    for g, e in corpus(tag, 40, base_seed=77):
        assert g.n <= 24 and g.is_connected()
        assert g.min_degree() >= spec.min_degree
        assert girth_brute(g.n, g.edges) >= spec.min_girth
        assert is_planar(g)
        assert check_planar_embedding(e).ok
        assert check_planar_embedding(compute_embedding(g)).ok


def test_girth10_with_budget_30():
    for seed in range(10):
        g, e = generate(ClassSpec(2, 10, 30, seed))
        assert g.n <= 30 and g.min_degree() >= 2 and girth(g) >= 10


@pytest.mark.parametrize("tag", CLASSES)
def test_deterministic(tag):
    for seed in (0, 1, 99):
        a, ea = generate(class_spec(tag, 24, seed))
        b, eb = generate(class_spec(tag, 24, seed))
        assert a == b and serialize_rotation(ea.rotation) == serialize_rotation(eb.rotation)


def test_seeds_differ():
    outputs = {generate(class_spec("g5d2", 24, s))[0].edges for s in range(20)}
    assert len(outputs) > 10


@pytest.mark.parametrize(
    "spec",
    [
        ClassSpec(2, 10, 3),
        ClassSpec(3, 6, 40),
        ClassSpec(2, math.inf, 10),
        ClassSpec(3, 4, 5),
        ClassSpec(2, 5, 0),
    ],
)
def test_infeasible(spec):
    with pytest.raises(InfeasibleSpec):
        generate(spec)


def test_exploratory_tree():
    g, e = generate(ClassSpec(1, math.inf, 12, 4))
    assert g.is_connected() and girth(g) == math.inf and g.n <= 12


@pytest.mark.parametrize("tag", CLASSES)
def test_family_diversity(tag):
    families = set()
    for g, e in corpus(tag, 100):
        families |= {w.family for w in detect_for_class(g, e, tag)}
    assert len(families) >= 2, families

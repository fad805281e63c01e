import random

import pytest

from spiderweb import corpus
from spiderweb.generate import grown_webs, random_signature, random_web
from spiderweb.webs import (
    WebBuilder, WebError, empty_web, glue, mirror, parse_web, reflect,
    rotate, serialize_web)
from spiderweb.weights import W1, W2, dual_reverse_signature


def Y():
    return corpus.load_web("single-y")


def test_single_y_shape():
    w = Y()
    assert w.mode == "a2"
    assert w.n_vertices() == 1 and w.n_edges() == 3
    assert w.boundary_signature() == (W1, W1, W1)
    assert w.is_nonelliptic()
    w.validate()


def test_empty_web():
    e = empty_web("a2")
    assert e.is_empty() and e.is_closed()
    assert e.boundary_signature() == ()


def test_serialize_roundtrip_corpus():
    for name in corpus.names():
        w = corpus.load_web(name)
        w2 = parse_web(serialize_web(w), strict=False)
        assert w2 == w
        assert w2.canonical_key() == w.canonical_key()


def test_faces_euler():
    # V - E + F = 2, counting the disk boundary as one extra vertex
    for name in ("single-y", "square", "theta", "a2-example"):
        w = corpus.load_web(name)
        V = w.n_vertices() + (1 if w.boundary else 0)
        E = w.n_edges()
        F = len(w.faces())
        assert V - E + F == 2, name


def test_internal_face_degrees():
    assert [f.degree for f in corpus.load_web("bigon").internal_faces()] == [2]
    assert [f.degree for f in corpus.load_web("square").internal_faces()] == [4]
    assert corpus.load_web("a2-example").is_nonelliptic()


def test_rotate_reflect_mirror():
    w = corpus.load_web("a2-example")
    sig = w.boundary_signature()
    n = len(sig)
    assert rotate(w, n) == w
    r = rotate(w, 1)
    assert r.boundary_signature() == sig[1:] + sig[:1]
    assert rotate(r, n - 1) == w
    m = mirror(w)
    assert m.boundary_signature() == dual_reverse_signature(sig)
    assert mirror(m) == w
    assert reflect(reflect(w)) == w


def test_glue_closes():
    w = Y()
    g = glue(w, mirror(w))
    assert g.is_closed()
    assert g.n_vertices() == 2
    assert g == corpus.load_web("theta")


def test_glue_signature_mismatch():
    w = Y()
    with pytest.raises(WebError):
        glue(w, w)  # (w1,w1,w1) is not reverse-dual to itself


def test_builder_validation():
    b = WebBuilder()
    d1, d2, d3 = b.darts(3)
    l1, l2, l3 = b.darts(3)
    b.vertex(d1, d2, d3)
    for d, leg in ((d1, l1), (d2, l2), (d3, l3)):
        b.edge(d, leg, head=leg)
    # boundary is read clockwise, opposite to the CCW vertex order
    b.boundary = [l1, l3, l2]
    w = b.build()
    assert w.boundary_signature() == (W1, W1, W1)


def test_canonical_key_invariance():
    # relabelling darts must not change the canonical key
    rng = random.Random(7)
    for _ in range(20):
        sig = random_signature(rng, max_legs=6)
        w = random_web(sig, rng, max_vertices=6, split_bias=0.0)
        # rotating all the way around is a relabelled copy
        assert rotate(w, len(sig)).canonical_key() == w.canonical_key()


def test_grown_webs_deduplicates():
    webs = grown_webs((W1, W1, W1))
    assert len(webs) == 1
    assert webs[0].canonical_key() == Y().canonical_key()


def test_random_web_respects_signature():
    rng = random.Random(3)
    for _ in range(25):
        sig = random_signature(rng, max_legs=8)
        w = random_web(sig, rng, max_vertices=10)
        assert w.boundary_signature() == sig
        w.validate()


def test_a1_mode():
    w = corpus.load_web("a1-example")
    assert w.mode == "a1"
    assert w.boundary_signature() == (W1,) * 8
    assert w.n_vertices() == 0 and w.n_edges() == 4

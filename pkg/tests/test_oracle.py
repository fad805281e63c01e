import random

import numpy as np
import pytest

from spiderweb import corpus
from spiderweb.basis import dim_invariants, enumerate_basis
from spiderweb.oracle import (
    apply_raising, contract_closed, in_invariant_kernel, invariant_kernel_dim,
    vectors_rank, web_vector)
from spiderweb.skein import evaluate_closed
from spiderweb.generate import random_signature, random_web
from spiderweb.webs import WebError, glue, mirror
from spiderweb.weights import W1, W2


def test_contract_closed_corpus():
    assert contract_closed(corpus.load_web("loop")) == 3
    assert contract_closed(corpus.load_web("theta")) == 6


def test_contract_matches_skein_at_minus_one():
    rng = random.Random(23)
    done = 0
    while done < 6:
        sig = random_signature(rng, max_legs=6)
        w = random_web(sig, rng, max_vertices=6, split_bias=0.0)
        try:
            g = glue(w, mirror(w))
        except WebError:
            continue
        if g.circles:
            continue
        assert contract_closed(g) == evaluate_closed(g, -1)
        done += 1


def test_contract_requires_closed():
    with pytest.raises(WebError):
        contract_closed(corpus.load_web("single-y"))


def test_web_vector_in_kernel():
    for name in ("single-y", "a2-example"):
        w = corpus.load_web(name)
        vec = web_vector(w)
        assert np.any(vec)
        assert in_invariant_kernel(vec, w.boundary_signature(), w.mode)


def test_raising_annihilates_invariants():
    w = corpus.load_web("single-y")
    vec = web_vector(w)
    sig = w.boundary_signature()
    for which in (1, 2):
        assert not np.any(apply_raising(vec, sig, which))


def test_noninvariant_detected():
    sig = (W1, W1, W1)
    # a delta function on one index tuple is not invariant
    vec = np.zeros((3, 3, 3), dtype=object)
    vec[0, 1, 2] = 1
    assert not in_invariant_kernel(vec, sig)


def test_kernel_dims_match_paths():
    for sig in [(W1, W2), (W1, W1, W1), (W2, W2, W2), (W1, W2) * 2,
                (W1, W1, W2, W2, W1, W2)]:
        assert invariant_kernel_dim(sig) == dim_invariants(sig)
    assert invariant_kernel_dim((W1,) * 4, mode="a1") == 2


def test_kernel_dim_zero_for_nongluable():
    assert invariant_kernel_dim((W1,)) == 0
    assert invariant_kernel_dim((W1, W1)) == 0


def test_basis_vectors_linearly_independent():
    sig = (W1, W2) * 2
    cat = enumerate_basis(sig)
    vecs = [web_vector(w) for w in cat.webs()]
    assert vectors_rank(vecs) == len(cat) == invariant_kernel_dim(sig)

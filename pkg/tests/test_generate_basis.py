import random

import pytest

from spiderweb import corpus
from spiderweb.basis import (
    dim_invariants, enumerate_basis, expand_in_basis, minuscule_paths,
    path_tag, rotated_catalog_check, web_from_path)
from spiderweb.generate import grown_webs, random_signature, random_web
from spiderweb.laurent import Laurent
from spiderweb.skein import WebSum, normal_form
from spiderweb.webs import WebError, rotate
from spiderweb.weights import W1, W2

from conftest import MU, NU, SIG12


def test_minuscule_paths_small():
    assert minuscule_paths(()) == [((0, 0),)]
    assert minuscule_paths((W1,)) == []
    assert minuscule_paths((W1, W2)) == [((0, 0), (1, 0), (0, 0))]
    assert dim_invariants((W1, W1, W1)) == 1
    assert dim_invariants((W1, W2) * 3) == 6
    assert dim_invariants((W1,) * 8, mode="a1") == 14  # Catalan(4)


def test_paths_start_and_end_at_zero():
    for sig in [(W1, W2), (W1, W1, W1), (W2, W1, W1, W2, W2, W2)]:
        for p in minuscule_paths(sig):
            assert p[0] == (0, 0) and p[-1] == (0, 0)
            assert len(p) == len(sig) + 1


def test_enumerate_small():
    cat = enumerate_basis((W1, W1, W1))
    assert len(cat) == 1
    assert cat.webs()[0] == corpus.load_web("single-y")
    cat2 = enumerate_basis((W1, W2))
    assert len(cat2) == 1 and cat2.webs()[0].n_vertices() == 0


def test_catalog_tags_are_paths():
    cat = enumerate_basis((W1, W2) * 3)
    assert len(cat) == 6
    assert cat.paths() == minuscule_paths((W1, W2) * 3)
    for p, w, _k in cat.entries:
        assert path_tag(w) == p
        assert w.is_nonelliptic()
        assert cat.path_of(w) == p


def test_web_from_path_roundtrip():
    sig = (W1, W2) * 3
    cat = enumerate_basis(sig)
    for p in cat.paths():
        assert path_tag(web_from_path(sig, p, catalog=cat)) == p
    with pytest.raises(WebError):
        web_from_path(sig, ((0, 0), (9, 9)), catalog=cat)


def test_frozen_catalog_entries():
    assert path_tag(corpus.load_web("w-mu")) == MU
    assert path_tag(corpus.load_web("w-nu")) == NU


def test_expand_in_basis_reproduces_reduction():
    rng = random.Random(19)
    done = 0
    while done < 8:
        sig = random_signature(rng, max_legs=6)
        w = random_web(sig, rng, max_vertices=8)
        cat = enumerate_basis(sig)
        coords = expand_in_basis(w, catalog=cat)
        rebuilt = WebSum(w.mode)
        for p, c in coords.items():
            rebuilt += WebSum.single(cat.by_path[p], c)
        assert normal_form(w) == rebuilt
        done += 1


def test_basis_webs_expand_to_delta():
    cat = enumerate_basis((W1, W2) * 2)
    for p, w, _k in cat.entries:
        assert expand_in_basis(w, catalog=cat) == {p: Laurent.const(1)}


def test_rotated_catalog_check_small():
    cat = enumerate_basis((W1, W1, W2, W2, W1, W2))
    cat2 = rotated_catalog_check(cat, 1)
    assert len(cat2) == len(cat)
    assert cat2.signature == (W1, W2, W2, W1, W2, W1)
    # rotating a basis web lands in the rotated catalog
    for _p, w, _k in cat.entries:
        cat2.path_of(rotate(w, 1))


def test_grown_webs_are_nonelliptic():
    for w in grown_webs((W2, W2, W2)):
        assert w.is_nonelliptic()
        assert w.boundary_signature() == (W2, W2, W2)


def test_a1_catalog():
    cat = enumerate_basis((W1,) * 6, mode="a1")
    assert len(cat) == 5  # Catalan(3)
    for w in cat.webs():
        assert w.n_vertices() == 0


def test_n12_catalog_contains_frozen_webs(catalog12):
    assert catalog12.signature == SIG12
    assert len(catalog12) == dim_invariants(SIG12)
    assert catalog12.path_of(corpus.load_web("w-mu")) == MU
    assert catalog12.path_of(corpus.load_web("w-nu")) == NU

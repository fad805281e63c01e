"""Minuscule paths, invariant dimensions, and the non-elliptic basis.

The non-elliptic webs with a fixed boundary signature form a basis of
the invariant space; each one is tagged by the distance vector of its
dual diskoid read from the base region, and this tagging is a bijection
onto the minuscule paths of the signature.  The path count therefore
certifies completeness of the web enumeration.
"""

from __future__ import annotations

from . import weights
from .weights import W1, is_dominant, add, minuscule_orbit, rotate_signature
from .webs import Web, WebError, rotate
from .diskoid import dual_diskoid, mu_vector
from .generate import grown_webs
from .skein import WebSum, normal_form


def minuscule_paths(signature, mode="a2"):
    """All dominant walks 0 = mu_0, ..., mu_n = 0 with mu_k - mu_{k-1} in
    the minuscule orbit of the k-th leg label, in lexicographic order."""
    out = []
    n = len(signature)

    def rec(k, cur, path):
        if k == n:
            if cur == (0, 0):
                out.append(tuple(path))
            return
        for s in minuscule_orbit(signature[k], mode):
            nxt = add(cur, s)
            if is_dominant(nxt):
                path.append(nxt)
                rec(k + 1, nxt, path)
                path.pop()

    rec(0, (0, 0), [(0, 0)])
    out.sort()
    return out


def dim_invariants(signature, mode="a2"):
    """The invariant-space dimension |minuscule_paths(signature)|."""
    return len(minuscule_paths(signature, mode))


class BasisCatalog:
    """The non-elliptic basis for one boundary signature, tagged by
    minuscule paths."""

    def __init__(self, signature, mode, entries):
        self.signature = tuple(signature)
        self.mode = mode
        self.entries = sorted(entries, key=lambda t: t[0])
        self.by_path = {p: w for p, w, _k in self.entries}
        self.by_key = {k: (p, w) for p, w, k in self.entries}

    def __len__(self):
        return len(self.entries)

    def paths(self):
        return [p for p, _w, _k in self.entries]

    def webs(self):
        return [w for _p, w, _k in self.entries]

    def path_of(self, w):
        hit = self.by_key.get(w.canonical_key())
        if hit is None:
            raise WebError("web is not in the catalog")
        return hit[0]


def path_tag(w):
    """The minuscule path attached to a non-elliptic web: 0 followed by
    the base-region distance vector of its dual diskoid."""
    if not w.boundary:
        return ((0, 0),)
    return ((0, 0),) + mu_vector(dual_diskoid(w), 0)


_CATALOGS = {}


def enumerate_basis(signature, mode="a2", max_boundary=12, max_vertices=None):
    """Enumerate all non-elliptic webs with the given boundary, tagged by
    minuscule paths; completeness is certified against the path count.

    The growth search runs with an escalating interior-vertex budget
    until the web count matches the path count (raising if a generous
    budget still disagrees, which would signal a real defect).  Catalogs
    are cached per signature."""
    hit = _CATALOGS.get((tuple(signature), mode))
    if hit is not None:
        return hit
    n = len(signature)
    if n > max_boundary:
        raise WebError("boundary budget exceeded (%d > %d)" % (n, max_boundary))
    paths = minuscule_paths(signature, mode)
    budget = max_vertices if max_vertices is not None else max(6, n * n // 6 + 2)
    for attempt in range(3):
        webs = grown_webs(signature, mode, max_vertices=budget)
        if len(webs) == len(paths):
            break
        if len(webs) > len(paths):
            raise WebError("more non-elliptic webs than paths: enumeration "
                           "or tagging is broken")
        budget += max(4, budget // 2)
    else:
        raise WebError("basis enumeration incomplete: %d webs vs %d paths"
                       % (len(webs), len(paths)))
    entries = []
    for w in webs:
        tag = path_tag(w)
        entries.append((tag, w, w.canonical_key()))
    tagset = {t for t, _w, _k in entries}
    if len(tagset) != len(entries) or tagset != set(paths):
        raise WebError("path tagging is not a bijection onto the paths")
    cat = BasisCatalog(signature, mode, entries)
    _CATALOGS[(cat.signature, mode)] = cat
    return cat


def web_from_path(signature, path, mode="a2", catalog=None):
    """The unique non-elliptic web whose tag is the given path."""
    if catalog is None:
        catalog = enumerate_basis(signature, mode)
    path = tuple(path)
    if path and path[0] != (0, 0):
        path = ((0, 0),) + path
    w = catalog.by_path.get(path)
    if w is None:
        raise WebError("path is not a minuscule path of this signature")
    return w


def expand_in_basis(s, catalog=None):
    """Exact coordinates of a web or WebSum in the non-elliptic basis,
    as a map from minuscule path to Laurent coefficient."""
    if isinstance(s, Web):
        s = WebSum.single(s)
    nf = normal_form(s)
    sig = None
    for w in nf.terms:
        sig = w.boundary_signature()
        break
    if catalog is None:
        if sig is None:
            return {}
        catalog = enumerate_basis(sig, s.mode)
    out = {}
    for w, c in nf.items():
        out[catalog.path_of(w)] = c
    return out


def rotated_catalog_check(catalog, i=1):
    """Rotation by i maps the catalog onto the rotated signature's
    catalog with tags transformed mu -> mu^(i); returns the rotated
    catalog (raises on any mismatch).

    The rotated catalog is certified without a second enumeration: the
    rotated webs are non-elliptic with pairwise-distinct tags, and the
    tags exhaust the rotated signature's minuscule paths, so they are
    the whole basis."""
    sig2 = rotate_signature(catalog.signature, i)
    entries2 = []
    for p, w, _k in catalog.entries:
        w2 = rotate(w, i)
        if w2.boundary_signature() != sig2 or not w2.is_nonelliptic():
            raise WebError("rotation left the catalog")
        p2 = path_tag(w2)
        expect = ((0, 0),) + mu_vector(dual_diskoid(w), i)
        if p2 != expect:
            raise WebError("rotated tag differs from mu^(%d)" % i)
        entries2.append((p2, w2, w2.canonical_key()))
    tagset = {t for t, _w, _k in entries2}
    if len(tagset) != len(entries2) or \
            tagset != set(minuscule_paths(sig2, catalog.mode)):
        raise WebError("rotated tags are not a bijection onto the paths")
    cat2 = BasisCatalog(sig2, catalog.mode, entries2)
    _CATALOGS[(cat2.signature, catalog.mode)] = cat2
    return cat2

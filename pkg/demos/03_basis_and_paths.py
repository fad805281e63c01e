"""The non-elliptic basis and its minuscule-path tags.

Non-elliptic webs on a fixed boundary form a basis of the invariant
space; each is tagged by the distance vector of its dual diskoid, and
the tags biject with minuscule paths.  Any web expands exactly in this
basis via skein reduction.
"""

import random

from spiderweb.basis import (dim_invariants, enumerate_basis,
                             expand_in_basis, minuscule_paths)
from spiderweb.cli import format_path
from spiderweb.generate import random_web
from spiderweb.weights import parse_signature

sig = parse_signature("w1,w2,w1,w2,w1,w2")
print("signature:", "w1,w2,w1,w2,w1,w2")
print("invariant dimension d =", dim_invariants(sig))

cat = enumerate_basis(sig)
print("\nbasis entries (path tag -> web size):")
for p, w, _key in cat.entries:
    print("  %-44s %d vertices" % (format_path(p), w.n_vertices()))

assert cat.paths() == minuscule_paths(sig)

print("\nexpanding a random (elliptic) web in the basis:")
w = random_web(sig, random.Random(7), max_vertices=12)
print("input web: %d vertices" % w.n_vertices())
for p, c in sorted(expand_in_basis(w, catalog=cat).items()):
    print("  %-44s coefficient %s" % (format_path(p), c))

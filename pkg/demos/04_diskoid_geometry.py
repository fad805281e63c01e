"""Dual diskoids and their weight-valued geometry.

The dual of a non-elliptic web is a CAT(0) triangulated disk.  Distances
take values in dominant weights; between any two vertices the minimal
weight is unique, all geodesics realize it, and diamond moves connect
them.
"""

from spiderweb import corpus
from spiderweb.cli import format_path
from spiderweb.diskoid import (complete_extension, diamond_move,
                               diamond_sites, distance, dual_diskoid,
                               geodesics, is_cat0, leq_S, mu_vector,
                               serialize_diskoid)
from spiderweb.weights import format_weight

w = corpus.load_web("a2-example")
D = dual_diskoid(w)
print("dual diskoid: %d vertices, %d edges, %d triangles, CAT(0): %s"
      % (D.n_vertices(), D.n_edges(), D.n_triangles(), is_cat0(D)))

p, q = D.base, D.boundary[4]
d = distance(D, p, q)
print("\ndistance from the base to boundary vertex 4:", format_weight(d))
gs = geodesics(D, p, q)
print("geodesics realizing it: %d" % len(gs))
for g in gs:
    print("  path %s, diamond sites: %d"
          % (" -> ".join(map(str, g.vertices)), len(diamond_sites(D, g))))

g = gs[0]
for site in diamond_sites(D, g):
    h = diamond_move(D, g, site)
    print("rerouted across a flat rhombus: %s"
          % " -> ".join(map(str, h.vertices)))
    break

ext = complete_extension(D, g)
print("a complete (boundary-to-boundary) extension: %s"
      % " -> ".join(map(str, ext.vertices)))

print("\nboundary distance vector (the path tag):")
print(" ", format_path(((0, 0),) + mu_vector(D, 0)))

Dmu = dual_diskoid(corpus.load_web("w-mu"))
Dnu = dual_diskoid(corpus.load_web("w-nu"))
print("\nw(nu) <=_S w(mu):", leq_S(Dnu, Dmu))

print("\nthe .dsk serialization of the single-Y dual:")
print(serialize_diskoid(dual_diskoid(corpus.load_web("single-y"))))

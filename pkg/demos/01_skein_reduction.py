"""Skein reduction: the defining local relations, applied exactly.

Every reducible face (free circle, bigon, square) is rewritten into a
Laurent-coefficient combination of smaller webs until only non-elliptic
webs remain.
"""

from spiderweb import corpus
from spiderweb.skein import evaluate_closed, normal_form, websum_to_text

print("== free loop ==")
loop = corpus.load_web("loop")
print("value of a closed loop:", evaluate_closed(loop))

print("\n== bigon ==")
bigon = corpus.load_web("bigon")
nf = normal_form(bigon)
for w, c in nf.items():
    print("coefficient %s on a web with %d vertices and %d edges"
          % (c, w.n_vertices(), w.n_edges()))

print("\n== square ==")
square = corpus.load_web("square")
nf = normal_form(square)
print("the square face smooths into %d terms, coefficients %s"
      % (len(nf), sorted(str(c) for _w, c in nf.items())))

print("\n== theta ==")
theta = corpus.load_web("theta")
val = evaluate_closed(theta)
print("theta evaluates to", val)
print("at q = -1 this is", val.evaluate(-1))

print("\n== serialized normal form of the square ==")
print(websum_to_text(normal_form(square)))

"""Confluence: reduction order does not matter.

Two independent site-selection strategies (smallest face first vs
largest face last) are run on seeded random webs; the normal forms must
agree term by term.
"""

import random

from spiderweb.generate import random_signature, random_web
from spiderweb.skein import normal_form
from spiderweb.weights import format_signature

rng = random.Random(1)
for k in range(10):
    sig = random_signature(rng, max_legs=10)
    w = random_web(sig, rng, max_vertices=14)
    a = normal_form(w)
    b = normal_form(w, strategy="alternate")
    status = "agree" if a == b else "DISAGREE"
    print("web %2d: signature %-30s %2d vertices -> %d terms, strategies %s"
          % (k, format_signature(sig), w.n_vertices(), len(a), status))
    assert a == b
print("\nall normal forms agree")

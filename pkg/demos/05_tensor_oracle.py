"""The epsilon-tensor oracle: an independent check on the skein engine.

Closed webs are contracted as networks of epsilon tensors, which must
reproduce the skein value at q = -1; invariant dimensions are recomputed
as null-space dimensions of raising operators.
"""

import random

from spiderweb import corpus
from spiderweb.basis import dim_invariants
from spiderweb.generate import random_signature, random_web
from spiderweb.oracle import (contract_closed, in_invariant_kernel,
                              invariant_kernel_dim, web_vector)
from spiderweb.skein import evaluate_closed
from spiderweb.webs import WebError, glue, mirror
from spiderweb.weights import format_signature, parse_signature

print("== closed webs: tensor contraction vs skein at q = -1 ==")
for name in ("loop", "theta"):
    w = corpus.load_web(name)
    print("%-8s tensor %3d   skein(-1) %3d"
          % (name, contract_closed(w), evaluate_closed(w, -1)))

rng = random.Random(3)
done = 0
while done < 4:
    sig = random_signature(rng, max_legs=6)
    w = random_web(sig, rng, max_vertices=6, split_bias=0.0)
    try:
        g = glue(w, mirror(w))
    except WebError:
        continue
    if g.circles:
        continue
    t, s = contract_closed(g), evaluate_closed(g, -1)
    print("<w, w*>  tensor %3d   skein(-1) %3d   (%d vertices)"
          % (t, s, g.n_vertices()))
    assert t == s
    done += 1

print("\n== invariant vectors ==")
y = corpus.load_web("single-y")
vec = web_vector(y)
print("single-Y tensor is killed by both raising operators:",
      in_invariant_kernel(vec, y.boundary_signature()))

print("\n== dimension agreement ==")
for text in ("w1,w2", "w1,w1,w1", "w1,w2,w1,w2", "w1,w2,w1,w2,w1,w2"):
    sig = parse_signature(text)
    print("%-24s paths %3d   kernel %3d"
          % (format_signature(sig), dim_invariants(sig),
             invariant_kernel_dim(sig)))

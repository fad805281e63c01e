"""Deterministic SVG/TikZ drawings of webs and their dual diskoids.

Output files land in demos/out/.
"""

import os

from spiderweb import corpus
from spiderweb.diskoid import dual_diskoid
from spiderweb.render import render_diskoid, render_web

OUT = os.path.join(os.path.dirname(os.path.abspath(__file__)), "out")
os.makedirs(OUT, exist_ok=True)

for name in ("single-y", "a2-example", "w-mu", "a1-example"):
    w = corpus.load_web(name)
    path = os.path.join(OUT, name + ".svg")
    with open(path, "w") as f:
        f.write(render_web(w, "svg"))
    print("wrote", path)

D = dual_diskoid(corpus.load_web("w-mu"))
path = os.path.join(OUT, "w-mu-dual.tikz")
with open(path, "w") as f:
    f.write(render_diskoid(D, "tikz"))
print("wrote", path)

path = os.path.join(OUT, "w-mu-dual.svg")
with open(path, "w") as f:
    f.write(render_diskoid(D, "svg"))
print("wrote", path)

"""A1/A2 webs as planar combinatorial maps with a based boundary.

A web is stored as a set of darts (half-edges) with:

  * ``theta``    — the edge involution pairing darts,
  * ``vertices`` — interior trivalent vertices as counterclockwise dart
                   triples (A2 only; A1 webs have no interior vertices),
  * ``boundary`` — the clockwise list of boundary darts, index 0 based,
  * ``heads``    — for A2, the dart at the arrival end of each edge's
                   w1-flow (an edge labelled w2 in one direction is stored
                   as w1 in the other),
  * ``circles``  — a count of free closed loops (no darts); these only
                   appear in skein-engine intermediates and lenient parses.

Faces are the orbits of ``d -> sigma(theta(d))`` where ``sigma`` is the
counterclockwise successor at interior vertices and ``b_i -> b_{i+1}`` on
the boundary; the face of a dart lies to the right of motion along it.
Planarity is enforced through the Euler characteristic of every connected
component.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import weights
from .weights import W1, W2


class WebError(ValueError):
    pass


@dataclass(frozen=True)
class Face:
    darts: tuple
    internal: bool

    @property
    def degree(self):
        return len(self.darts)


class Web:
    __slots__ = ("mode", "theta", "vertices", "boundary", "heads", "circles",
                 "_sigma", "_dart_vertex", "_faces", "_ckey", "_crank")

    def __init__(self, mode, theta, vertices, boundary, heads=(), circles=0,
                 check=True):
        self.mode = mode
        self.theta = dict(theta)
        self.vertices = tuple(tuple(v) for v in vertices)
        self.boundary = tuple(boundary)
        self.heads = frozenset(heads)
        self.circles = int(circles)
        self._sigma = None
        self._dart_vertex = None
        self._faces = None
        self._ckey = None
        self._crank = None
        if check:
            self.validate(strict=False)

    # ------------------------------------------------------------------
    # basic structure

    @property
    def darts(self):
        return self.theta.keys()

    def n_edges(self):
        return len(self.theta) // 2

    def n_vertices(self):
        return len(self.vertices)

    def is_closed(self):
        return not self.boundary

    def is_empty(self):
        return not self.theta and self.circles == 0

    def sigma(self, d):
        """Counterclockwise successor of d around its attachment point."""
        if self._sigma is None:
            s = {}
            for tri in self.vertices:
                k = len(tri)
                for i, d0 in enumerate(tri):
                    s[d0] = tri[(i + 1) % k]
            nb = len(self.boundary)
            for i, d0 in enumerate(self.boundary):
                s[d0] = self.boundary[(i + 1) % nb]
            self._sigma = s
        return self._sigma[d]

    def vertex_of(self, d):
        """Index of the interior vertex holding dart d, or None."""
        if self._dart_vertex is None:
            m = {}
            for i, tri in enumerate(self.vertices):
                for d0 in tri:
                    m[d0] = i
            self._dart_vertex = m
        return self._dart_vertex.get(d)

    def is_boundary_dart(self, d):
        return self.vertex_of(d) is None

    def vertex_is_out(self, i):
        """True if interior vertex i is all-out (w1 flow leaving on all darts)."""
        tri = self.vertices[i]
        return all(d not in self.heads for d in tri)

    # ------------------------------------------------------------------
    # faces

    def faces(self):
        """All faces (orbits of sigma . theta), internal ones flagged."""
        if self._faces is not None:
            return self._faces
        bset = set(self.boundary)
        seen = set()
        out = []
        for d0 in self.theta:
            if d0 in seen:
                continue
            orbit = []
            d = d0
            while d not in seen:
                seen.add(d)
                orbit.append(d)
                d = self.sigma(self.theta[d])
            if d != d0:
                raise WebError("rotation system is inconsistent at dart %r" % d)
            internal = not any(x in bset for x in orbit)
            out.append(Face(tuple(orbit), internal))
        self._faces = out
        return out

    def internal_faces(self):
        return [f for f in self.faces() if f.internal]

    def is_nonelliptic(self):
        """No free circles and every internal face has at least six sides."""
        if self.circles:
            return False
        return all(f.degree >= 6 for f in self.internal_faces())

    def region_of(self, d):
        """The face containing dart d (for boundary darts: its region)."""
        for i, f in enumerate(self.faces()):
            if d in f.darts:
                return i
        raise WebError("dart %r not found" % (d,))

    # ------------------------------------------------------------------
    # validation

    def validate(self, strict=True):
        th = self.theta
        for d, e in th.items():
            if e == d or th.get(e) != d:
                raise WebError("edge involution broken at dart %r" % (d,))
        attach = list(self.boundary)
        for tri in self.vertices:
            attach.extend(tri)
        if len(set(attach)) != len(attach):
            raise WebError("a dart is attached twice")
        if set(attach) != set(th):
            raise WebError("attached darts and edge darts differ")
        if self.mode == "a1":
            if self.vertices:
                raise WebError("A1 webs have no interior vertices")
            if self.heads:
                raise WebError("A1 webs carry no w1-flow heads")
        else:
            for tri in self.vertices:
                if len(tri) != 3:
                    raise WebError("interior vertices must be trivalent")
            for d in th:
                e = th[d]
                k = (d in self.heads) + (e in self.heads)
                if k != 1:
                    raise WebError("edge %r-%r must have exactly one head" % (d, e))
            for i, tri in enumerate(self.vertices):
                flags = {d in self.heads for d in tri}
                if len(flags) != 1:
                    raise WebError("vertex %d violates the all-in/all-out flow rule" % i)
        self._check_planarity(strict)

    def _components(self):
        """Connected components of the dart set; boundary darts all linked."""
        parent = {d: d for d in self.theta}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        def union(x, y):
            rx, ry = find(x), find(y)
            if rx != ry:
                parent[rx] = ry

        for d, e in self.theta.items():
            union(d, e)
        for tri in self.vertices:
            for i in range(len(tri) - 1):
                union(tri[i], tri[i + 1])
        for i in range(len(self.boundary) - 1):
            union(self.boundary[i], self.boundary[i + 1])
        comps = {}
        for d in self.theta:
            comps.setdefault(find(d), []).append(d)
        return list(comps.values())

    def _check_planarity(self, strict):
        bset = set(self.boundary)
        faces = self.faces()
        for comp in self._components():
            cset = set(comp)
            has_bd = bool(cset & bset)
            nv = len([tri for tri in self.vertices if tri[0] in cset])
            if has_bd:
                nv += 1  # the disk boundary acts as one more vertex
            ne = len(comp) // 2
            nf = len([f for f in faces if f.darts[0] in cset])
            if nv - ne + nf != 2:
                raise WebError("component fails the Euler planarity check "
                               "(V-E+F = %d)" % (nv - ne + nf))
            if strict and self.boundary and not has_bd:
                raise WebError("closed component present (strict mode)")
        if strict and self.circles:
            raise WebError("free circles present (strict mode)")

    # ------------------------------------------------------------------
    # derived data

    def boundary_signature(self):
        """Minuscule labels clockwise from the base dart.

        A leg where the w1 flow leaves the disk reads w1; a leg where it
        enters reads w2.  All A1 legs read w1.
        """
        if self.mode == "a1":
            return tuple(W1 for _ in self.boundary)
        return tuple(W1 if d in self.heads else W2 for d in self.boundary)

    # ------------------------------------------------------------------
    # canonicalization

    def _encode_from(self, seeds, cset=None):
        """Canonical traversal encoding seeded by the given dart order."""
        num = {}
        order = []

        def see(d):
            if d not in num:
                num[d] = len(order)
                order.append(d)

        for s in seeds:
            see(s)
        i = 0
        while i < len(order):
            d = order[i]
            i += 1
            e = self.theta[d]
            see(e)
            vi = self.vertex_of(e)
            if vi is not None:
                tri = self.vertices[vi]
                j = tri.index(e)
                for k in range(1, len(tri)):
                    see(tri[(j + k) % len(tri)])
        if cset is not None and len(order) != len(cset):
            raise WebError("traversal did not cover the component")
        rec = []
        bset = set(self.boundary)
        for d in order:
            vi = self.vertex_of(d)
            rec.append((num[self.theta[d]],
                        num[self.sigma(d)] if vi is not None else -1,
                        1 if d in self.heads else 0,
                        1 if d in bset else 0))
        return tuple(rec), num

    def canonical_key(self):
        """Equal keys iff isomorphic by a based, orientation-preserving map
        isomorphism (free circles counted)."""
        if self._ckey is None:
            self._ckey, self._crank = self._canonicalize()
        return self._ckey

    def canonical_rank(self):
        """dart -> position in the canonical traversal (tie-break ordering)."""
        if self._crank is None:
            self._ckey, self._crank = self._canonicalize()
        return self._crank

    def _canonicalize(self):
        bset = set(self.boundary)
        parts = []
        rank = {}
        offset = 0
        if self.boundary:
            comps = self._components()
            covered = set()
            for comp in comps:
                if set(comp) & bset:
                    covered |= set(comp)
            seeds = list(self.boundary)
            enc, num = self._encode_from(seeds, covered)
            parts.append(("bd", len(self.boundary), enc))
            rank.update(num)
            offset = len(num)
            closed = [c for c in comps if not (set(c) & bset)]
        else:
            closed = self._components()
        closed_encs = []
        for comp in closed:
            best = None
            for seed in sorted(comp, key=lambda d: str(d)):
                enc, num = self._encode_from([seed], set(comp))
                if best is None or enc < best[0]:
                    best = (enc, num)
            closed_encs.append(best)
        closed_encs.sort(key=lambda t: t[0])
        for enc, num in closed_encs:
            parts.append(("cl", enc))
            for d, k in num.items():
                rank[d] = offset + k
            offset += len(num)
        key = repr((self.mode, self.circles, parts)).encode()
        return key, rank

    def __eq__(self, other):
        return isinstance(other, Web) and self.canonical_key() == other.canonical_key()

    def __hash__(self):
        return hash(self.canonical_key())

    def __repr__(self):
        return "<Web %s: %d legs, %d vertices, %d edges, %d circles>" % (
            self.mode, len(self.boundary), len(self.vertices),
            self.n_edges(), self.circles)


EMPTY_A2 = Web("a2", {}, (), ())
EMPTY_A1 = Web("a1", {}, (), ())


def empty_web(mode):
    return EMPTY_A1 if mode == "a1" else EMPTY_A2


# ----------------------------------------------------------------------
# parsing / serialization (.web format)

def parse_web(text, strict=True):
    """Parse the line-oriented .web format.

    Lines: ``type a1|a2``, ``bdarts d0 d1 ...`` (clockwise from the base),
    ``vertex dA dB dC`` (counterclockwise), ``edge dX dY``, ``head dX``;
    ``#`` starts a comment.  An ``edge`` line whose darts are attached to
    no vertex and no boundary denotes a free circle.
    """
    mode = None
    boundary = []
    vertices = []
    edges = []
    heads = []
    for ln, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        toks = line.split()
        kind, args = toks[0].lower(), toks[1:]
        if kind == "type":
            if len(args) != 1 or args[0].lower() not in ("a1", "a2"):
                raise WebError("line %d: type must be a1 or a2" % ln)
            mode = args[0].lower()
        elif kind == "bdarts":
            boundary = list(args)
        elif kind == "vertex":
            if len(args) != 3:
                raise WebError("line %d: vertex needs 3 darts" % ln)
            vertices.append(tuple(args))
        elif kind == "edge":
            if len(args) != 2:
                raise WebError("line %d: edge needs 2 darts" % ln)
            edges.append(tuple(args))
        elif kind == "head":
            if len(args) != 1:
                raise WebError("line %d: head needs 1 dart" % ln)
            heads.append(args[0])
        else:
            raise WebError("line %d: unknown directive %r" % (ln, toks[0]))
    if mode is None:
        raise WebError("missing 'type' line")
    attached = set(boundary)
    for tri in vertices:
        attached.update(tri)
    theta = {}
    circles = 0
    headset = set(heads)
    for a, b in edges:
        if a not in attached and b not in attached:
            circles += 1  # a free circle
            headset.discard(a)
            headset.discard(b)
            continue
        if a in theta or b in theta:
            raise WebError("dart used by two edges: %r/%r" % (a, b))
        theta[a] = b
        theta[b] = a
    w = Web(mode, theta, vertices, boundary, headset, circles, check=False)
    w.validate(strict=strict)
    return w


def serialize_web(w):
    """Canonical .web text: darts renumbered in traversal order."""
    rank = w.canonical_rank()
    name = {d: "d%d" % rank[d] for d in w.theta}
    lines = ["type %s" % w.mode]
    if w.boundary:
        lines.append("bdarts " + " ".join(name[d] for d in w.boundary))
    for tri in sorted(w.vertices, key=lambda t: min(rank[d] for d in t)):
        i = min(range(3), key=lambda j: rank[tri[j]])
        tri = tri[i:] + tri[:i]
        lines.append("vertex " + " ".join(name[d] for d in tri))
    done = set()
    edge_lines = []
    head_lines = []
    for d in sorted(w.theta, key=lambda d: rank[d]):
        if d in done:
            continue
        e = w.theta[d]
        done.add(d)
        done.add(e)
        edge_lines.append("edge %s %s" % (name[d], name[e]))
        if d in w.heads:
            head_lines.append("head %s" % name[d])
        elif e in w.heads:
            head_lines.append("head %s" % name[e])
    lines += edge_lines + head_lines
    nd = len(w.theta)
    for k in range(w.circles):
        lines.append("edge c%d c%d" % (nd + 2 * k, nd + 2 * k + 1))
    return "\n".join(lines) + "\n"


# ----------------------------------------------------------------------
# elementary surgery

def rotate(w, i):
    """Advance the base dart i positions around the boundary (lambda^(i))."""
    n = len(w.boundary)
    if n == 0:
        return w
    i %= n
    bd = w.boundary[i:] + w.boundary[:i]
    return Web(w.mode, w.theta, w.vertices, bd, w.heads, w.circles, check=False)


def reflect(w):
    """Plain reflection: reversed rotations and boundary, flow kept."""
    n = len(w.boundary)
    verts = tuple(tuple(reversed(tri)) for tri in w.vertices)
    bd = tuple(w.boundary[(-j) % n] for j in range(n)) if n else ()
    return Web(w.mode, w.theta, verts, bd, w.heads, w.circles, check=False)


def mirror(w):
    """The reflected, flow-reversed web (the adjoint diagram).

    Its boundary signature is the reverse-dual of w's, so glue(w, mirror(w))
    is always defined; mirror(Y) is the all-in Y.
    """
    r = reflect(w)
    heads = frozenset(w.theta[d] for d in w.heads)
    return Web(w.mode, r.theta, r.vertices, r.boundary, heads, w.circles,
               check=False)


def glue(w, wp):
    """Close w against wp (reflected) into a closed web.

    Requires boundary_signature(wp) to be the reverse-dual of w's; leg k of
    w meets leg (-k mod n) of wp, bases aligned.
    """
    n = len(w.boundary)
    if len(wp.boundary) != n:
        raise WebError("glue: boundary sizes differ")
    sig = w.boundary_signature()
    sigp = wp.boundary_signature()
    for k in range(n):
        if sigp[(-k) % n] != weights.dual(sig[k], w.mode):
            raise WebError("glue: signatures are not reverse-dual")
    if w.mode != wp.mode:
        raise WebError("glue: mode mismatch")

    # wp is flipped onto the back of the sphere.  With rotations read
    # against the outward normal its stored data is unchanged, but seen
    # from the front its legs run counterclockwise, so leg k of w meets
    # leg (-k mod n) of wp.
    def ren(tag, web):
        m = {d: (tag, d) for d in web.theta}
        theta = {m[a]: m[b] for a, b in web.theta.items()}
        verts = [tuple(m[d] for d in tri) for tri in web.vertices]
        bd = [m[d] for d in web.boundary]
        heads = {m[d] for d in web.heads}
        return theta, verts, bd, heads

    th1, v1, b1, h1 = ren(0, w)
    th2, v2, b2, h2 = ren(1, wp)
    theta = {**th1, **th2}
    verts = tuple(v1) + tuple(v2)
    heads = h1 | h2
    base = Web(w.mode, theta, verts, tuple(b1) + tuple(b2), heads,
               w.circles + wp.circles, check=False)
    joints = [(b1[k], b2[(-k) % n]) for k in range(n)]
    return splice(base, (), joints, closed=True)


def splice(w, remove_vertices, joints, closed=False):
    """Remove the given vertices, concatenating edges through the joints.

    ``joints`` pairs darts whose edges become one; every jointed dart is
    deleted, as is every dart of a removed vertex and (for closed=True)
    every boundary dart.  Fully deleted edges vanish; chains of joints
    that close up become free circles.
    """
    rm = set(remove_vertices)
    deleted = set()
    for i in rm:
        deleted.update(w.vertices[i])
    jp = {}
    for a, b in joints:
        jp[a] = b
        jp[b] = a
        deleted.add(a)
        deleted.add(b)
    if closed:
        deleted.update(w.boundary)

    theta = {d: e for d, e in w.theta.items() if d not in deleted and e not in deleted}
    heads = {d for d in w.heads if d in theta}
    circles = w.circles
    new_edges = []

    def flows_to(d):
        # True if the w1 flow of dart d's edge runs toward d.
        return d in w.heads

    visited = set()
    # open chains: start from surviving darts whose partner was deleted
    for e0 in list(w.theta):
        if e0 in deleted:
            continue
        d = w.theta[e0]
        if d not in deleted:
            continue
        # walk e0 -> d -> joint -> ... -> far end
        forward = flows_to(d)  # flow direction of travel
        visited.add(d)
        while True:
            if d not in jp:
                raise WebError("splice: dangling deleted dart %r" % (d,))
            d2 = jp[d]
            visited.add(d2)
            nxt = w.theta[d2]
            if w.mode == "a2":
                if flows_to(nxt) != forward:
                    raise WebError("splice: inconsistent w1 flow across joint")
            if nxt not in deleted:
                new_edges.append((e0, nxt, forward))
                break
            visited.add(nxt)
            d = nxt
    # closed chains become circles
    for a in jp:
        if a in visited:
            continue
        d = a
        while d not in visited:
            visited.add(d)
            d2 = jp[d]
            visited.add(d2)
            d = w.theta[d2]
        circles += 1
    for a, b, forward in new_edges:
        theta[a] = b
        theta[b] = a
        if w.mode == "a2":
            if forward:
                heads.add(b)
            else:
                heads.add(a)
    verts = tuple(tri for i, tri in enumerate(w.vertices) if i not in rm)
    bd = () if closed else tuple(d for d in w.boundary if d not in deleted)
    return Web(w.mode, theta, verts, bd, heads, circles, check=False)


# ----------------------------------------------------------------------
# construction helper

class WebBuilder:
    """Incremental construction with integer darts."""

    def __init__(self, mode="a2"):
        self.mode = mode
        self._next = 0
        self.theta = {}
        self.vertices = []
        self.boundary = []
        self.heads = set()
        self.circles = 0

    def dart(self):
        d = self._next
        self._next += 1
        return d

    def darts(self, k):
        return [self.dart() for _ in range(k)]

    def edge(self, a, b, head=None):
        self.theta[a] = b
        self.theta[b] = a
        if head is not None:
            self.heads.add(head)
        return (a, b)

    def vertex(self, a, b, c):
        """Interior vertex with counterclockwise dart order (a, b, c)."""
        self.vertices.append((a, b, c))

    def build(self, validate=True):
        w = Web(self.mode, self.theta, self.vertices, self.boundary,
                self.heads, self.circles, check=False)
        if validate:
            w.validate(strict=False)
        return w

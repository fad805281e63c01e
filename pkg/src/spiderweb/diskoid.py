"""Dual diskoids: triangulated weight-metric geometry for webs.

A diskoid has a vertex for every face of a web (boundary regions and
internal faces), one labelled dual edge per web edge, and one triangle
per web vertex.  Edge labels are minuscule; traversing an edge along its
stored direction contributes its label to a path weight, traversing it
backwards contributes the dual label.  The distance between vertices is
the dominance-minimal path weight; diskoids dual to non-elliptic webs
satisfy the combinatorial CAT(0) condition (every interior vertex meets
at least six triangles) and have coherent (unique-minimum) distances.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import weights
from .weights import W1, W2, dual, dominance_leq, rho_level
from .webs import WebError


class DiskoidError(ValueError):
    pass


@dataclass(frozen=True)
class Geodesic:
    vertices: tuple   # visited diskoid vertices, in order
    eids: tuple       # edge ids traversed
    steps: tuple      # per-edge traversal weights (minuscule)
    total: tuple      # sum of steps (DominantWeight)


class Diskoid:
    __slots__ = ("mode", "names", "base", "boundary", "edges", "triangles",
                 "_adj", "_tris_at", "_tri_vsets")

    def __init__(self, mode, names, base, boundary, edges, triangles,
                 check=True):
        self.mode = mode
        self.names = tuple(names)
        self.base = base
        self.boundary = tuple(boundary)
        self.edges = {e: (u, v, lam) for e, (u, v, lam) in dict(edges).items()}
        self.triangles = tuple(tuple(t) for t in triangles)
        self._adj = None
        self._tris_at = None
        self._tri_vsets = None
        if check:
            self.validate()

    # ------------------------------------------------------------------

    def n_vertices(self):
        return len(self.names)

    def n_edges(self):
        return len(self.edges)

    def n_triangles(self):
        return len(self.triangles)

    def is_sphere(self):
        return not self.boundary

    def interior_vertices(self):
        bset = set(self.boundary)
        return [v for v in self.names if v not in bset]

    def adjacency(self):
        """vertex -> list of (neighbor, step weight, eid, along flag)."""
        if self._adj is None:
            adj = {v: [] for v in self.names}
            for e, (u, v, lam) in self.edges.items():
                adj[u].append((v, lam, e, True))
                adj[v].append((u, dual(lam, self.mode), e, False))
            self._adj = adj
        return self._adj

    def triangle_vertices(self, t):
        """The vertex set of triangle index t."""
        if self._tri_vsets is None:
            self._tri_vsets = []
            for tri in self.triangles:
                vs = set()
                for e in tri:
                    u, v, _ = self.edges[e]
                    vs.add(u)
                    vs.add(v)
                self._tri_vsets.append(frozenset(vs))
        return self._tri_vsets[t]

    def triangles_at(self, v):
        if self._tris_at is None:
            m = {x: 0 for x in self.names}
            for t in range(len(self.triangles)):
                for x in self.triangle_vertices(t):
                    m[x] += 1
            self._tris_at = m
        return self._tris_at[v]

    def edge_between(self, u, v):
        """All edge ids joining u and v (multi-edges allowed)."""
        return [e for e, (a, b, _) in self.edges.items()
                if {a, b} == {u, v}]

    # ------------------------------------------------------------------

    def validate(self):
        vset = set(self.names)
        if len(vset) != len(self.names):
            raise DiskoidError("duplicate vertex names")
        for e, (u, v, lam) in self.edges.items():
            if u not in vset or v not in vset:
                raise DiskoidError("edge %r has unknown endpoint" % (e,))
            if u == v:
                raise DiskoidError("edge %r is a self-loop" % (e,))
            if not weights.is_minuscule(lam, self.mode) or lam == (0, 0):
                raise DiskoidError("edge %r label is not minuscule" % (e,))
        for tri in self.triangles:
            self._check_triangle(tri)
        if self.boundary:
            if self.base != self.boundary[0]:
                raise DiskoidError("base must be the first boundary vertex")
            if not set(self.boundary) <= vset:
                raise DiskoidError("boundary vertex unknown")
            euler = 1
        else:
            if self.base is not None and self.base not in vset:
                raise DiskoidError("unknown base vertex")
            euler = 2 if self.names else 0
        if self.names and (len(self.names) - len(self.edges)
                           + len(self.triangles)) != euler:
            raise DiskoidError("V - E + T = %d, expected %d" % (
                len(self.names) - len(self.edges) + len(self.triangles),
                euler))

    def _check_triangle(self, tri):
        if len(tri) != 3 or len(set(tri)) != 3:
            raise DiskoidError("triangle needs 3 distinct edges")
        for e in tri:
            if e not in self.edges:
                raise DiskoidError("triangle uses unknown edge %r" % (e,))
        # the three edges must close into a cycle...
        ends = {}
        for e in tri:
            u, v, _ = self.edges[e]
            ends.setdefault(u, []).append(e)
            ends.setdefault(v, []).append(e)
        if len(ends) != 3 or any(len(es) != 2 for es in ends.values()):
            raise DiskoidError("triangle edges do not close up")
        # ...and be cyclically oriented: walking the cycle one way, the
        # three step weights are all equal (all w1-type or all w2-type).
        verts = list(ends)
        a = verts[0]
        e1 = ends[a][0]
        u, v, lam = self.edges[e1]
        b = v if u == a else u
        s1 = lam if u == a else dual(lam, self.mode)
        e2 = next(e for e in ends[b] if e != e1)
        u, v, lam = self.edges[e2]
        c = v if u == b else u
        s2 = lam if u == b else dual(lam, self.mode)
        e3 = next(e for e in ends[c] if e != e2)
        u, v, lam = self.edges[e3]
        s3 = lam if u == c else dual(lam, self.mode)
        back = v if u == c else u
        if back != a or not (s1 == s2 == s3):
            raise DiskoidError("triangle is not a unit lattice triangle")

    def __repr__(self):
        return "<Diskoid %s: %d vertices, %d edges, %d triangles>" % (
            self.mode, len(self.names), len(self.edges), len(self.triangles))


# ----------------------------------------------------------------------
# CAT(0) criterion

def is_cat0(D):
    """Every interior vertex meets at least six triangles."""
    return all(D.triangles_at(v) >= 6 for v in D.interior_vertices())


# ----------------------------------------------------------------------
# weight-valued distance

def _admit(antichain, cand, mode):
    """Insert cand into a Pareto-minimal antichain; False if dominated."""
    for u in antichain:
        if dominance_leq(u, cand, mode):
            return False
    antichain[:] = [u for u in antichain if not dominance_leq(cand, u, mode)]
    antichain.append(cand)
    return True


def distance_sets(D, p):
    """Pareto-minimal achievable path weights from p to every vertex.

    Breadth-first over path length with dominance pruning; simple paths
    suffice because deleting a cycle from a path weakly dominates it, so
    the length cap is the vertex count.
    """
    adj = D.adjacency()
    best = {v: [] for v in D.names}
    best[p] = [(0, 0)]
    frontier = {p: [(0, 0)]}
    for _ in range(len(D.names)):
        nxt = {}
        for v, ws in frontier.items():
            for w, step, _eid, _along in adj[v]:
                for (a, b) in ws:
                    cand = (a + step[0], b + step[1])
                    if _admit(best[w], cand, D.mode):
                        nxt.setdefault(w, []).append(cand)
        frontier = nxt
        if not frontier:
            break
    return best


def distance(D, p, q, strict=True):
    """The dominance-minimal path weight from p to q.

    With strict=True a non-coherent pair (Pareto antichain with more
    than one minimum, possible only off CAT(0)) raises; otherwise the
    full antichain is returned as a sorted tuple.
    """
    pareto = distance_sets(D, p)[q]
    if not pareto:
        raise DiskoidError("no path from %r to %r" % (p, q))
    if len(pareto) > 1:
        if strict:
            raise DiskoidError("non-coherent distance %r -> %r: %r"
                               % (p, q, sorted(pareto)))
        return tuple(sorted(pareto))
    return pareto[0]


# ----------------------------------------------------------------------
# geodesics

def _bounded_reach(D, src, bound, reverse=False):
    """reach[v] = set of (a,b) <= bound realizable by a path src..v
    (paths v..src when reverse)."""
    adj = D.adjacency()
    A, B = bound
    reach = {v: set() for v in D.names}
    reach[src].add((0, 0))
    frontier = {src: {(0, 0)}}
    for _ in range(A + B):
        nxt = {}
        for v, ws in frontier.items():
            for w, step, _eid, _along in adj[v]:
                st = dual(step, D.mode) if reverse else step
                for (a, b) in ws:
                    cand = (a + st[0], b + st[1])
                    if cand[0] <= A and cand[1] <= B and cand not in reach[w]:
                        reach[w].add(cand)
                        nxt.setdefault(w, set()).add(cand)
        frontier = nxt
        if not frontier:
            break
    return reach


def geodesics(D, p, q):
    """All weight-minimal paths from p to q (each with total weight
    distance(D, p, q) and exactly <d, rho-check> edges)."""
    d = distance(D, p, q)
    if d == (0, 0):
        return [Geodesic((p,), (), (), (0, 0))]
    back = _bounded_reach(D, q, d, reverse=True)
    adj = D.adjacency()
    out = []

    def rec(v, a, b, path, eids, steps):
        if (a, b) == d:
            if v == q:
                out.append(Geodesic(tuple(path), tuple(eids), tuple(steps), d))
            return
        for w, step, eid, _along in adj[v]:
            a2, b2 = a + step[0], b + step[1]
            if a2 > d[0] or b2 > d[1]:
                continue
            if (d[0] - a2, d[1] - b2) not in back[w]:
                continue
            path.append(w)
            eids.append(eid)
            steps.append(step)
            rec(w, a2, b2, path, eids, steps)
            path.pop()
            eids.pop()
            steps.pop()

    rec(p, 0, 0, [p], [], [])
    return out


def _step_type(D, u, v, eid):
    a, b, lam = D.edges[eid]
    if (a, b) == (u, v):
        return lam
    if (b, a) == (u, v):
        return dual(lam, D.mode)
    raise DiskoidError("edge %r does not join %r and %r" % (eid, u, v))


def diamond_sites(D, g):
    """All (index, apex, new edge pair) triples where the geodesic can be
    rerouted across a flat rhombus.

    At path position i the two edges u->v->w and the rerouted pair
    u->x->w bound a rhombus of two triangles.  When the two steps have
    the same minuscule type the triangles are (u,v,w) and (u,w,x),
    sharing the diagonal u-w; when the types differ they are (u,v,x) and
    (v,w,x), sharing the diagonal v-x.  Flatness in both cases is the
    label pattern type(u->x) = type(v->w) and type(x->w) = type(u->v).
    """
    sites = []
    tri_sets = {D.triangle_vertices(t): t for t in range(len(D.triangles))}

    def flat(eux, exw, i):
        return (_step_type(D, g.vertices[i - 1], x, eux)
                == _step_type(D, g.vertices[i], g.vertices[i + 1], g.eids[i])
                and _step_type(D, x, g.vertices[i + 1], exw)
                == _step_type(D, g.vertices[i - 1], g.vertices[i],
                              g.eids[i - 1]))

    for i in range(1, len(g.vertices) - 1):
        u, v, w = g.vertices[i - 1], g.vertices[i], g.vertices[i + 1]
        if u == w:
            continue
        t_uvw = tri_sets.get(frozenset((u, v, w)))
        for x in D.names:
            if x in (u, v, w):
                continue
            found = None
            # same-type rhombus: triangles (u,v,w), (u,w,x), diagonal u-w
            if t_uvw is not None:
                t2 = tri_sets.get(frozenset((u, w, x)))
                if t2 is not None:
                    tri1, tri2 = D.triangles[t_uvw], D.triangles[t2]
                    if any(e in tri1 and e in tri2
                           for e in D.edge_between(u, w)):
                        eux = [e for e in tri2 if e in D.edge_between(u, x)]
                        exw = [e for e in tri2 if e in D.edge_between(x, w)]
                        if eux and exw:
                            found = (eux[0], exw[0])
            # mixed-type rhombus: triangles (u,v,x), (v,w,x), diagonal v-x
            if found is None:
                t1 = tri_sets.get(frozenset((u, v, x)))
                t2 = tri_sets.get(frozenset((v, w, x)))
                if t1 is not None and t2 is not None:
                    tri1, tri2 = D.triangles[t1], D.triangles[t2]
                    if any(e in tri1 and e in tri2
                           for e in D.edge_between(v, x)):
                        eux = [e for e in tri1 if e in D.edge_between(u, x)]
                        exw = [e for e in tri2 if e in D.edge_between(x, w)]
                        if eux and exw:
                            found = (eux[0], exw[0])
            if found is not None and flat(found[0], found[1], i):
                sites.append((i, x, found))
    return sites


def diamond_move(D, g, site):
    """Reroute the geodesic across the flat rhombus at the given site."""
    i, x, (eux, exw) = site
    if not (1 <= i < len(g.vertices) - 1):
        raise DiskoidError("invalid diamond site")
    u, w = g.vertices[i - 1], g.vertices[i + 1]
    verts = g.vertices[:i] + (x,) + g.vertices[i + 1:]
    eids = g.eids[:i - 1] + (eux, exw) + g.eids[i + 1:]
    steps = (g.steps[:i - 1]
             + (_step_type(D, u, x, eux), _step_type(D, x, w, exw))
             + g.steps[i + 1:])
    return Geodesic(verts, eids, steps, g.total)


def complete_extension(D, g):
    """A boundary-to-boundary geodesic containing g (CAT(0) inputs)."""
    bset = set(D.boundary)
    adj = D.adjacency()

    def is_geodesic(u, total, v):
        pareto = distance_sets(D, u)[v]
        return total in pareto

    def rec(verts, eids, steps, total):
        u, v = verts[0], verts[-1]
        if v not in bset:
            for w, step, eid, _along in adj[v]:
                if w in verts:
                    continue
                t2 = (total[0] + step[0], total[1] + step[1])
                if not is_geodesic(u, t2, w):
                    continue
                r = rec(verts + (w,), eids + (eid,), steps + (step,), t2)
                if r is not None:
                    return r
            return None
        if u not in bset:
            for w, step, eid, _along in adj[u]:
                if w in verts:
                    continue
                st = dual(step, D.mode)
                t2 = (total[0] + st[0], total[1] + st[1])
                if not is_geodesic(w, t2, v):
                    continue
                r = rec((w,) + verts, (eid,) + eids, (st,) + steps, t2)
                if r is not None:
                    return r
            return None
        return Geodesic(verts, eids, steps, total)

    r = rec(g.vertices, g.eids, g.steps, g.total)
    if r is None:
        raise DiskoidError("no complete extension found (non-CAT(0) input?)")
    return r


def complete_geodesics(D):
    """All geodesics joining two (not necessarily distinct) boundary
    vertices."""
    out = []
    n = len(D.boundary)
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            out.extend(geodesics(D, D.boundary[i], D.boundary[j]))
    return out


# ----------------------------------------------------------------------
# boundary distance vectors and the order

def mu_vector(D, i=0):
    """Distances from boundary vertex i to vertices i+1, ..., i+n."""
    n = len(D.boundary)
    if n == 0:
        raise DiskoidError("mu_vector needs a boundary")
    src = D.boundary[i % n]
    sets = distance_sets(D, src)
    out = []
    for k in range(1, n + 1):
        pareto = sets[D.boundary[(i + k) % n]]
        if len(pareto) != 1:
            raise DiskoidError("non-coherent distance in mu_vector")
        out.append(pareto[0])
    return tuple(out)


def leq_S(D, E):
    """True iff every boundary-pair distance of D is dominance-below the
    matching distance of E."""
    n = len(D.boundary)
    if len(E.boundary) != n:
        raise DiskoidError("boundary sizes differ")
    for i in range(n):
        dd = distance_sets(D, D.boundary[i])
        de = distance_sets(E, E.boundary[i])
        for j in range(n):
            if i == j:
                continue
            a = dd[D.boundary[j]]
            b = de[E.boundary[j]]
            if len(a) != 1 or len(b) != 1:
                raise DiskoidError("non-coherent distance in leq_S")
            if not dominance_leq(a[0], b[0], D.mode):
                return False
    return True


# ----------------------------------------------------------------------
# construction from webs

def dual_diskoid(w):
    """The dual diskoid of a web: faces become vertices, each web edge a
    dual edge directed from the head dart's face to the tail dart's face
    and labelled w1, each web vertex a triangle.

    For a web with boundary the base is the face of the base dart and
    the boundary cycle lists the faces of the boundary darts in order;
    closed webs yield sphere complexes based at the face containing the
    canonically least dart.
    """
    if w.circles:
        raise WebError("dual_diskoid: remove free circles first")
    faces = w.faces()
    face_of = {}
    for i, f in enumerate(faces):
        for d in f.darts:
            face_of[d] = i
    names = list(range(len(faces)))
    edges = {}
    dart_edge = {}
    eid = 0
    done = set()
    rank = w.canonical_rank()
    for d in sorted(w.theta, key=lambda d: rank[d]):
        if d in done:
            continue
        e = w.theta[d]
        done.add(d)
        done.add(e)
        if w.mode == "a2":
            head = d if d in w.heads else e
            tail = w.theta[head]
        else:
            head, tail = d, e
        edges[eid] = (face_of[head], face_of[tail], W1)
        dart_edge[d] = eid
        dart_edge[e] = eid
        eid += 1
    # one triangle per web vertex: the dual edges of its three web edges
    triangles = [tuple(dart_edge[d] for d in tri) for tri in w.vertices]
    if w.boundary:
        boundary = [face_of[b] for b in w.boundary]
        base = boundary[0]
    else:
        boundary = []
        base = face_of[min(w.theta, key=lambda d: rank[d])] if w.theta else None
    return Diskoid(w.mode, names, base, boundary, edges, triangles)


# ----------------------------------------------------------------------
# .dsk text format

def parse_diskoid(text):
    """Line-oriented .dsk format: ``type``, ``vertex NAME``, ``base NAME``,
    ``boundary N0 N1 ...``, ``edge EID TAIL HEAD LABEL``,
    ``triangle E0 E1 E2``; ``#`` comments."""
    mode = None
    names = []
    base = None
    boundary = []
    edges = {}
    triangles = []
    for ln, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        toks = line.split()
        kind, args = toks[0].lower(), toks[1:]
        if kind == "type":
            mode = args[0].lower()
        elif kind == "vertex":
            names.extend(args)
        elif kind == "base":
            base = args[0]
        elif kind == "boundary":
            boundary = list(args)
        elif kind == "edge":
            if len(args) != 4:
                raise DiskoidError("line %d: edge EID TAIL HEAD LABEL" % ln)
            edges[args[0]] = (args[1], args[2], weights.parse_weight(args[3]))
        elif kind == "triangle":
            if len(args) != 3:
                raise DiskoidError("line %d: triangle needs 3 edges" % ln)
            triangles.append(tuple(args))
        else:
            raise DiskoidError("line %d: unknown directive %r" % (ln, toks[0]))
    if mode is None:
        raise DiskoidError("missing 'type' line")
    return Diskoid(mode, names, base, boundary, edges, triangles)


def serialize_diskoid(D):
    # natural order so that reserialization after a roundtrip is stable
    ekey = lambda e: (len(str(e)), str(e))
    name = {v: "p%d" % i for i, v in enumerate(D.names)}
    ename = {e: "e%d" % i for i, e in enumerate(sorted(D.edges, key=ekey))}
    lines = ["type %s" % D.mode]
    lines.append("vertex " + " ".join(name[v] for v in D.names))
    if D.base is not None:
        lines.append("base %s" % name[D.base])
    if D.boundary:
        lines.append("boundary " + " ".join(name[v] for v in D.boundary))
    for e in sorted(D.edges, key=ekey):
        u, v, lam = D.edges[e]
        lines.append("edge %s %s %s %s" % (ename[e], name[u], name[v],
                                           weights.format_weight(lam)))
    for tri in D.triangles:
        lines.append("triangle " + " ".join(ename[e] for e in tri))
    return "\n".join(lines) + "\n"

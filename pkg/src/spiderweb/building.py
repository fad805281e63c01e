"""A finite lattice model of the affine Grassmannian of PGL(3) over F_q.

Points are homothety classes of full rank-3 lattices over the discrete
valuation ring F_q[[t]], computed exactly in the truncated polynomial
ring F_q[t]/t^N.  Minuscule neighbor generation, elementary-divisor
distances, exhaustive configuration and fibre counting for polygons and
diskoids, counting-polynomial interpolation with an Euler-characteristic
estimate at q = 1, and the projective incidence solver for the twelve-leg
hexagon web all live here.

The color calibration is fixed once: the w1-neighbors of a class L are
the kernels of the q^2+q+1 functionals on L/tL (codimension one), the
w2-neighbors the preimages of the lines of L/tL (codimension two), and
distances are read off elementary divisors as
(e3-e2) w1 + (e2-e1) w2, so that d(base, w1-neighbor) = w1 and the
duality axiom d(x,y) = d(y,x)* holds.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .weights import W1, W2, ZERO, dual, rho_level
from .diskoid import Diskoid


class BuildingError(Exception):
    pass


# ----------------------------------------------------------------------
# truncated polynomial arithmetic over F_q


def _is_prime(n):
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


class FieldParam:
    """The residue field F_q and the working precision t^N."""

    __slots__ = ("q", "N")

    def __init__(self, q, N):
        if not _is_prime(q):
            raise BuildingError("q must be prime, got %r" % (q,))
        if N < 2:
            raise BuildingError("precision N must be at least 2")
        self.q = q
        self.N = N

    def __repr__(self):
        return "FieldParam(q=%d, N=%d)" % (self.q, self.N)


def auto_precision(labels):
    """Conservative precision for a query whose edge labels are given:
    twice the total rho-level of all labels, plus two."""
    return 2 * sum(rho_level(lam) for lam in labels) + 2


def _pzero(N):
    return (0,) * N


def _pone(N):
    return (1,) + (0,) * (N - 1)


def _padd(a, b, q):
    return tuple((x + y) % q for x, y in zip(a, b))


def _psub(a, b, q):
    return tuple((x - y) % q for x, y in zip(a, b))


def _pneg(a, q):
    return tuple((-x) % q for x in a)


def _pmul(a, b, q, N):
    out = [0] * N
    for i, x in enumerate(a):
        if x:
            for j in range(N - i):
                y = b[j]
                if y:
                    out[i + j] = (out[i + j] + x * y) % q
    return tuple(out)


def _pval(a):
    """t-adic valuation; None for zero mod t^N."""
    for i, c in enumerate(a):
        if c:
            return i
    return None


def _pshift(a, k, N):
    """Multiply by t^k (k >= 0) or divide exactly by t^-k (k < 0)."""
    if k >= 0:
        return (0,) * k + a[:N - k]
    k = -k
    if any(a[:k]):
        raise BuildingError("inexact division by t^%d" % k)
    return a[k:] + (0,) * k


def _pinv_unit(a, q, N):
    """Inverse of a unit (valuation 0) mod t^N."""
    c0 = a[0]
    if c0 == 0:
        raise BuildingError("not a unit")
    inv0 = pow(c0, q - 2, q)
    out = [0] * N
    out[0] = inv0
    # out satisfies a*out = 1 mod t^k, extended one coefficient at a time
    for k in range(1, N):
        s = 0
        for i in range(1, k + 1):
            s += a[i] * out[k - i]
        out[k] = (-s * inv0) % q
    return tuple(out)


def _pscale_col(col, f, q, N):
    return tuple(_pmul(p, f, q, N) for p in col)


def _col_sub(col, f, other, q, N):
    return tuple(_psub(p, _pmul(f, o, q, N), q)
                 for p, o in zip(col, other))


# ----------------------------------------------------------------------
# lattice classes


class LatticeClass:
    """A homothety class of full lattices in F_q((t))^3, stored as the
    unique column Hermite normal form of a representative L with
    L contained in O^3 but not in t.O^3."""

    __slots__ = ("fp", "cols", "_divisors")

    def __init__(self, fp, cols, _normalized=False):
        self.fp = fp
        if _normalized:
            self.cols = cols
        else:
            self.cols = _normal_form(cols, fp)
        self._divisors = None

    def __eq__(self, other):
        return isinstance(other, LatticeClass) and self.cols == other.cols

    def __hash__(self):
        return hash(self.cols)

    def divisors(self):
        """Elementary divisor exponents (e1 <= e2 <= e3) of O^3 / L."""
        if self._divisors is None:
            self._divisors = _pair_divisors(_identity_cols(self.fp),
                                            self.cols, self.fp)
        return self._divisors

    def __repr__(self):
        return "<LatticeClass divisors=%s>" % (self.divisors(),)


def _identity_cols(fp):
    N = fp.N
    z, o = _pzero(N), _pone(N)
    return ((o, z, z), (z, o, z), (z, z, o))


def base_class(fp):
    """The standard lattice O^3."""
    return LatticeClass(fp, _identity_cols(fp), _normalized=True)


def _hnf(cols, fp):
    """Column Hermite normal form over the truncated DVR: lower
    triangular, diagonal t^{e_i} with unit pivots normalized away, and
    entries left of each pivot reduced modulo the pivot."""
    q, N = fp.q, fp.N
    M = [[cols[j][i] for j in range(len(cols))] for i in range(3)]  # rows

    def col(j):
        return tuple(M[i][j] for i in range(3))

    def set_col(j, c):
        for i in range(3):
            M[i][j] = c[i]

    ncols = len(cols)
    for i in range(3):
        best, bestv = None, None
        for j in range(i, ncols):
            v = _pval(M[i][j])
            if v is not None and (bestv is None or v < bestv):
                best, bestv = j, v
        if best is None:
            raise BuildingError("precision exhausted: zero pivot row")
        if best != i:
            ci, cb = col(i), col(best)
            set_col(i, cb)
            set_col(best, ci)
        e = bestv
        unit = _pshift(M[i][i], -e, N)
        set_col(i, _pscale_col(col(i), _pinv_unit(unit, q, N), q, N))
        for j in range(ncols):
            if j == i:
                continue
            entry = M[i][j]
            if j > i:
                f = _pshift(entry, -e, N)          # full elimination
            else:
                f = _pshift((0,) * e + entry[e:], -e, N)  # reduce mod t^e
            if _pval(f) is not None:
                set_col(j, _col_sub(col(j), f, col(i), q, N))
    return tuple(col(j) for j in range(3))


def _normal_form(cols, fp):
    h = _hnf(cols, fp)
    m = min(v for v in (_pval(p) for c in h for p in c) if v is not None)
    if m:
        h = tuple(tuple(_pshift(p, -m, fp.N) for p in c) for c in h)
        h = _hnf(h, fp)
    return h


def _det3(cols, q, N):
    (a, d, g), (b, e, h), (c, f, i) = cols
    t1 = _pmul(a, _psub(_pmul(e, i, q, N), _pmul(f, h, q, N), q), q, N)
    t2 = _pmul(b, _psub(_pmul(d, i, q, N), _pmul(f, g, q, N), q), q, N)
    t3 = _pmul(c, _psub(_pmul(d, h, q, N), _pmul(e, g, q, N), q), q, N)
    return _padd(_psub(t1, t2, q), t3, q)


def _adjugate(cols, q, N):
    m = [[cols[j][i] for j in range(3)] for i in range(3)]

    def cof(i, j):
        r = [x for x in range(3) if x != i]
        c = [x for x in range(3) if x != j]
        v = _psub(_pmul(m[r[0]][c[0]], m[r[1]][c[1]], q, N),
                  _pmul(m[r[0]][c[1]], m[r[1]][c[0]], q, N), q)
        return v if (i + j) % 2 == 0 else _pneg(v, q)

    # adj[i][j] = cof(j, i); return in column form
    return tuple(tuple(cof(j, i) for i in range(3)) for j in range(3))


def _matmul(A, B, q, N):
    """Column-form 3x3 product A.B."""
    out = []
    for j in range(3):
        col = []
        for i in range(3):
            s = _pzero(N)
            for k in range(3):
                s = _padd(s, _pmul(A[k][i], B[j][k], q, N), q)
            col.append(s)
        out.append(tuple(col))
    return tuple(out)


def _minor_valuations(C, q, N):
    """(d1, d2, d3): minimum valuations of 1x1, 2x2 minors and of det."""
    vals1 = [_pval(p) for c in C for p in c]
    vals1 = [v for v in vals1 if v is not None]
    if not vals1:
        raise BuildingError("precision exhausted: zero matrix")
    d1 = min(vals1)
    m = [[C[j][i] for j in range(3)] for i in range(3)]
    d2 = None
    for r0 in range(3):
        for r1 in range(r0 + 1, 3):
            for c0 in range(3):
                for c1 in range(c0 + 1, 3):
                    v = _pval(_psub(_pmul(m[r0][c0], m[r1][c1], q, N),
                                    _pmul(m[r0][c1], m[r1][c0], q, N), q))
                    if v is not None and (d2 is None or v < d2):
                        d2 = v
    d3 = _pval(_det3(C, q, N))
    if d2 is None or d3 is None:
        raise BuildingError("precision exhausted in minor valuations")
    return d1, d2, d3


def _pair_divisors(A, B, fp):
    """Exponents (0 = e1 <= e2 <= e3) of the invariant factors comparing
    the lattices spanned by columns A and B."""
    q, N = fp.q, fp.N
    C = _matmul(_adjugate(A, q, N), B, q, N)
    d1, d2, d3 = _minor_valuations(C, q, N)
    f1, f2, f3 = d1, d2 - d1, d3 - d2
    e = sorted((f1, f2, f3))
    return (0, e[1] - e[0], e[2] - e[0])


def lattice_distance(L, Lp):
    """The dominant-weight distance d(L, L') from elementary divisors."""
    e1, e2, e3 = _pair_divisors(L.cols, Lp.cols, L.fp)
    return (e3 - e2, e2 - e1)


# ----------------------------------------------------------------------
# neighbors


def _proj_plane(q):
    """Representatives of P^2(F_q), first nonzero coordinate 1."""
    pts = [(1, b, c) for b in range(q) for c in range(q)]
    pts += [(0, 1, c) for c in range(q)]
    pts.append((0, 0, 1))
    return pts


_NBR_CACHE = {}


def neighbors(L, color, fp=None):
    """All classes at distance exactly `color` (w1 or w2) from L."""
    fp = fp or L.fp
    key = (L.cols, color, fp.q, fp.N)
    hit = _NBR_CACHE.get(key)
    if hit is not None:
        return hit
    if color not in (W1, W2):
        raise BuildingError("neighbor color must be minuscule")
    q, N = fp.q, fp.N
    v = list(L.cols)
    out = []
    for rep in _proj_plane(q):
        p = next(i for i in range(3) if rep[i])
        if color == W1:
            # kernel of the functional rep on L/tL
            inv = pow(rep[p], q - 2, q)
            cols = []
            for j in range(3):
                if j == p:
                    cols.append(tuple(_pshift(x, 1, N) for x in v[p]))
                else:
                    f = (rep[j] * inv) % q
                    fpoly = (f,) + (0,) * (N - 1)
                    cols.append(_col_sub(v[j], fpoly, v[p], q, N))
        else:
            # span of one vector of L/tL plus t.L
            u = tuple(_pzero(N) for _ in range(3))
            for j in range(3):
                if rep[j]:
                    fpoly = (rep[j],) + (0,) * (N - 1)
                    u = tuple(_padd(x, _pmul(fpoly, y, q, N), q)
                              for x, y in zip(u, v[j]))
            cols = [u] + [tuple(_pshift(x, 1, N) for x in v[j])
                          for j in range(3) if j != p]
        out.append(LatticeClass(fp, tuple(cols)))
    _NBR_CACHE[key] = out
    return out


# ----------------------------------------------------------------------
# linkages and configuration counting


class Linkage:
    """A based graph with minuscule edge labels: edge (u, v, lam) demands
    d(f(u), f(v)) = lam.  Vertices may be pre-pinned via `fixed`."""

    def __init__(self, vertices, base, edges, fixed=None):
        self.vertices = list(vertices)
        self.base = base
        self.edges = [(u, v, lam) for u, v, lam in edges]
        self.fixed = dict(fixed or {})
        vs = set(self.vertices)
        if base not in vs:
            raise BuildingError("base vertex missing from linkage")
        for u, v, lam in self.edges:
            if u not in vs or v not in vs:
                raise BuildingError("edge endpoint missing from linkage")
            if lam not in (W1, W2):
                raise BuildingError("edge labels must be minuscule")

    def labels(self):
        return [lam for _u, _v, lam in self.edges]


def edge_linkage(label):
    return Linkage([0, 1], 0, [(0, 1, label)])


def polygon_linkage(signature):
    n = len(signature)
    return Linkage(range(n), 0,
                   [(k, (k + 1) % n, signature[k]) for k in range(n)])


def diskoid_linkage(D):
    """The 1-skeleton of a diskoid as a linkage (edge u -> v labelled w1
    means d(f(u), f(v)) = w1)."""
    edges = [(u, v, lam) for _eid, (u, v, lam) in sorted(D.edges.items())]
    return Linkage(D.names, D.base, edges)


class ConfigCount:
    """The result of one exact configuration count."""

    __slots__ = ("linkage", "fp", "count")

    def __init__(self, linkage, fp, count):
        self.linkage = linkage
        self.fp = fp
        self.count = count

    def __repr__(self):
        return "<ConfigCount q=%d: %d>" % (self.fp.q, self.count)


_NBRSET_CACHE = {}


def _nbr_set(L, color, fp):
    key = (L.cols, color, fp.q, fp.N)
    hit = _NBRSET_CACHE.get(key)
    if hit is None:
        hit = frozenset(neighbors(L, color, fp))
        _NBRSET_CACHE[key] = hit
    return hit


def _enumerate(linkage, fp, visit=None, rng=None):
    """Count (or visit) all label-preserving maps to the building with
    the base at the standard lattice.  The search assigns the vertex with
    the most already-assigned neighbors next (candidates generated from
    one neighbor's sphere, verified by membership in the others'), which
    is a spanning-tree DFS with non-tree-edge distance verification;
    `rng` only shuffles tie-breaks, the result is schedule-independent.

    When the very first free vertex hangs off the base alone, the base
    stabilizer acts transitively on its sphere of candidates, so each
    candidate heads an isomorphic subtree: one representative is explored
    and the count carries the multiplicity.  Visits receive that
    multiplicity; distances from the base are stabilizer-invariant."""
    nbrs = {v: [] for v in linkage.vertices}
    for u, v, lam in linkage.edges:
        nbrs[u].append((v, lam))
        nbrs[v].append((u, dual(lam)))
    base = base_class(fp)
    assign = {linkage.base: base}
    for v, cls in linkage.fixed.items():
        cur = assign.get(v)
        if cur is not None and cur != cls:
            raise BuildingError("fixed assignment clashes at %r" % (v,))
        assign[v] = cls
    for u, v, lam in linkage.edges:
        if u in assign and v in assign:
            if lattice_distance(assign[u], assign[v]) != lam:
                return 0
    order = list(linkage.vertices)
    if rng is not None:
        rng.shuffle(order)
    todo = [v for v in order if v not in assign]
    if len(assign) + len(todo) != len(linkage.vertices):
        raise BuildingError("duplicate vertices in linkage")
    count = 0

    def rec(todo, assign, mult):
        nonlocal count
        if not todo:
            count += mult
            if visit is not None:
                visit(dict(assign), mult)
            return
        best_i, best_n = None, -1
        for i, v in enumerate(todo):
            n = sum(1 for u, _lam in nbrs[v] if u in assign)
            if n > best_n:
                best_i, best_n = i, n
        if best_n == 0:
            raise BuildingError("linkage is not connected to the base")
        v = todo[best_i]
        rest = todo[:best_i] + todo[best_i + 1:]
        anchors = [(u, lam) for u, lam in nbrs[v] if u in assign]
        u0, lam0 = anchors[0]
        cands = neighbors(assign[u0], dual(lam0), fp)
        if len(anchors) > 1:
            sets = [_nbr_set(assign[u], dual(lam), fp)
                    for u, lam in anchors[1:]]
            cands = [c for c in cands if all(c in s for s in sets)]
        symmetric = (len(assign) == 1 and not linkage.fixed
                     and len(anchors) == 1 and assign[u0] == base)
        if symmetric and cands:
            assign[v] = cands[0]
            rec(rest, assign, mult * len(cands))
            del assign[v]
        else:
            for cand in cands:
                assign[v] = cand
                rec(rest, assign, mult)
                del assign[v]

    rec(todo, assign, 1)
    return count


def count_configurations(linkage, fp=None, rng=None):
    """Exact number of based label-preserving maps of the linkage."""
    if fp is None:
        fp = FieldParam(2, auto_precision(linkage.labels()))
    return ConfigCount(linkage, fp, _enumerate(linkage, fp, rng=rng))


def count_fibre(D, boundary_config, fp):
    """Number of interior-vertex extensions of a boundary configuration
    of the diskoid D (boundary_config maps D's boundary vertices, and
    the base, to lattice classes)."""
    cfg = dict(boundary_config)
    cfg.setdefault(D.base, base_class(fp))
    if cfg[D.base] != base_class(fp):
        raise BuildingError("the base must map to the standard lattice")
    for v in D.boundary:
        if v not in cfg:
            raise BuildingError("boundary vertex %r not assigned" % (v,))
    link = diskoid_linkage(D)
    for u, v, lam in link.edges:
        if u in cfg and v in cfg and lattice_distance(cfg[u], cfg[v]) != lam:
            raise BuildingError("inconsistent boundary configuration")
    link.fixed = cfg
    return _enumerate(link, fp)


def satake_partition(signature, fp):
    """Bucket the points of F(signature)(F_q) by their distance vectors
    from the base; nonzero buckets are keyed exactly by minuscule paths
    (in the same ((0,0), mu_1, ..., (0,0)) format as minuscule_paths)."""
    link = polygon_linkage(signature)
    n = len(signature)
    base = base_class(fp)
    buckets = {}

    def visit(assign, mult):
        key = tuple([ZERO] + [lattice_distance(base, assign[k])
                              for k in range(1, n)] + [ZERO])
        buckets[key] = buckets.get(key, 0) + mult

    _enumerate(link, fp, visit=visit)
    return buckets


# ----------------------------------------------------------------------
# stratum sampling

def sample_polygon_config(signature, target_vector, fp, rng, max_tries=2000):
    """A uniform-ish random point of F(signature)(F_q) whose distance
    vector from the base equals target_vector (a minuscule path)."""
    n = len(signature)
    base = base_class(fp)
    tv = tuple(target_vector)
    if len(tv) != n + 1 or tv[0] != ZERO or tv[-1] != ZERO:
        raise BuildingError("target vector must be a closed path of "
                            "length %d" % (n + 1,))
    for _ in range(max_tries):
        cfg = {0: base}
        ok = True
        for k in range(n - 1):
            cands = [x for x in neighbors(cfg[k], signature[k], fp)
                     if lattice_distance(base, x) == tv[k + 1]]
            if not cands:
                ok = False
                break
            cfg[k + 1] = cands[rng.randrange(len(cands))]
        if ok and lattice_distance(cfg[n - 1], base) == signature[n - 1]:
            return cfg
    raise BuildingError("could not sample the requested stratum")


# ----------------------------------------------------------------------
# counting-polynomial interpolation and Euler estimates


def _lagrange_value(points, x):
    """Exact Lagrange interpolation value at x from (node, value) pairs."""
    total = Fraction(0)
    for i, (xi, yi) in enumerate(points):
        term = Fraction(yi)
        for j, (xj, _yj) in enumerate(points):
            if i != j:
                term *= Fraction(x - xj, xi - xj)
        total += term
    return total


def _next_primes(after, k):
    out = []
    n = after + 1
    while len(out) < k:
        if _is_prime(n):
            out.append(n)
        n += 1
    return out


def euler_estimate(D, primes=(2, 3, 5, 7, 11), confirm=3, max_nodes=14,
                   counts_out=None):
    """Interpolate the configuration count of the diskoid's 1-skeleton as
    a polynomial in q, starting from the given primes, and return its
    value at q = 1 (the Euler characteristic of the configuration space,
    assuming polynomiality of the count).

    The interpolant is accepted only once it predicts the counts at the
    next `confirm` primes exactly; otherwise the smallest mispredicted
    prime is added as an interpolation node and the check repeats (one
    prime per round, to keep the largest prime that must be counted as
    small as possible).  If no polynomial with fewer than max_nodes
    nodes fits, a BuildingError is raised: that is a reportable finding,
    not an extrapolation."""
    link = diskoid_linkage(D)
    labels = link.labels()
    cache = {}

    def count_at(p):
        if p not in cache:
            fp = FieldParam(p, auto_precision(labels))
            cache[p] = _enumerate(link, fp)
        return cache[p]

    nodes = sorted(set(primes))
    while True:
        pts = [(p, count_at(p)) for p in nodes]
        bad = None
        for p in _next_primes(max(nodes), confirm):
            if _lagrange_value(pts, p) != count_at(p):
                bad = p
                break
        if counts_out is not None:
            del counts_out[:]
            counts_out.extend(sorted(cache.items()))
        if bad is None:
            val = _lagrange_value(pts, 1)
            if val.denominator != 1:
                raise BuildingError(
                    "interpolated value at q=1 is not an integer")
            return int(val)
        if len(nodes) + 1 > max_nodes:
            raise BuildingError(
                "count is not polynomial of degree < %d: at q=%d "
                "interpolation from %r fails" % (max_nodes, bad, nodes))
        nodes = sorted(set(nodes) | {bad})


# ----------------------------------------------------------------------
# the hexagon incidence problem


class _Field:
    """Exact field operations for Fraction (p=None) or F_p."""

    def __init__(self, p=None):
        self.p = p

    def of(self, x):
        return x % self.p if self.p else Fraction(x)

    def add(self, a, b):
        return (a + b) % self.p if self.p else a + b

    def sub(self, a, b):
        return (a - b) % self.p if self.p else a - b

    def mul(self, a, b):
        return (a * b) % self.p if self.p else a * b

    def inv(self, a):
        if not a:
            raise ZeroDivisionError
        return pow(a, self.p - 2, self.p) if self.p else 1 / a

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def neg(self, a):
        return (-a) % self.p if self.p else -a

    def is_square_roots(self, a):
        """Roots of x^2 = a in the field (list, possibly empty)."""
        if self.p is None:
            if a < 0:
                return []
            r = _fraction_sqrt(a)
            return [] if r is None else ([0] if a == 0 else [r, -r])
        if a == 0:
            return [0]
        if self.p == 2:
            return [a % 2]
        if pow(a, (self.p - 1) // 2, self.p) != 1:
            return []
        # Tonelli-Shanks (p is small here; brute force is fine)
        for x in range(self.p):
            if (x * x) % self.p == a:
                return [x, (-x) % self.p]
        return []


def _fraction_sqrt(a):
    if a == 0:
        return Fraction(0)
    n, d = a.numerator, a.denominator
    rn, rd = _isqrt_exact(n), _isqrt_exact(d)
    if rn is None or rd is None:
        return None
    return Fraction(rn, rd)


def _isqrt_exact(n):
    r = int(n ** 0.5)
    for c in (r - 1, r, r + 1, r + 2):
        if c >= 0 and c * c == n:
            return c
    import math
    c = math.isqrt(n)
    return c if c * c == n else None


def _cross(a, b, F):
    return (F.sub(F.mul(a[1], b[2]), F.mul(a[2], b[1])),
            F.sub(F.mul(a[2], b[0]), F.mul(a[0], b[2])),
            F.sub(F.mul(a[0], b[1]), F.mul(a[1], b[0])))


def _dot(a, b, F):
    s = F.of(0)
    for x, y in zip(a, b):
        s = F.add(s, F.mul(x, y))
    return s


def _solve3(cols, rhs, F):
    """Solve M x = rhs for 3x3 M given by columns; None if singular."""
    det = _dot(cols[0], _cross(cols[1], cols[2], F), F)
    if not det:
        return None
    sol = []
    for j in range(3):
        m = list(cols)
        m[j] = rhs
        sol.append(F.div(_dot(m[0], _cross(m[1], m[2], F), F), det))
    return tuple(sol)


def hexagon_genericity(lines, points, field=None):
    """The genericity condition: the three points are not collinear, the
    three lines are not concurrent (both required, the strict reading),
    the barycentric normalization exists, and the six coordinates that
    enter the incidence equations (p11, p12, p22, p23, p33, p31) are all
    nonzero."""
    F = field or _Field()
    lines = [tuple(F.of(x) for x in l) for l in lines]
    points = [tuple(F.of(x) for x in p) for p in points]
    if not _dot(points[0], _cross(points[1], points[2], F), F):
        return False  # collinear points
    e = [_cross(lines[0], lines[1], F), _cross(lines[1], lines[2], F),
         _cross(lines[2], lines[0], F)]
    if not _dot(e[0], _cross(e[1], e[2], F), F):
        return False  # concurrent lines
    rows = []
    for p in points:
        bary = _solve3(e, p, F)
        if bary is None:
            return False
        if not F.add(F.add(bary[0], bary[1]), bary[2]):
            return False  # no affine normalization available
        rows.append(bary)
    used = (rows[0][0], rows[0][1], rows[1][1], rows[1][2],
            rows[2][2], rows[2][0])
    return all(used)


def _barycentric(lines, points, F):
    """Affine barycentric coordinates p_ij (rows: points; frame: the
    pairwise line intersections e_1 = l1^l2, e_2 = l2^l3, e_3 = l3^l1,
    normalized to sum to one)."""
    e = [_cross(lines[0], lines[1], F), _cross(lines[1], lines[2], F),
         _cross(lines[2], lines[0], F)]
    rows = []
    for p in points:
        bary = _solve3(e, p, F)
        if bary is None:
            raise BuildingError("degenerate sample: concurrent lines")
        s = F.add(F.add(bary[0], bary[1]), bary[2])
        if not s:
            raise BuildingError("degenerate sample: point on the frame's "
                                "vanishing line")
        rows.append(tuple(F.div(b, s) for b in bary))
    return rows


def solve_hexagon_incidence(lines, points, field=None, return_roots=False):
    """Number of solutions, over the algebraic closure, of the hexagon
    incidence system: points p'_i on the lines l_i and lines l'_i through
    p_i, p'_{i-1}, p'_i.  Generic samples give exactly 2.

    With return_roots=True also returns the t_1-roots that lie in the
    ground field itself (these index the rational solutions)."""
    F = field or _Field()
    lines = [tuple(F.of(x) for x in l) for l in lines]
    points = [tuple(F.of(x) for x in p) for p in points]
    if not hexagon_genericity(lines, points, F):
        raise BuildingError("degenerate sample: genericity fails")
    P = _barycentric(lines, points, F)
    p11, p12 = P[0][0], P[0][1]
    p22, p23 = P[1][1], P[1][2]
    p33, p31 = P[2][2], P[2][0]
    # t1 = p11 / (1 - p12 / (1 - p33 / (1 - p31 / (1 - p22 / (1 - p23 / (1 - t1))))))
    # as a Mobius transform in t1, composed from the inside out
    one, zero = F.of(1), F.of(0)
    mat = (one, zero, zero, one)  # identity; mat = (a, b, c, d) ~ (a t + b)/(c t + d)

    def compose(m2, m1):
        a2, b2, c2, d2 = m2
        a1, b1, c1, d1 = m1
        return (F.add(F.mul(a2, a1), F.mul(b2, c1)),
                F.add(F.mul(a2, b1), F.mul(b2, d1)),
                F.add(F.mul(c2, a1), F.mul(d2, c1)),
                F.add(F.mul(c2, b1), F.mul(d2, d1)))

    # innermost first: u -> 1 - p/(1 - u) = ((1-p) - u) / (1 - u)
    for p in (p23, p22, p31, p33, p12):
        step = (F.neg(one), F.sub(one, p), F.neg(one), one)
        mat = compose(step, mat)
    # outermost: t1 = p11 / ((a t + b)/(c t + d)) = (p11 c t + p11 d)/(a t + b)
    a, b, c, d = mat
    A, B, C, D = F.mul(p11, c), F.mul(p11, d), a, b
    # fixed points: C t^2 + (D - A) t - B = 0
    qa, qb, qc = C, F.sub(D, A), F.neg(B)
    if not qa:
        count = 1 if qb else 0
        roots = [F.div(F.neg(qc), qb)] if qb else []
    else:
        disc = F.sub(F.mul(qb, qb), F.mul(F.of(4), F.mul(qa, qc)))
        if F.p == 2:
            # over F_2 discriminants degenerate; count closure roots by
            # Artin-Schreier form and field roots by direct scan
            roots = [t for t in (0, 1)
                     if (qa * t * t + qb * t + qc) % 2 == 0]
            count = 2 if qb else 1
        else:
            sq = F.is_square_roots(disc)
            count = 1 if not disc else 2
            inv2a = F.inv(F.mul(F.of(2), qa))
            roots = [F.mul(F.sub(r, qb), inv2a) for r in sq]
    if return_roots:
        return count, roots
    return count


def hexagon_solution_points(lines, points, t1, field=None):
    """The full solution (p'_i, l'_i) determined by a ground-field root
    t1, in projective coordinates; raises on a non-solution."""
    F = field or _Field()
    lines = [tuple(F.of(x) for x in l) for l in lines]
    points = [tuple(F.of(x) for x in p) for p in points]
    P = _barycentric(lines, points, F)
    one = F.of(1)
    # chase the chain of equations to recover s_i and t_i
    p11, p12 = P[0][0], P[0][1]
    p22, p23 = P[1][1], P[1][2]
    p33, p31 = P[2][2], P[2][0]
    t = {1: F.of(t1)}
    s1 = F.sub(one, F.div(p11, t[1]))
    s2 = F.div(p23, F.sub(one, t[1]))
    t[2] = F.div(p22, F.sub(one, s2))
    s3 = F.div(p31, F.sub(one, t[2]))
    t[3] = F.div(p33, F.sub(one, s3))
    if F.mul(s1, F.sub(one, t[3])) != p12:
        raise BuildingError("t1 is not a root of the incidence system")
    e = [_cross(lines[0], lines[1], F), _cross(lines[1], lines[2], F),
         _cross(lines[2], lines[0], F)]

    def combo(coeffs):
        out = [F.of(0)] * 3
        for cf, vec in zip(coeffs, e):
            for i in range(3):
                out[i] = F.add(out[i], F.mul(cf, vec[i]))
        return tuple(out)

    pp = [combo((t[1], F.of(0), F.sub(one, t[1]))),
          combo((F.sub(one, t[2]), t[2], F.of(0))),
          combo((F.of(0), F.sub(one, t[3]), t[3]))]
    lp = [_cross(points[0], pp[0], F),
          _cross(points[1], pp[1], F),
          _cross(points[2], pp[2], F)]
    # l'_i must also pass through p'_{i-1}
    for i in range(3):
        if _dot(lp[i], pp[(i - 1) % 3], F):
            raise BuildingError("recovered lines miss p'_{i-1}")
    return pp, lp


# ----------------------------------------------------------------------
# bridges between the projective plane and the building


def functional_class(fp, coeffs):
    """The w1-neighbor of the base cut out by the functional with the
    given coordinates: the sublattice { x : coeffs . x = 0 mod t }."""
    q, N = fp.q, fp.N
    rep = tuple(int(c) % q for c in coeffs)
    if not any(rep):
        raise BuildingError("zero functional")
    p = next(i for i in range(3) if rep[i])
    inv = pow(rep[p], q - 2, q)
    v = _identity_cols(fp)
    cols = []
    for j in range(3):
        if j == p:
            cols.append(tuple(_pshift(x, 1, N) for x in v[p]))
        else:
            f = (rep[j] * inv) % q
            fpoly = (f,) + (0,) * (N - 1)
            cols.append(_col_sub(v[j], fpoly, v[p], q, N))
    return LatticeClass(fp, tuple(cols))


def vector_class(fp, coords):
    """The w2-neighbor of the base spanned by the given reduction vector
    together with t.O^3."""
    q, N = fp.q, fp.N
    rep = tuple(int(c) % q for c in coords)
    if not any(rep):
        raise BuildingError("zero vector")
    p = next(i for i in range(3) if rep[i])
    u = tuple((rep[i],) + (0,) * (N - 1) for i in range(3))
    v = _identity_cols(fp)
    cols = [u] + [tuple(_pshift(x, 1, N) for x in v[j])
                  for j in range(3) if j != p]
    return LatticeClass(fp, tuple(cols))


def random_class(fp, rng, steps=3):
    """A random class reached by a short minuscule walk from the base."""
    cur = base_class(fp)
    for _ in range(steps):
        color = W1 if rng.random() < 0.5 else W2
        opts = neighbors(cur, color, fp)
        cur = opts[rng.randrange(len(opts))]
    return cur

"""Ground-truth tensor evaluation of webs and invariant dimensions.

Webs are read as epsilon/delta networks over the defining representation
(dimension 3, or 2 in A1 mode): all-out vertices carry the Levi-Civita
epsilon, all-in vertices its dual copy, boundary-to-boundary edges carry
identity pairings (the antisymmetric form in A1), and free circles
multiply by the dimension.  All arithmetic is exact (Python integers via
object-dtype arrays); the resulting closed-web scalars equal the skein
evaluation at q = -1 with no correction factor.

The invariant dimension of a boundary signature is computed by exact or
modular null-space calculation for the raising operators restricted to
the weight-zero subspace: a weight-zero vector killed by e1 and e2 is a
sum of weight-zero highest-weight vectors, hence invariant, so this
kernel is exactly the invariant space.
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np

from .weights import W1, W2
from .webs import WebError

_EPS3 = np.zeros((3, 3, 3), dtype=object)
for _i, _j, _k, _s in ((0, 1, 2, 1), (1, 2, 0, 1), (2, 0, 1, 1),
                       (0, 2, 1, -1), (2, 1, 0, -1), (1, 0, 2, -1)):
    _EPS3[_i, _j, _k] = _s
_ID3 = np.eye(3, dtype=object)
_EPS2 = np.array([[0, 1], [-1, 0]], dtype=object)

_PRIMES = (2147483629, 2147483587, 2147483563)


def _dim(mode):
    return 2 if mode == "a1" else 3


# ----------------------------------------------------------------------
# network contraction

def _build_network(w):
    """Nodes as [tensor, axis keys]; axis keys are darts at the node."""
    nodes = []
    rank = w.canonical_rank()
    bset = set(w.boundary)
    for i, tri in enumerate(w.vertices):
        # all-out vertices are read counterclockwise, all-in ones
        # clockwise (the reflected reading of the dual copy of epsilon);
        # this orientation rule makes closed values match the skein at
        # q = -1 with no extra signs.
        if w.vertex_is_out(i):
            nodes.append([_EPS3, list(tri)])
        else:
            nodes.append([_EPS3, list(reversed(tri))])
    done = set()
    for d in sorted(w.theta, key=lambda x: rank[x]):
        e = w.theta[d]
        if d in done:
            continue
        done.add(d)
        done.add(e)
        if d in bset and e in bset:
            if w.mode == "a1":
                i, j = sorted((d, e), key=lambda x: w.boundary.index(x))
                nodes.append([_EPS2, [i, j]])
            else:
                nodes.append([_ID3, [d, e]])
    pairs = []
    seen = set()
    for d in w.theta:
        e = w.theta[d]
        if d in seen or e in seen:
            continue
        seen.add(d)
        seen.add(e)
        if d not in bset and e not in bset:
            pairs.append((d, e))
    return nodes, pairs


def _self_contract(tensor, axes, pairs):
    """Trace out any contraction pairs living on a single node."""
    changed = True
    while changed:
        changed = False
        for (a, b) in list(pairs):
            if a in axes and b in axes:
                i, j = axes.index(a), axes.index(b)
                tensor = np.trace(tensor, axis1=i, axis2=j)
                axes = [k for k in axes if k not in (a, b)]
                pairs.remove((a, b))
                changed = True
                break
    return tensor, axes


def _contract(w):
    """Contract all interior pairings; returns (tensor, open axis keys)."""
    nodes, pairs = _build_network(w)
    scalar = _dim(w.mode) ** w.circles
    if not nodes:
        return np.array(scalar, dtype=object), []
    # tidy self-contractions first
    nodes = [list(_self_contract(t, a, pairs)) for t, a in nodes]
    while pairs:
        # pick the contraction whose merged node is smallest
        best = None
        for (a, b) in pairs:
            ia = next(i for i, (_t, ax) in enumerate(nodes) if a in ax)
            ib = next(i for i, (_t, ax) in enumerate(nodes) if b in ax)
            shared = [(x, y) for (x, y) in pairs
                      if ((x in nodes[ia][1] and y in nodes[ib][1])
                          or (y in nodes[ia][1] and x in nodes[ib][1]))]
            size = (nodes[ia][0].ndim + nodes[ib][0].ndim - 2 * len(shared))
            if best is None or size < best[0]:
                best = (size, ia, ib, shared)
        _sz, ia, ib, shared = best
        ta, axa = nodes[ia]
        tb, axb = nodes[ib]
        ax1, ax2 = [], []
        for (x, y) in shared:
            if x in axa:
                ax1.append(axa.index(x))
                ax2.append(axb.index(y))
            else:
                ax1.append(axa.index(y))
                ax2.append(axb.index(x))
            pairs.remove((x, y))
        t = np.tensordot(ta, tb, axes=(ax1, ax2))
        ax = ([k for i, k in enumerate(axa) if i not in ax1]
              + [k for i, k in enumerate(axb) if i not in ax2])
        for i in sorted((ia, ib), reverse=True):
            del nodes[i]
        t, ax = _self_contract(t, ax, pairs)
        nodes.append([t, ax])
    # tensor the disconnected remainder together
    t, ax = nodes[0]
    for t2, ax2 in nodes[1:]:
        t = np.tensordot(t, t2, axes=0)
        ax = ax + ax2
    if scalar != 1:
        t = t * scalar
    return t, ax


def contract_closed(w):
    """Exact integer value of a closed web's tensor network."""
    if w.boundary:
        raise WebError("contract_closed requires an empty boundary")
    t, ax = _contract(w)
    if ax:
        raise WebError("contraction left open axes on a closed web")
    return int(t.item() if hasattr(t, "item") else t)


def web_vector(w):
    """The invariant vector of a web: an exact integer array with one
    axis per boundary leg (w1 legs carry the space, w2 legs its dual)."""
    t, ax = _contract(w)
    if not w.boundary:
        return t
    keys = []
    bset = set(w.boundary)
    for b in w.boundary:
        e = w.theta[b]
        keys.append(b if e in bset else e)
    order = [ax.index(k) for k in keys]
    return np.transpose(t, order)


# ----------------------------------------------------------------------
# Chevalley action

_WT_V3 = ((1, 0), (-1, 1), (0, -1))
_WT_V2 = ((1, 0), (-1, 0))


def _leg_weights(lam, mode):
    if mode == "a1":
        return _WT_V2
    if lam == W1:
        return _WT_V3
    return tuple((-a, -b) for (a, b) in _WT_V3)


def _e_moves(lam, mode, which):
    """(src index, dst index, coefficient) for a raising operator on one
    leg: e1 or e2 on V, or their negative-transpose action on V*."""
    if mode == "a1":
        return ((1, 0, 1),) if which == 1 else ()
    if lam == W1:
        return ((1, 0, 1),) if which == 1 else ((2, 1, 1),)
    return ((0, 1, -1),) if which == 1 else ((1, 2, -1),)


def apply_raising(vec, signature, which, mode="a2"):
    """e1 (which=1) or e2 (which=2) applied to an exact tensor."""
    out = np.zeros_like(vec)
    for leg, lam in enumerate(signature):
        for src, dst, coeff in _e_moves(lam, mode, which):
            sl_src = [slice(None)] * len(signature)
            sl_dst = [slice(None)] * len(signature)
            sl_src[leg] = src
            sl_dst[leg] = dst
            out[tuple(sl_dst)] += coeff * vec[tuple(sl_src)]
    return out


def in_invariant_kernel(vec, signature, mode="a2"):
    """True iff the exact tensor is killed by both raising operators and
    (A2) by weight: used to certify oracle vectors."""
    for which in ((1,) if mode == "a1" else (1, 2)):
        if np.any(apply_raising(vec, signature, which, mode)):
            return False
    return True


# ----------------------------------------------------------------------
# invariant dimension via null spaces

def _tuples_of_weight(signature, mode, target):
    """All index tuples whose total weight is target."""
    legw = [_leg_weights(lam, mode) for lam in signature]
    n = len(signature)
    # remaining-range pruning per coordinate
    lo = [(0, 0)] * (n + 1)
    hi = [(0, 0)] * (n + 1)
    for i in range(n - 1, -1, -1):
        ws = legw[i]
        lo[i] = (lo[i+1][0] + min(w[0] for w in ws),
                 lo[i+1][1] + min(w[1] for w in ws))
        hi[i] = (hi[i+1][0] + max(w[0] for w in ws),
                 hi[i+1][1] + max(w[1] for w in ws))
    out = []
    idx = [0] * n

    def rec(i, a, b):
        if i == n:
            if (a, b) == target:
                out.append(tuple(idx))
            return
        need_a, need_b = target[0] - a, target[1] - b
        if not (lo[i][0] <= need_a <= hi[i][0] and lo[i][1] <= need_b <= hi[i][1]):
            return
        for j, (wa, wb) in enumerate(legw[i]):
            idx[i] = j
            rec(i + 1, a + wa, b + wb)

    rec(0, 0, 0)
    return out


def _rank_mod(M, p):
    M = np.array(M, dtype=np.int64) % p
    r, c = M.shape
    rank = 0
    row = 0
    for col in range(c):
        if row >= r:
            break
        piv = None
        for i in range(row, r):
            if M[i, col] % p:
                piv = i
                break
        if piv is None:
            continue
        M[[row, piv]] = M[[piv, row]]
        inv = pow(int(M[row, col]), p - 2, p)
        M[row] = (M[row] * inv) % p
        mask = M[row + 1:, col] != 0
        if mask.any():
            M[row + 1:][mask] = (M[row + 1:][mask]
                                 - np.outer(M[row + 1:, col][mask], M[row])) % p
        row += 1
        rank += 1
    return rank


def _rank_exact(M):
    M = [[Fraction(x) for x in row] for row in M]
    r = len(M)
    c = len(M[0]) if r else 0
    rank = 0
    row = 0
    for col in range(c):
        if row >= r:
            break
        piv = next((i for i in range(row, r) if M[i][col]), None)
        if piv is None:
            continue
        M[row], M[piv] = M[piv], M[row]
        pv = M[row][col]
        for i in range(row + 1, r):
            f = M[i][col]
            if f:
                ratio = f / pv
                M[i] = [a - ratio * b for a, b in zip(M[i], M[row])]
        row += 1
        rank += 1
    return rank


_KERNEL_CACHE = {}


def invariant_kernel_dim(signature, mode="a2", exact=None):
    """dim of the invariant subspace of the boundary tensor product.

    Permuting tensor factors is an equivariant isomorphism, so the
    answer depends only on the multiset of leg labels; computations are
    cached on the sorted signature.  Ranks are exact rational for small
    weight-zero spaces and modular (two large primes, required to agree)
    beyond that unless ``exact`` forces a method.
    """
    signature = tuple(signature)
    key = (mode, tuple(sorted(signature)))
    if exact is None and key in _KERNEL_CACHE:
        return _KERNEL_CACHE[key]
    sig = key[1]
    zero = _tuples_of_weight(sig, mode, (0, 0))
    if not zero:
        _KERNEL_CACHE[key] = 0
        return 0
    col = {t: i for i, t in enumerate(zero)}
    rows = []
    whiches = (1,) if mode == "a1" else (1, 2)
    for which in whiches:
        # target space: weight alpha_which
        alpha = ((2, 0) if mode == "a1" else ((2, -1) if which == 1 else (-1, 2)))
        targets = _tuples_of_weight(sig, mode, alpha)
        tix = {t: i for i, t in enumerate(targets)}
        block = [[0] * len(zero) for _ in targets]
        for t in zero:
            j = col[t]
            for leg, lam in enumerate(sig):
                for src, dst, coeff in _e_moves(lam, mode, which):
                    if t[leg] == src:
                        t2 = t[:leg] + (dst,) + t[leg + 1:]
                        block[tix[t2]][j] += coeff
        rows.extend(block)
    if not rows:
        dim = len(zero)
    elif exact is True or (exact is None and len(zero) <= 200):
        dim = len(zero) - _rank_exact(rows)
    else:
        r1 = _rank_mod(rows, _PRIMES[0])
        r2 = _rank_mod(rows, _PRIMES[1])
        if r1 != r2:
            r3 = _rank_mod(rows, _PRIMES[2])
            if r3 != max(r1, r2):
                raise WebError("modular ranks disagree; use exact=True")
            r1 = max(r1, r2)
        dim = len(zero) - r1
    _KERNEL_CACHE[key] = dim
    return dim


def vectors_rank(vectors, exact=True):
    """Exact rank of a family of integer web vectors (flattened)."""
    M = [np.asarray(v, dtype=object).reshape(-1).tolist() for v in vectors]
    if not M:
        return 0
    if exact:
        return _rank_exact(M)
    return _rank_mod([[int(x) % _PRIMES[0] for x in row] for row in M],
                     _PRIMES[0])

"""Exact arithmetic for the A1/A2 weight lattices.

Weights are stored as integer coordinate pairs ``(a, b)`` in the
fundamental-weight basis (a*w1 + b*w2).  A1 weights use the same pairs
with b == 0 throughout, so one representation serves both modes.

The simple roots in this basis are

    A2:  alpha1 = (2, -1),  alpha2 = (-1, 2)
    A1:  alpha1 = (2, 0)

and dominance ``mu <= lam`` means lam - mu is a non-negative *integer*
combination of simple roots.
"""

from __future__ import annotations

from fractions import Fraction

ZERO = (0, 0)
W1 = (1, 0)
W2 = (0, 1)

# Weyl-orbit enumeration order: highest weight first, then by length of
# the simple-reflection word producing the element.
_ORBITS_A2 = {
    W1: ((1, 0), (-1, 1), (0, -1)),
    W2: ((0, 1), (1, -1), (-1, 0)),
}
_ORBITS_A1 = {
    W1: ((1, 0), (-1, 0)),
}


def is_dominant(w):
    return w[0] >= 0 and w[1] >= 0


def is_minuscule(w, mode="a2"):
    if mode == "a1":
        return w in ((0, 0), W1)
    return w in ((0, 0), W1, W2)


def add(u, v):
    return (u[0] + v[0], u[1] + v[1])


def sub(u, v):
    return (u[0] - v[0], u[1] - v[1])


def dual(w, mode="a2"):
    """The highest weight of the dual representation: (a,b) -> (b,a)."""
    if mode == "a1":
        return w
    return (w[1], w[0])


def rho_level(w):
    """Pairing with the dual Weyl vector: <a*w1 + b*w2, rho-check> = a + b."""
    return w[0] + w[1]


def root_coordinates(w, mode="a2"):
    """Express w as (i, j) with w = i*alpha1 + j*alpha2, exactly.

    Returns a pair of Fractions (j is always 0 in A1 mode), or None when
    w is not in the root lattice's rational span with b != 0 in A1 mode.
    """
    a, b = w
    if mode == "a1":
        if b != 0:
            return None
        return (Fraction(a, 2), Fraction(0))
    # invert [[2,-1],[-1,2]]: det 3
    return (Fraction(2 * a + b, 3), Fraction(a + 2 * b, 3))


def dominance_leq(mu, lam, mode="a2"):
    """True iff lam - mu is a non-negative integer combination of simple roots."""
    d = sub(lam, mu)
    rc = root_coordinates(d, mode)
    if rc is None:
        return False
    i, j = rc
    return i.denominator == 1 and j.denominator == 1 and i >= 0 and j >= 0


def dominance_lt(mu, lam, mode="a2"):
    return mu != lam and dominance_leq(mu, lam, mode)


def minuscule_orbit(lam, mode="a2"):
    """The weights of the minuscule representation V(lam), fixed order."""
    table = _ORBITS_A1 if mode == "a1" else _ORBITS_A2
    if lam not in table:
        raise ValueError("not a nonzero minuscule weight: %r" % (lam,))
    return list(table[lam])


def norm2(w):
    """Squared length under the standard A2 inner product, times 3 (integer)."""
    a, b = w
    # Gram matrix of (w1, w2) is (1/3) * [[2,1],[1,2]]
    return 2 * a * a + 2 * a * b + 2 * b * b


def signature_rho_level(sig):
    """d(lambda-vec) = <lambda_1 + ... + lambda_n, rho-check>."""
    return sum(rho_level(w) for w in sig)


def rotate_signature(sig, i):
    """The signature lambda^(i): entries advanced cyclically by i."""
    n = len(sig)
    if n == 0:
        return tuple(sig)
    i %= n
    return tuple(sig[i:]) + tuple(sig[:i])


def dual_reverse_signature(sig, mode="a2"):
    """The signature a web must carry to glue onto one of signature sig.

    Entry j of the result is the dual of entry (-j mod n) of sig, matching
    the reflection used by gluing (base stays at position 0).
    """
    n = len(sig)
    return tuple(dual(sig[(-j) % n], mode) for j in range(n))


def format_weight(w):
    """Render e.g. (1,0) -> "w1", (2,1) -> "2w1+w2", (0,0) -> "0"."""
    a, b = w
    if a == 0 and b == 0:
        return "0"
    parts = []
    for coeff, name in ((a, "w1"), (b, "w2")):
        if coeff == 0:
            continue
        if coeff == 1:
            parts.append(name)
        elif coeff == -1:
            parts.append("-" + name)
        else:
            parts.append("%d%s" % (coeff, name))
    out = parts[0]
    for p in parts[1:]:
        out += p if p.startswith("-") else "+" + p
    return out


def parse_weight(text):
    """Parse weights rendered by format_weight; case-insensitive."""
    s = text.strip().lower().replace(" ", "")
    if s in ("0", "+0", "-0"):
        return ZERO
    a = b = 0
    # split into signed terms
    terms = []
    cur = ""
    for ch in s:
        if ch in "+-" and cur:
            terms.append(cur)
            cur = ch if ch == "-" else ""
        else:
            cur += ch
    if cur:
        terms.append(cur)
    for t in terms:
        if not t or t in ("+", "-"):
            raise ValueError("bad weight syntax: %r" % text)
        sign = 1
        if t[0] == "-":
            sign, t = -1, t[1:]
        elif t[0] == "+":
            t = t[1:]
        if t.endswith("w1"):
            name, coeff = "w1", t[:-2]
        elif t.endswith("w2"):
            name, coeff = "w2", t[:-2]
        else:
            raise ValueError("bad weight term in %r" % text)
        k = sign * (int(coeff) if coeff else 1)
        if name == "w1":
            a += k
        else:
            b += k
    return (a, b)


def parse_signature(text):
    """Parse a comma-separated boundary signature like "w1,w2,w2,w1"."""
    text = text.strip()
    if not text:
        return ()
    return tuple(parse_weight(tok) for tok in text.split(","))


def format_signature(sig):
    return ",".join(format_weight(w) for w in sig)

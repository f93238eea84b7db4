"""Brute-force reference implementations used only by the tests.

Nothing here imports primegraph, so each oracle stays independent of the
code path it checks.
"""

import itertools
from math import gcd

import numpy as np


def trial_factor(n):
    out = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def naive_is_prime(n):
    return n >= 2 and all(n % d for d in range(2, int(n**0.5) + 1))


def spf_sieve(limit):
    spf = np.zeros(limit + 1, dtype=np.int64)
    for i in range(2, limit + 1):
        if spf[i] == 0:
            spf[i::i][spf[i::i] == 0] = i
    return spf


def brute_prime_graph(degrees):
    """(vertices, edges) straight from the definition: uv | some degree."""
    primes = sorted({p for d in degrees for p in trial_factor(d)})
    edges = {(u, v) for u, v in itertools.combinations(primes, 2)
             if any(d % (u * v) == 0 for d in degrees)}
    return primes, edges


def brute_degree_graph(degrees):
    verts = sorted(d for d in set(degrees) if d > 1)
    return verts, {(a, b) for a, b in itertools.combinations(verts, 2) if gcd(a, b) > 1}


def brute_triangles(vertices, edges):
    es = {frozenset(e) for e in edges}
    return [t for t in itertools.combinations(sorted(vertices), 3)
            if all(frozenset(p) in es for p in itertools.combinations(t, 2))]


def brute_palfy(degrees):
    primes = sorted({p for d in degrees for p in trial_factor(d)})
    for t in itertools.combinations(primes, 3):
        if not any(sum(d % p == 0 for p in t) >= 2 for d in degrees):
            return t
    return None


def brute_primitive_divisor(a, n, factorint):
    """Smallest prime of a^n - 1 dividing no a^m - 1, m < n, by explicit division."""
    for p in sorted(factorint(a**n - 1)):
        if all((a**m - 1) % p for m in range(1, n)):
            return p
    return None


def brute_isomorphic(v1, e1, v2, e2):
    if len(v1) != len(v2) or len(e1) != len(e2):
        return False
    s2 = {frozenset(e) for e in e2}
    for perm in itertools.permutations(v2):
        m = dict(zip(v1, perm))
        if all(frozenset((m[u], m[v])) in s2 for u, v in e1):
            return True
    return False

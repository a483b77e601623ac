"""Enumeration helpers used to derive expected values independently of the package.

Groups are products of cyclic groups ``Z/o_1 x ... x Z/o_t`` whose elements
are tuples.  Isomorphism types are read off from element counts only.
"""

from itertools import product


def _primes(n):
    out, p = [], 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        out.append(n)
    return out


def _log(x, p):
    e = 0
    while x > 1:
        assert x % p == 0
        x //= p
        e += 1
    return e


def elements(orders, copies=1):
    return list(product(*[range(o) for o in orders] * copies))


def _scale(x, s, orders):
    return tuple((s * a) % orders[i % len(orders)] for i, a in enumerate(x))


def invariants(counter, size):
    """Prime-power cyclic orders of a finite abelian group of order ``size``.

    ``counter(p, j)`` must return ``|{x : p^j x = 0}|``.
    """
    out = []
    for p in _primes(size):
        e = []
        j = 0
        while True:
            e.append(_log(counter(p, j), p))
            if j and e[-1] == e[-2]:
                break
            j += 1
        at_least = [e[i] - e[i - 1] for i in range(1, len(e))] + [0]
        for j in range(1, len(e)):
            out += [p ** j] * (at_least[j - 1] - at_least[j])
    return sorted(out)


def subgroup_structure(subset, orders):
    subset = list(subset)
    return invariants(lambda p, j: sum(1 for x in subset if not any(_scale(x, p ** j, orders))),
                      len(subset))


def quotient_structure(ambient, subgroup, orders):
    sub = set(subgroup)
    size = len(ambient) // len(sub)
    return invariants(lambda p, j: sum(1 for y in ambient if _scale(y, p ** j, orders) in sub) // len(sub),
                      size)


def map_ker_coker(matrix, orders, cols):
    """Kernel and cokernel types of an integer matrix on ``(prod Z/o)^cols``."""
    rows = len(matrix)
    t = len(orders)

    def apply(x):
        return tuple(sum(matrix[r][c] * x[c * t + i] for c in range(cols)) % orders[i]
                     for r in range(rows) for i in range(t))

    domain = elements(orders, cols)
    image, kernel = set(), []
    for x in domain:
        y = apply(x)
        image.add(y)
        if not any(y):
            kernel.append(x)
    return subgroup_structure(kernel, orders), quotient_structure(elements(orders, rows), image, orders)


def n_torsion_structure(orders, n):
    return subgroup_structure([x for x in elements(orders) if not any(_scale(x, n, orders))], orders)

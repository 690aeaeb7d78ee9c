"""Brute-force reference implementations used to cross-check the library.

Written directly from the order-theoretic definitions with frozensets and
itertools; nothing here shares code with ``infoalg.order``.
"""

from itertools import chain, combinations


def subsets(xs):
    xs = list(xs)
    return [frozenset(c) for c in chain.from_iterable(combinations(xs, k) for k in range(len(xs) + 1))]


def upper_bounds(leq, elems, s):
    return [u for u in elems if all(leq(a, u) for a in s)]


def lub(leq, elems, s):
    ubs = upper_bounds(leq, elems, s)
    least = [u for u in ubs if all(leq(u, v) for v in ubs)]
    return least[0] if least else None


def directed(leq, elems, s):
    if not s:
        return False
    return all(any(leq(a, c) and leq(b, c) for c in s) for a in s for b in s)


def way_below(leq, elems, a, b):
    for s in subsets(elems):
        if not directed(leq, elems, s):
            continue
        m = lub(leq, elems, s)
        if m is None or not leq(b, m):
            continue
        if not any(leq(a, d) for d in s):
            return False
    return True


def complete(leq, elems):
    return all(lub(leq, elems, s) is not None for s in subsets(elems))


def df_axioms_hold(alg):
    """Associativity, commutativity, neutral, transitivity, combination,
    support and idempotency, all by direct table lookup."""
    c, f, car, lat = alg.combine, alg.focus, alg.carrier, alg.lattice
    e = alg.neutral
    for a in car:
        if c(a, e) != a:
            return False
        if not any(f(a, x) == a for x in lat.elements):
            return False
        for b in car:
            if c(a, b) != c(b, a):
                return False
            for d in car:
                if c(c(a, b), d) != c(a, c(b, d)):
                    return False
        for x in lat.elements:
            if c(a, f(a, x)) != a:
                return False
            for y in lat.elements:
                if f(f(a, y), x) != f(a, lat.meet(x, y)):
                    return False
            for b in car:
                if f(c(f(a, x), b), x) != c(f(a, x), f(b, x)):
                    return False
    return all(f(e, x) == e for x in lat.elements)

"""Pure-Python hot loops. ``_ckernels.pyx`` mirrors this API line for line."""

from math import gcd

PERMS = ((0, 1, 2), (0, 2, 1), (1, 0, 2), (1, 2, 0), (2, 0, 1), (2, 1, 0))


def count_tau2(n):
    count = 0
    for x in range(1, n):
        if (x * x + x + 1) % n == 0:
            count += 1
    return count


def roots_x2_plus_2x(m):
    return [x for x in range(1, m) if (x * (x + 2)) % m == 0]


def _orders(n):
    return [n // gcd(x, n) for x in range(n)]


def _lcm3(a, b, c):
    ab = a * b // gcd(a, b)
    return ab * c // gcd(ab, c)


def triples(n, orders):
    """All (x, y, z) mod n with x + y + z = 0, order multiset ``orders``, lcm of orders n."""
    target = sorted(orders)
    allowed = set(target)
    order = _orders(n)
    out = []
    for a in range(n):
        if order[a] not in allowed:
            continue
        for b in range(n):
            c = (-a - b) % n
            oa, ob, oc = order[a], order[b], order[c]
            if sorted((oa, ob, oc)) == target and _lcm3(oa, ob, oc) == n:
                out.append((a, b, c))
    return out


def triple_orbits(n, orders, units):
    """Orbits of ``triples(n, orders)`` under units x S3.

    Returns ``(x, y, z, size)`` per orbit, with (x, y, z) the lexicographically
    least member. A triple is keyed by its first two entries.
    """
    target = sorted(orders)
    allowed = set(target)
    order = _orders(n)
    seen = bytearray(n * n)
    out = []
    for a in range(n):
        if order[a] not in allowed:
            continue
        for b in range(n):
            if seen[a * n + b]:
                continue
            c = (-a - b) % n
            oa, ob, oc = order[a], order[b], order[c]
            if sorted((oa, ob, oc)) != target or _lcm3(oa, ob, oc) != n:
                continue
            best = (a, b, c)
            size = 0
            for u in units:
                t = (a * u % n, b * u % n, c * u % n)
                for p0, p1, p2 in PERMS:
                    x, y = t[p0], t[p1]
                    idx = x * n + y
                    if not seen[idx]:
                        seen[idx] = 1
                        size += 1
                        img = (x, y, t[p2])
                        if img < best:
                            best = img
            out.append((*best, size))
    return out


def pair_orbit_count(n, units):
    """Orbits of pairs (s, t) mod n with gcd(s, t, n) = 1 under simultaneous unit scaling."""
    seen = bytearray(n * n)
    count = 0
    for s in range(n):
        gs = gcd(s, n)
        for t in range(n):
            if seen[s * n + t] or gcd(gs, t) != 1:
                continue
            count += 1
            for u in units:
                seen[(s * u % n) * n + t * u % n] = 1
    return count

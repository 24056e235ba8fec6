# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled twin of ``_pykernels``; same names, same return values."""

from libc.stdlib cimport malloc, calloc, free

ctypedef long long i64

cdef int PERMS[6][3]
PERMS[0][:] = [0, 1, 2]
PERMS[1][:] = [0, 2, 1]
PERMS[2][:] = [1, 0, 2]
PERMS[3][:] = [1, 2, 0]
PERMS[4][:] = [2, 0, 1]
PERMS[5][:] = [2, 1, 0]


cdef inline i64 _gcd(i64 a, i64 b) nogil:
    cdef i64 t
    while b:
        t = a % b
        a = b
        b = t
    return a


cdef inline i64 _lcm3(i64 a, i64 b, i64 c) nogil:
    cdef i64 ab = a / _gcd(a, b) * b
    return ab / _gcd(ab, c) * c


cdef inline void _sort3(i64 *v) nogil:
    cdef i64 t
    if v[0] > v[1]:
        t = v[0]; v[0] = v[1]; v[1] = t
    if v[1] > v[2]:
        t = v[1]; v[1] = v[2]; v[2] = t
    if v[0] > v[1]:
        t = v[0]; v[0] = v[1]; v[1] = t


def count_tau2(i64 n):
    cdef i64 x, count = 0
    if n > 3000000000:
        raise OverflowError("count_tau2 kernel limited to n <= 3e9")
    with nogil:
        for x in range(1, n):
            if (x * x + x + 1) % n == 0:
                count += 1
    return count


def roots_x2_plus_2x(i64 m):
    cdef i64 x
    if m > 3000000000:
        raise OverflowError("roots kernel limited to m <= 3e9")
    out = []
    for x in range(1, m):
        if (x * (x + 2)) % m == 0:
            out.append(x)
    return out


cdef i64 *_order_table(i64 n) except NULL:
    cdef i64 *order = <i64 *> malloc(n * sizeof(i64))
    cdef i64 x
    if order == NULL:
        raise MemoryError()
    for x in range(n):
        order[x] = n / _gcd(x, n)
    return order


def triples(i64 n, orders):
    cdef i64 t[3]
    cdef i64 v[3]
    cdef i64 a, b, c
    cdef i64 *order = _order_table(n)
    t[0], t[1], t[2] = sorted(orders)
    out = []
    try:
        for a in range(n):
            if order[a] != t[0] and order[a] != t[1] and order[a] != t[2]:
                continue
            for b in range(n):
                c = (2 * n - a - b) % n
                v[0] = order[a]; v[1] = order[b]; v[2] = order[c]
                _sort3(v)
                if v[0] == t[0] and v[1] == t[1] and v[2] == t[2] \
                        and _lcm3(v[0], v[1], v[2]) == n:
                    out.append((a, b, c))
    finally:
        free(order)
    return out


def triple_orbits(i64 n, orders, units):
    cdef i64 t[3]
    cdef i64 v[3]
    cdef i64 img[3]
    cdef i64 best[3]
    cdef i64 a, b, c, u, x, y, z, idx, size
    cdef Py_ssize_t i, k, nu = len(units)
    cdef i64 *order = _order_table(n)
    cdef i64 *ulist = <i64 *> malloc((nu + 1) * sizeof(i64))
    cdef unsigned char *seen = <unsigned char *> calloc(n * n, 1)
    if ulist == NULL or seen == NULL:
        free(order); free(ulist); free(seen)
        raise MemoryError()
    for i in range(nu):
        ulist[i] = units[i]
    t[0], t[1], t[2] = sorted(orders)
    out = []
    try:
        for a in range(n):
            if order[a] != t[0] and order[a] != t[1] and order[a] != t[2]:
                continue
            for b in range(n):
                if seen[a * n + b]:
                    continue
                c = (2 * n - a - b) % n
                v[0] = order[a]; v[1] = order[b]; v[2] = order[c]
                _sort3(v)
                if v[0] != t[0] or v[1] != t[1] or v[2] != t[2] \
                        or _lcm3(v[0], v[1], v[2]) != n:
                    continue
                best[0] = a; best[1] = b; best[2] = c
                size = 0
                for i in range(nu):
                    u = ulist[i]
                    img[0] = a * u % n; img[1] = b * u % n; img[2] = c * u % n
                    for k in range(6):
                        x = img[PERMS[k][0]]
                        y = img[PERMS[k][1]]
                        idx = x * n + y
                        if not seen[idx]:
                            seen[idx] = 1
                            size += 1
                            z = img[PERMS[k][2]]
                            if x < best[0] or (x == best[0] and (y < best[1] or (y == best[1] and z < best[2]))):
                                best[0] = x; best[1] = y; best[2] = z
                out.append((best[0], best[1], best[2], size))
    finally:
        free(order); free(ulist); free(seen)
    return out


def pair_orbit_count(i64 n, units):
    cdef Py_ssize_t i, nu = len(units)
    cdef i64 s, t, gs, u, count = 0
    cdef i64 *ulist = <i64 *> malloc((nu + 1) * sizeof(i64))
    cdef unsigned char *seen = <unsigned char *> calloc(n * n, 1)
    if ulist == NULL or seen == NULL:
        free(ulist); free(seen)
        raise MemoryError()
    for i in range(nu):
        ulist[i] = units[i]
    with nogil:
        for s in range(n):
            gs = _gcd(s, n)
            for t in range(n):
                if seen[s * n + t] or _gcd(gs, t) != 1:
                    continue
                count += 1
                for i in range(nu):
                    u = ulist[i]
                    seen[(s * u % n) * n + t * u % n] = 1
    free(ulist); free(seen)
    return count

# cython: language_level=3
"""Compiled kernels: canonical-translation argmin and bracket state sum.

Same contracts as lensgrid._kernels_py; see that module for the algorithm
notes.  Inputs stay small (2n markings, <= ~16 crossings), so everything
runs on stack-side C arrays copied from the Python arguments.
"""

from libc.stdlib cimport free, malloc

BACKEND = "cython"


def min_translation(int n, int p, int q, marks):
    cdef int width = p * n
    cdef int qn = q * n
    cdef int count = len(marks)
    cdef int *mr = <int *> malloc(count * sizeof(int))
    cdef int *mx = <int *> malloc(count * sizeof(int))
    cdef int *mt = <int *> malloc(count * sizeof(int))
    cdef long *best_pos = <long *> malloc(count * sizeof(long))
    cdef int *best_t = <int *> malloc(count * sizeof(int))
    cdef long *key_pos = <long *> malloc(count * sizeof(long))
    cdef int *key_t = <int *> malloc(count * sizeof(int))
    if not (mr and mx and mt and best_pos and best_t and key_pos and key_t):
        raise MemoryError()
    cdef int i, dr, dx, passes, less, idx
    cdef long pos
    cdef int best_dr = 0, best_dx = 0
    cdef bint have_best = False
    try:
        for i in range(count):
            mr[i], mx[i], mt[i] = marks[i]
        for dr in range(n):
            for dx in range(width):
                for i in range(count):
                    passes = (mr[i] + dr) // n
                    pos = ((mr[i] + dr) % n) * width + (mx[i] + dx + passes * qn) % width
                    # insertion sort by (pos, t)
                    idx = i
                    while idx > 0 and (key_pos[idx - 1] > pos or
                                       (key_pos[idx - 1] == pos and key_t[idx - 1] > mt[i])):
                        key_pos[idx] = key_pos[idx - 1]
                        key_t[idx] = key_t[idx - 1]
                        idx -= 1
                    key_pos[idx] = pos
                    key_t[idx] = mt[i]
                if not have_best:
                    less = 1
                else:
                    less = 0
                    for i in range(count):
                        if key_pos[i] != best_pos[i]:
                            less = key_pos[i] > best_pos[i]
                            break
                        if key_t[i] != best_t[i]:
                            less = key_t[i] < best_t[i]
                            break
                if less:
                    for i in range(count):
                        best_pos[i] = key_pos[i]
                        best_t[i] = key_t[i]
                    best_dr = dr
                    best_dx = dx
                    have_best = True
        return best_dr, best_dx
    finally:
        free(mr); free(mx); free(mt)
        free(best_pos); free(best_t); free(key_pos); free(key_t)


cdef int _find(int *parent, int a) nogil:
    while parent[a] != a:
        a = parent[a]
    return a


cdef int _union(int *parent, int *size, int *undo, int *top, int a, int b) nogil:
    cdef int ra = _find(parent, a)
    cdef int rb = _find(parent, b)
    cdef int swap
    if ra == rb:
        return 0
    if size[ra] < size[rb]:
        swap = ra; ra = rb; rb = swap
    parent[rb] = ra
    size[ra] += size[rb]
    undo[top[0]] = rb
    top[0] += 1
    return 1


cdef void _rollback(int *parent, int *size, int *undo, int *top, int k) nogil:
    cdef int rb
    while k > 0:
        top[0] -= 1
        rb = undo[top[0]]
        size[parent[rb]] -= size[rb]
        parent[rb] = rb
        k -= 1


cdef void _dfs(int i, int b, int comp, int c, int *quads,
               int *parent, int *size, int *undo, int *top,
               long *counts, int cols) nogil:
    cdef int k
    if i == c:
        counts[comp * cols + b] += 1
        return
    cdef int up = quads[4 * i]
    cdef int down = quads[4 * i + 1]
    cdef int left = quads[4 * i + 2]
    cdef int right = quads[4 * i + 3]
    k = _union(parent, size, undo, top, up, right)
    k += _union(parent, size, undo, top, down, left)
    _dfs(i + 1, b, comp - k, c, quads, parent, size, undo, top, counts, cols)
    _rollback(parent, size, undo, top, k)
    k = _union(parent, size, undo, top, up, left)
    k += _union(parent, size, undo, top, down, right)
    _dfs(i + 1, b + 1, comp - k, c, quads, parent, size, undo, top, counts, cols)
    _rollback(parent, size, undo, top, k)


def bracket_counts(int c, quads, int m):
    cdef int cols = c + 1
    cdef int *cquads = <int *> malloc(4 * c * sizeof(int))
    cdef int *parent = <int *> malloc(m * sizeof(int))
    cdef int *size = <int *> malloc(m * sizeof(int))
    cdef int *undo = <int *> malloc((2 * c + 1) * sizeof(int))
    cdef long *counts = <long *> malloc((m + 1) * cols * sizeof(long))
    if not (cquads and parent and size and undo and counts):
        raise MemoryError()
    cdef int i, top = 0
    try:
        for i in range(4 * c):
            cquads[i] = quads[i]
        for i in range(m):
            parent[i] = i
            size[i] = 1
        for i in range((m + 1) * cols):
            counts[i] = 0
        with nogil:
            _dfs(0, 0, m, c, cquads, parent, size, undo, &top, counts, cols)
        return [[counts[L * cols + b] for b in range(cols)] for L in range(m + 1)]
    finally:
        free(cquads); free(parent); free(size); free(undo); free(counts)

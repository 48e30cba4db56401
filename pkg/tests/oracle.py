"""Independent brute-force evaluator used to cross-check the engine.

Everything here is deliberately low-tech: plain Fractions, dense
list-of-lists tables, nested loops, no imports from the package under
test. A bug in the engine cannot hide by appearing on both sides of a
comparison.

Conventions:
  * a product table T is indexed T[i][j][k] = coefficient of e_{k+1}
    in e_{i+1} * e_{j+1};
  * matrices are dense row-major, M[r][c] = coefficient of e_{r+1} in
    the image of e_{c+1};
  * vectors are lists of Fractions.

Residual functions return the vector value of the identity's left side
minus its right side at one basis tuple; the zero vector means the
identity holds there. Term order mirrors the reference equations so the
engine's residuals must match bit for bit, not merely up to sign.
"""

from fractions import Fraction

F = Fraction


def zero(n):
    return [F(0)] * n


def vadd(u, v):
    return [a + b for a, b in zip(u, v)]


def vsub(u, v):
    return [a - b for a, b in zip(u, v)]


def vscale(s, u):
    return [s * a for a in u]


def basis(n, i):
    v = zero(n)
    v[i] = F(1)
    return v


def mat_apply(M, v):
    n = len(M)
    return [sum((M[r][c] * v[c] for c in range(len(v))), F(0))
            for r in range(n)]


def mat_mul(M, N):
    rows, inner, cols = len(M), len(N), len(N[0])
    return [[sum((M[r][k] * N[k][c] for k in range(inner)), F(0))
             for c in range(cols)] for r in range(rows)]


def mat_transpose(M):
    return [list(col) for col in zip(*M)]


def mat_identity(n):
    return [[F(1) if r == c else F(0) for c in range(n)] for r in range(n)]


def mat_inverse(M):
    """Gauss-Jordan over Fractions; raises ZeroDivisionError if singular."""
    n = len(M)
    a = [list(row) + list(ident) for row, ident in zip(M, mat_identity(n))]
    for col in range(n):
        pivot = next(r for r in range(col, n) if a[r][col] != 0)
        a[col], a[pivot] = a[pivot], a[col]
        inv = F(1) / a[col][col]
        a[col] = [x * inv for x in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return [row[n:] for row in a]


def prod(T, u, v):
    """Bilinear extension of the table to arbitrary vectors."""
    n = len(T)
    out = zero(n)
    for i in range(n):
        if u[i] == 0:
            continue
        for j in range(n):
            if v[j] == 0:
                continue
            s = u[i] * v[j]
            for k in range(n):
                out[k] += s * T[i][j][k]
    return out


# ---------------------------------------------------------------------------
# algebra identity residuals


def antisymmetry(T, i, j):
    n = len(T)
    return vadd(prod(T, basis(n, i), basis(n, j)),
                prod(T, basis(n, j), basis(n, i)))


def hom_malcev(T, A, x, y, z, t):
    """[a[x,z],a[y,t]] minus the four right-hand bracket towers."""
    n = len(T)
    ex, ey = basis(n, x), basis(n, y)
    ez, et = basis(n, z), basis(n, t)

    def b(u, v):
        return prod(T, u, v)

    def a(u):
        return mat_apply(A, u)

    lhs = b(a(b(ex, ez)), a(b(ey, et)))
    rhs = b(b(b(ex, ey), a(ez)), a(a(et)))
    rhs = vadd(rhs, b(b(b(ey, ez), a(et)), a(a(ex))))
    rhs = vadd(rhs, b(b(b(ez, et), a(ex)), a(a(ey))))
    rhs = vadd(rhs, b(b(b(et, ex), a(ey)), a(a(ez))))
    return vsub(lhs, rhs)


def _associator(T, A, u, v, w):
    return vsub(prod(T, prod(T, u, v), mat_apply(A, w)),
                prod(T, mat_apply(A, u), prod(T, v, w)))


def left_alternative(T, A, x, y, z):
    n = len(T)
    ex, ey, ez = basis(n, x), basis(n, y), basis(n, z)
    return vadd(_associator(T, A, ex, ey, ez), _associator(T, A, ey, ex, ez))


def right_alternative(T, A, x, y, z):
    n = len(T)
    ex, ey, ez = basis(n, x), basis(n, y), basis(n, z)
    return vadd(_associator(T, A, ex, ey, ez), _associator(T, A, ex, ez, ey))


def hom_pre_malcev(T, A, x, y, z, t):
    n = len(T)
    ex, ey = basis(n, x), basis(n, y)
    ez, et = basis(n, z), basis(n, t)

    def d(u, v):
        return prod(T, u, v)

    def k(u, v):
        return vsub(d(u, v), d(v, u))

    def a(u):
        return mat_apply(A, u)

    def a2(u):
        return a(a(u))

    out = d(a(k(ey, ez)), a(d(ex, et)))
    out = vadd(out, d(k(k(ex, ey), a(ez)), a2(et)))
    out = vadd(out, d(a2(ey), d(k(ex, ez), a(et))))
    out = vsub(out, d(a2(ex), d(a(ey), d(ez, et))))
    out = vadd(out, d(a2(ez), d(a(ex), d(ey, et))))
    return out


def _mdend_ops(TR, TL, A):
    n = len(TR)

    def tr(u, v):
        return prod(TR, u, v)

    def tl(u, v):
        return prod(TL, u, v)

    def hor(u, v):
        return vadd(tl(u, v), tr(u, v))

    def ver(u, v):
        return vsub(tl(u, v), tr(v, u))

    def km(u, v):
        return vsub(hor(u, v), hor(v, u))

    def a(u):
        return mat_apply(A, u)

    def a2(u):
        return a(a(u))

    return n, tr, tl, hor, ver, km, a, a2


def md1(TR, TL, A, x, y, z, t):
    n, tr, tl, hor, ver, km, a, a2 = _mdend_ops(TR, TL, A)
    ex, ey, ez, et = (basis(n, i) for i in (x, y, z, t))
    out = tr(ver(a(ez), ver(ey, ex)), a2(et))
    out = vsub(out, tr(a2(ex), hor(a(ey), hor(ez, et))))
    out = vadd(out, tl(a2(ez), tr(a(ex), hor(ey, et))))
    out = vadd(out, tl(a(km(ey, ez)), a(tr(ex, et))))
    out = vsub(out, tl(a2(ey), tr(ver(ez, ex), a(et))))
    return out


def md2(TR, TL, A, x, y, z, t):
    n, tr, tl, hor, ver, km, a, a2 = _mdend_ops(TR, TL, A)
    ex, ey, ez, et = (basis(n, i) for i in (x, y, z, t))
    out = tl(a2(ez), tl(a(ex), tr(ey, et)))
    out = vsub(out, tr(ver(a(ez), ver(ex, ey)), a2(et)))
    out = vsub(out, tl(a2(ex), tr(a(ey), hor(ez, et))))
    out = vsub(out, tr(a(ver(ez, ey)), a(hor(ex, et))))
    out = vadd(out, tr(a2(ey), hor(km(ex, ez), a(et))))
    return out


def md3(TR, TL, A, x, y, z, t):
    """First term carries the corrected right product; see the project
    notes on the axiom's duplicated-term misprint."""
    n, tr, tl, hor, ver, km, a, a2 = _mdend_ops(TR, TL, A)
    ex, ey, ez, et = (basis(n, i) for i in (x, y, z, t))
    out = tr(a2(ez), hor(a(ex), hor(ey, et)))
    out = vadd(out, tr(ver(km(ex, ey), a(ez)), a2(et)))
    out = vsub(out, tl(a2(ex), tl(a(ey), tr(ez, et))))
    out = vadd(out, tr(a(ver(ey, ez)), a(hor(ex, et))))
    out = vadd(out, tl(a2(ey), tr(ver(ex, ez), a(et))))
    return out


def md4(TR, TL, A, x, y, z, t):
    n, tr, tl, hor, ver, km, a, a2 = _mdend_ops(TR, TL, A)
    ex, ey, ez, et = (basis(n, i) for i in (x, y, z, t))
    out = tl(km(km(ex, ey), a(ez)), a2(et))
    out = vsub(out, tl(a2(ex), tl(a(ey), tl(ez, et))))
    out = vadd(out, tl(a2(ez), tl(a(ex), tl(ey, et))))
    out = vadd(out, tl(a(km(ey, ez)), a(tl(ex, et))))
    out = vadd(out, tl(a2(ey), tl(km(ex, ez), a(et))))
    return out


# ---------------------------------------------------------------------------
# operator and module residuals


def morphism(T, Fm, i, j):
    """f(e_i * e_j) - f(e_i) * f(e_j)."""
    n = len(T)
    return vsub(mat_apply(Fm, prod(T, basis(n, i), basis(n, j))),
                prod(T, mat_apply(Fm, basis(n, i)), mat_apply(Fm, basis(n, j))))


def rb_equation(T, R, i, j):
    """R(x)*R(y) - R(R(x)*y + x*R(y)) on basis vectors."""
    n = len(T)
    ex, ey = basis(n, i), basis(n, j)
    rx, ry = mat_apply(R, ex), mat_apply(R, ey)
    return vsub(prod(T, rx, ry),
                mat_apply(R, vadd(prod(T, rx, ey), prod(T, ex, ry))))


def commutation(R, A, i):
    """(R . alpha - alpha . R)(e_i)."""
    n = len(R)
    e = basis(n, i)
    return vsub(mat_apply(R, mat_apply(A, e)), mat_apply(A, mat_apply(R, e)))


def _rho_apply(rhos, coeffs, w):
    """Action of the algebra vector with the given coefficients."""
    out = zero(len(w))
    for i, c in enumerate(coeffs):
        if c != 0:
            out = vadd(out, vscale(c, mat_apply(rhos[i], w)))
    return out


def beta_commutation(rhos, A, B, x, v):
    n = len(A)
    m = len(B)
    ex, ev = basis(n, x), basis(m, v)
    return vsub(_rho_apply(rhos, mat_apply(A, ex), mat_apply(B, ev)),
                mat_apply(B, _rho_apply(rhos, ex, ev)))


def malcev_representation(T, A, rhos, B, x, y, z, v):
    """rho([[x,y],a(z)])b^2 minus the four right-hand action towers."""
    n = len(T)
    m = len(B)
    ex, ey, ez = basis(n, x), basis(n, y), basis(n, z)
    ev = basis(m, v)

    def br(u, w):
        return prod(T, u, w)

    def a(u):
        return mat_apply(A, u)

    def act(u, w):
        return _rho_apply(rhos, u, w)

    def b(w):
        return mat_apply(B, w)

    lhs = act(br(br(ex, ey), a(ez)), b(b(ev)))
    rhs = act(a(a(ex)), act(a(ey), act(ez, ev)))
    rhs = vsub(rhs, act(a(a(ez)), act(a(ex), act(ey, ev))))
    rhs = vadd(rhs, act(a(a(ey)), act(br(ez, ex), b(ev))))
    rhs = vsub(rhs, act(a(br(ey, ez)), act(a(ex), b(ev))))
    return vsub(lhs, rhs)


def dual_action(rhos, A, B, x):
    """Matrix of the dual action at basis vector x: -(b^-2 rho(a(x)))^T."""
    binv2 = mat_inverse(mat_mul(B, B))
    coeffs = mat_apply(A, basis(len(A), x))
    m = len(B)
    acc = [[F(0)] * m for _ in range(m)]
    for i, c in enumerate(coeffs):
        if c != 0:
            for r in range(m):
                for s in range(m):
                    acc[r][s] += c * rhos[i][r][s]
    neg = [[-e for e in row] for row in mat_mul(binv2, acc)]
    return mat_transpose(neg)


# ---------------------------------------------------------------------------
# reference tables at the fixed numeric bindings
#   a4 = 2, lambda1 = 3, b3 = 5  (4-dim family)
#   b = 1, a4 = 2, a5 = 1, lambda2 = 0  (5-dim family)


def _table(dim, entries):
    T = [[zero(dim) for _ in range(dim)] for _ in range(dim)]
    for (i, j), vec in entries.items():
        for k, c in vec.items():
            T[i][j][k] = F(c)
    return T


def _matrix(dim, cols):
    M = [[F(0)] * dim for _ in range(dim)]
    for c, img in cols.items():
        for r, val in img.items():
            M[r][c] = F(val)
    return M


MALCEV4 = _table(4, {
    (0, 1): {1: -1}, (0, 2): {2: -1}, (0, 3): {3: 1},
    (1, 0): {1: 1}, (1, 2): {3: 2},
    (2, 0): {2: 1}, (2, 1): {3: -2},
    (3, 0): {3: -1},
})

# R(e1) = e1 + e4, R(e2) = 3 e3  (a4/2 = 1, lambda1 = 3)
R4 = _matrix(4, {0: {0: 1, 3: 1}, 1: {2: 3}})

# alpha(e1) = e1 + 2 e4, alpha(e2) = -e2 + 5 e3, alpha(e3) = -e3,
# alpha(e4) = -e4
ALPHA4 = _matrix(4, {0: {0: 1, 3: 2}, 1: {1: -1, 2: 5}, 2: {2: -1},
                     3: {3: -1}})

# x . y = [R(x), y]:  e1.e1 = -e4, e1.e2 = -e2, e1.e3 = -e3, e1.e4 = e4,
# e2.e1 = 3 e3, e2.e2 = -6 e4
DOT4 = _table(4, {
    (0, 0): {3: -1}, (0, 1): {1: -1}, (0, 2): {2: -1}, (0, 3): {3: 1},
    (1, 0): {2: 3}, (1, 1): {3: -6},
})

# twisted bracket alpha([x, y])
TWIST4 = _table(4, {
    (0, 1): {1: 1, 2: -5}, (0, 2): {2: 1}, (0, 3): {3: -1},
    (1, 0): {1: -1, 2: 5}, (1, 2): {3: -2},
    (2, 0): {2: -1}, (2, 1): {3: 2},
    (3, 0): {3: 1},
})

# x ._a y = alpha([R(x), y]):  e1.e1 = e4, e1.e2 = e2 - 5 e3, e1.e3 = e3,
# e1.e4 = -e4, e2.e1 = -3 e3, e2.e2 = 6 e4
DOTA4 = _table(4, {
    (0, 0): {3: 1}, (0, 1): {1: 1, 2: -5}, (0, 2): {2: 1}, (0, 3): {3: -1},
    (1, 0): {2: -3}, (1, 1): {3: 6},
})

# x >_a y = alpha([R(x), R(y)]):  e1 > e2 = 3 e3, e2 > e1 = -3 e3
TRIGHTA4 = _table(4, {(0, 1): {2: 3}, (1, 0): {2: -3}})

# x <_a y = alpha([R^2(x), y]):  e1 < e1 = e4, e1 < e2 = e2 - 5 e3,
# e1 < e3 = e3, e1 < e4 = -e4
TLEFTA4 = _table(4, {
    (0, 0): {3: 1}, (0, 1): {1: 1, 2: -5}, (0, 2): {2: 1}, (0, 3): {3: -1},
})

MALCEV5 = _table(5, {
    (0, 3): {1: 1}, (1, 4): {2: 1}, (3, 0): {1: -1}, (4, 1): {2: -1},
})

# R(e1) = e1 + 2 e4 + e5, R(e2) = e3, R(e4) = -e2   (b = 1, a4 = 2, a5 = 1)
R5 = _matrix(5, {0: {0: 1, 3: 2, 4: 1}, 1: {2: 1}, 3: {1: -1}})

# lambda2 = 0 makes the twist map the identity
ALPHA5 = mat_identity(5)

# e1.e1 = -2 e2, e1.e2 = -e3, e1.e4 = e2, e4.e5 = -e3
DOT5 = _table(5, {
    (0, 0): {1: -2}, (0, 1): {2: -1}, (0, 3): {1: 1}, (3, 4): {2: -1},
})

# e1 > e4 = e3, e4 > e1 = -e3   (b = 1)
TRIGHTA5 = _table(5, {(0, 3): {2: 1}, (3, 0): {2: -1}})

# e1 < e1 = -2 e2, e1 < e2 = -e3, e1 < e4 = e2, e1 < e5 = -2 e3
TLEFTA5 = _table(5, {
    (0, 0): {1: -2}, (0, 1): {2: -1}, (0, 3): {1: 1}, (0, 4): {2: -2},
})

# truncated dual numbers: e1 = 1, e2 = x with x^2 = 0
DUALNUM = _table(2, {(0, 0): {0: 1}, (0, 1): {1: 1}, (1, 0): {1: 1}})

RDUAL = _matrix(2, {0: {1: 1}})

# negative-control bracket: the 4-dim table with [e2,e3] and [e3,e2]
# redirected onto e1, which breaks the defining identity
# malcev4 with the single cell [e2, e3] remapped from 2 e4 to e4; the
# antisymmetric partner is left alone.  Remapping both cells together is a
# trap: that table is isomorphic to the original (rescale e4), so it passes
# every check.
CORRUPT4 = _table(4, {
    (0, 1): {1: -1}, (0, 2): {2: -1}, (0, 3): {3: 1},
    (1, 0): {1: 1}, (1, 2): {3: 1},
    (2, 0): {2: 1}, (2, 1): {3: -2},
    (3, 0): {3: -1},
})

BINDINGS4 = {"a4": F(2), "lambda1": F(3), "b3": F(5)}
BINDINGS5 = {"b": F(1), "a4": F(2), "a5": F(1), "lambda2": F(0)}

ALGEBRA_RESIDUALS = {
    "antisymmetry": (antisymmetry, 2),
    "hom-malcev": (hom_malcev, 4),
    "left-alternative": (left_alternative, 3),
    "right-alternative": (right_alternative, 3),
    "hom-pre-malcev": (hom_pre_malcev, 4),
}

MDEND_RESIDUALS = {
    "md1": md1,
    "md2": md2,
    "md3": md3,
    "md4": md4,
}

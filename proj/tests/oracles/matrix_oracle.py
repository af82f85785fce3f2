"""Independent matrix-level oracle for the frozen values in the unit tests.

Everything here is computed from explicit 2x2 products with sympy rationals;
no trace formula from the library is reused. Run: python3 matrix_oracle.py
"""
from sympy import Matrix, Rational as R, eye, diag, simplify

tr = lambda m: simplify(m.trace())


def tame(m1, m2, m3):
    m4 = (m1 * m2 * m3).inv()
    return dict(a=[tr(m1), tr(m2), tr(m3), tr(m4)],
                x=[tr(m1 * m2), tr(m2 * m3), tr(m3 * m1)])


def h(i, t):
    m = list(t)
    k = i - 1
    r = m[k:] + m[:k]
    g = r[0] * r[1]
    r[2] = g.inv() * r[2] * g
    back = 3 - k
    r = r[back % 3:] + r[:back % 3]
    return r


print("== tame ==")
A = Matrix([[2, 1], [1, 1]])
B = Matrix([[1, 2], [0, 1]])
C = Matrix([[3, -1], [1, 0]])
print("traces", tame(A, B, C))
print("ext", tr(A * B * A.inv() * C), tr(A * B * A * B.inv() * A.inv() * C))
for i in (1, 2, 3):
    print("h%d" % i, tame(*h(i, (A, B, C))))
E = Matrix([[1, 1], [0, 1]]); Fm = Matrix([[1, 0], [1, 1]]); G = Matrix([[1, 2], [1, 3]])
print("worked h1 M3'", h(1, (E, Fm, G))[2])

print("== wild ==")
P = Matrix([[0, -1], [1, 0]])


def wild(m0, u1, u2, lam):
    U1 = Matrix([[1, u1], [0, 1]]); U2 = Matrix([[1, 0], [u2, 1]]); Mh = diag(lam, 1 / lam)
    return [lam, tr(m0), tr(m0 * U1 * U2 * Mh), tr(U1 * U2), tr(m0 * U1 * U2), tr(m0 * Mh)]


def wild_tuple(m0, U1, U2, Mh):
    return [Mh[0, 0], tr(m0), tr(m0 * U1 * U2 * Mh), tr(U1 * U2), tr(m0 * U1 * U2), tr(m0 * Mh)]


M0 = Matrix([[2, 1], [3, 2]]); u1 = R(1, 2); u2 = R(-3); lam = R(3)
U1 = Matrix([[1, u1], [0, 1]]); U2 = Matrix([[1, 0], [u2, 1]]); Mh = diag(lam, 1 / lam)
print("point", wild(M0, u1, u2, lam))
g = U1 * U2 * Mh
print("pure", wild(g.inv() * M0 * g, u1, u2, lam))
# full braid: relation-preserving slot order, then conjugation by P
fb = [P * (U1.inv() * M0 * U1) * P.inv(), P * U2 * P.inv(), P * (Mh * U1 * Mh.inv()) * P.inv(),
      P * Mh * P.inv()]
print("full tuple", fb)
print("full", wild_tuple(*fb))
# chart swap: P^-1 (M0, U2, U1, Mh) P
cs = [P.inv() * M0 * P, P.inv() * U2 * P, P.inv() * U1 * P, P.inv() * Mh * P]
print("swap tuple", cs)
print("swap", wild_tuple(*cs))
print("invariants", [lam, u1 * u2, u1 * M0[1, 0], u2 * M0[0, 1], M0[0, 0], M0[1, 1]])

"""Independent reference arithmetic used to freeze expected values in the C++ tests.

Quaternions are 4-tuples of Fractions over (a, b); octonions are pairs of
quaternions combined with the plain doubling rule. Nothing here shares code
with the C++ library.
"""
from fractions import Fraction as F


def qmul(x, y, a=-1, b=-1):
    # basis 1, i, j, k with i^2=a, j^2=b, k=ij
    x0, x1, x2, x3 = x
    y0, y1, y2, y3 = y
    ab = a * b
    return (
        x0 * y0 + a * x1 * y1 + b * x2 * y2 - ab * x3 * y3,
        x0 * y1 + x1 * y0 - b * x2 * y3 + b * x3 * y2,
        x0 * y2 + x2 * y0 + a * x1 * y3 - a * x3 * y1,
        x0 * y3 + x3 * y0 + x1 * y2 - x2 * y1,
    )


def qconj(x):
    return (x[0], -x[1], -x[2], -x[3])


def qadd(x, y):
    return tuple(p + q for p, q in zip(x, y))


def qsub(x, y):
    return tuple(p - q for p, q in zip(x, y))


def omul(x, y, a=-1, b=-1, g=-1):
    q, r = x
    s, t = y
    first = qadd(qmul(q, s, a, b), tuple(g * c for c in qmul(qconj(t), r, a, b)))
    second = qadd(qmul(t, q, a, b), qmul(r, qconj(s), a, b))
    return (first, second)


def oadd(x, y):
    return (qadd(x[0], y[0]), qadd(x[1], y[1]))


def opow(x, n):
    out = ((1, 0, 0, 0), (0, 0, 0, 0))
    for _ in range(n):
        out = omul(out, x)
    return out


def qpow(x, n):
    out = (1, 0, 0, 0)
    for _ in range(n):
        out = qmul(out, x)
    return out


Z = (0, 0, 0, 0)
ONE = (1, 0, 0, 0)
I = (0, 1, 0, 0)
J = (0, 0, 1, 0)
K = (0, 0, 0, 1)
L = (Z, ONE)


def o(q, r=Z):
    return (q, r)


def iterate(alpha, beta, a0, a1, count):
    seq = [a0, a1]
    while len(seq) < count:
        seq.append(oadd(omul(alpha, seq[-2]), omul(beta, seq[-1])))
    return seq


if __name__ == "__main__":
    print("associator (e1e2)l - e1(e2 l):",
          oadd(omul(omul(o(I), o(J)), L), tuple(tuple(-c for c in p) for p in omul(o(I), omul(o(J), L)))))
    print("l*e1:", omul(L, o(I)))
    print("norm(1+i+j):", qmul((1, 1, 1, 0), qconj((1, 1, 1, 0))))

    seq = iterate(o((-1, 0, 0, -1)), o(I), o(ONE), L, 33)
    ok = True
    for n in range(33):
        main = qadd(qmul(qpow(J, n), (1, 0, 0, -1)), qmul(qpow((0, 1, 1, 0), n), K))
        tail = qsub(qmul(I, qpow((0, 0, -1, 0), n)), qmul(I, qpow((0, 1, -1, 0), n)))
        if (main, tail) != seq[n]:
            ok = False
            print("octonion example 1 mismatch at", n, seq[n], (main, tail))
            break
    print("octonion example 1 reference formula matches iteration:", ok)

    seq = iterate(o(K), o((0, 1, 1, 0)), o(ONE), L, 33)
    half = F(1, 2)
    quarter = F(1, 4)
    ok = True
    for n in range(33):
        main = qadd(qmul(qpow(I, n), (F(3, 4), 0, 0, quarter)),
                    qmul(qmul((0, -n, -half, 0), qpow(I, n)), (0, -half, 0, half)))
        tail = qadd(qmul((0, quarter, -quarter, 0), qpow(J, n)),
                    qmul(qmul((half, 0, 0, -half), qpow(J, n)), (0, -half, -n, 0)))
        if (main, tail) != seq[n]:
            ok = False
            print("octonion example 2 mismatch at", n, seq[n], (main, tail))
            break
    print("octonion example 2 reference formula matches iteration:", ok)

    # quaternion example diagonal: reference constants vs iteration
    def qiter(alpha, beta, a0, a1, count):
        s = [a0, a1]
        while len(s) < count:
            s.append(qadd(qmul(alpha, s[-2]), qmul(beta, s[-1])))
        return s
    s = qiter((-1, 0, 0, -1), I, ONE, ONE, 10)
    print("diagonal a_0..a_3:", s[:4])
    for name, c2 in (("reference ij-1", (-1, 0, 0, 1)), ("forced ij-i", (0, -1, 0, 1))):
        vals = [qadd(qmul(qpow(J, n), (1, 1, 0, -1)), qmul(qpow((0, 1, 1, 0), n), c2)) for n in range(10)]
        print(name, "matches:", vals == s)
    # jordan1 closed form a_n = i^n b0 + (-n i - j/2) i^n b1 with (b0, b1) = Uinv (1,0)
    s = qiter(K, (0, 1, 1, 0), ONE, Z, 12)
    b0 = (F(3, 4), 0, 0, F(1, 4))
    b1 = (0, -half, half, 0)
    vals = [qadd(qmul(qpow(I, n), b0), qmul(qmul((0, -n, -half, 0), qpow(I, n)), b1)) for n in range(12)]
    print("jordan1 reference form matches:", vals == s)

"""Exact orbit of alpha = 3/2, xi = 1 with Python fractions."""
from fractions import Fraction


def orbit(N):
    xs, ys = [], []
    for n in range(1, N + 1):
        v = Fraction(3**n, 2**n)
        x = v.numerator // v.denominator
        xs.append(x)
        ys.append(v - x)
    return xs, ys


def leader_count(vals, eps):
    anchors = []
    for y in vals:
        best = None
        for a in anchors:
            d = abs(y - a)
            d = min(d, 1 - d)
            if best is None or d < best:
                best = d
        if best is None or best > eps:
            anchors.append(y)
    return len(anchors)


xs, ys = orbit(4000)
print("y1..5", [str(y) for y in ys[:5]])
print("x1..6", xs[:6])
print("s1..10", [-(-3 * xs[i] + 2 * xs[i + 1]) for i in range(10)])
print("y_300 == (3^300 mod 2^300)/2^300:", ys[299] == Fraction(3**300 % 2**300, 2**300))
print("y_300 * 2^64 floor:", (ys[299] * 2**64).numerator // (ys[299] * 2**64).denominator)
eps = 0.01
for N in (1000, 2000, 4000):
    print("leader clusters eps=0.01 warmup=10 N=%d:" % N, leader_count([float(y) for y in ys[10:N]], eps))
xi_prime = Fraction(9, 4) - Fraction(3, 2)
for n in range(1, 51):
    v = xi_prime * Fraction(3, 2) ** n
    f = v - (v.numerator // v.denominator)
    if min(f, 1 - f) >= Fraction(2, 1000):
        print("contraction (2,1) eps=0.001 first violation n =", n)
        break

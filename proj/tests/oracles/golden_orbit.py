"""Golden ratio orbit through the Lucas identity alpha^n = L_n - beta^n."""
import mpmath as mp

mp.mp.prec = 512
alpha = (1 + mp.sqrt(5)) / 2
beta = (1 - mp.sqrt(5)) / 2

lucas = [2, 1]
for _ in range(300):
    lucas.append(lucas[-1] + lucas[-2])
print("power sums N=5", lucas[:6])


def frac(v):
    return v - mp.floor(v)


print("y_10", mp.nstr(frac(alpha**10), 12), "L_10 =", lucas[10])
print("||alpha^2|| =", mp.nstr(abs(beta) ** 2, 6), "1/3 =", mp.nstr(mp.mpf(1) / 3, 6))
bad = [n for n in range(5, 61) if min(frac(alpha**n), 1 - frac(alpha**n)) > mp.mpf("0.62") ** (n + 1)]
print("envelope 0.62^(n+1) violated for", len(bad), "of 56 indices in [5,60]; first", bad[:3])
xi = (1 + alpha) / 3
ys = [frac(3 * xi * alpha**n) for n in range(1, 201)]
print("L=3 seed (1+alpha)/3: max distance of y_n (n>10) to {0,1}:",
      mp.nstr(max(min(y, 1 - y) for y in ys[10:]), 5))
ys1 = [frac(xi * alpha**n) for n in range(11, 201)]
print("xi=(1+alpha)/3 scale 1: max distance to thirds:",
      mp.nstr(max(min(abs(y - k / mp.mpf(3)) for k in range(4)) for y in ys1[-50:]), 5))
print("trace_sequence (1+alpha): ", [lucas[n] + lucas[n + 1] for n in range(1, 5)])

"""Independent reference computations; none of these touch the package internals."""
from fractions import Fraction
from itertools import combinations
from math import comb, factorial


def bernoulli_akiyama_tanigawa(n):
    """B_0..B_n by the Akiyama-Tanigawa triangle, converted to B_1 = -1/2."""
    a = [Fraction(0)] * (n + 1)
    out = []
    for m in range(n + 1):
        a[m] = Fraction(1, m + 1)
        for j in range(m, 0, -1):
            a[j - 1] = j * (a[j - 1] - a[j])
        out.append(a[0])
    if n >= 1:
        out[1] = -out[1]
    return out


def expand_affine(coeffs, a, b):
    """Coefficients of sum_k c_k (a z + b)^k by the binomial theorem."""
    out = [Fraction(0)] * max(len(coeffs), 1)
    for k, c in enumerate(coeffs):
        for j in range(k + 1):
            out[j] += Fraction(c) * comb(k, j) * Fraction(a) ** j * Fraction(b) ** (k - j)
    while out and out[-1] == 0:
        out.pop()
    return out


def all_faces(facets):
    """Every nonempty face, enumerated with itertools.combinations."""
    faces = set()
    for f in facets:
        f = tuple(sorted(f))
        for k in range(1, len(f) + 1):
            faces.update(combinations(f, k))
    return faces


def f_vector_brute(facets):
    faces = all_faces(facets)
    top = max(len(f) for f in faces)
    return tuple(sum(1 for f in faces if len(f) == k) for k in range(1, top + 1))


def euler_brute(facets):
    return sum((-1) ** (len(f) - 1) for f in all_faces(facets))


def link_faces_brute(facets, sigma):
    faces = all_faces(facets)
    s = set(sigma)
    return {t for t in faces if s.isdisjoint(t) and tuple(sorted(s | set(t))) in faces}


def genocchi(n, bern):
    return 2 * (1 - 2**n) * bern[n]


def neg_z_over_cosh_check(coeffs, order):
    """Multiply a candidate series by cosh z term by term; return the product."""
    cosh = [Fraction(1, factorial(k)) if k % 2 == 0 else Fraction(0) for k in range(order + 1)]
    return [sum(coeffs[i] * cosh[k - i] for i in range(k + 1)) for k in range(order + 1)]

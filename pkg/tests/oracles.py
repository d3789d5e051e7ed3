"""Reference computations that share no code with the library."""

from fractions import Fraction
from itertools import combinations, permutations


def gauss_rank(rows):
    """Rank by textbook Gauss-Jordan elimination over Fraction / complex-like scalars."""
    M = [list(r) for r in rows]
    if not M:
        return 0
    rank = 0
    cols = len(M[0])
    for c in range(cols):
        piv = next((i for i in range(rank, len(M)) if M[i][c] != 0), None)
        if piv is None:
            continue
        M[rank], M[piv] = M[piv], M[rank]
        p = M[rank][c]
        M[rank] = [x / p for x in M[rank]]
        for i in range(len(M)):
            if i != rank and M[i][c] != 0:
                f = M[i][c]
                M[i] = [a - f * b for a, b in zip(M[i], M[rank])]
        rank += 1
    return rank


def perm_det(M):
    """Leibniz formula."""
    n = len(M)
    total = Fraction(0)
    for perm in permutations(range(n)):
        inv = sum(1 for i, j in combinations(range(n), 2) if perm[i] > perm[j])
        term = Fraction(1)
        for i in range(n):
            term *= M[i][perm[i]]
        total += -term if inv % 2 else term
    return total


def elementary_symmetric(values):
    e = [Fraction(1)]
    for v in values:
        e = [a + (v * b if i else 0) for i, (a, b) in enumerate(zip(e + [0], [0] + e))]
    return e[1:]


def poly_mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out

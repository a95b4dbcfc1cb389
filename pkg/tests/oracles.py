"""Brute-force reference computations, deliberately naive.

Nothing here imports the code paths under test except the plain Tensor
container.
"""
import itertools
import math
from collections import Counter
from fractions import Fraction

from symengel.tensor_core import Tensor


def symmetrize_by_all_permutations(word, rank):
    """Sum over all n! permutations sigma of sigma.word, tallied one by one."""
    n = len(word)
    tally = Counter()
    for sigma in itertools.permutations(range(n)):
        inverse = [0] * n
        for i, s in enumerate(sigma):
            inverse[s] = i
        tally[tuple(word[inverse[p]] for p in range(n))] += 1
    return Tensor(rank, n, dict(tally))


def modified_by_division(indices, parts, rank):
    word = [i for i, k in zip(indices, parts) for _ in range(k)]
    full = symmetrize_by_all_permutations(word, rank)
    denom = math.prod(math.factorial(k) for k in parts)
    terms = {}
    for w, c in full.items():
        assert c % denom == 0
        terms[w] = c // denom
    return Tensor(rank, len(word), terms)


def power_by_words(v, n):
    """Coefficient of each of the m^n words as a product, including zeros."""
    terms = {}
    for w in itertools.product(range(1, len(v) + 1), repeat=n):
        terms[w] = math.prod(v[i - 1] for i in w)
    return Tensor(len(v), n, terms)


def words_using_exactly(letters, n, rank):
    """X_I by definition: every word whose set of letters is exactly I."""
    letters = set(letters)
    if not letters:
        return Tensor.zero(rank, n)
    return Tensor(rank, n, {w: 1 for w in itertools.product(sorted(letters), repeat=n) if set(w) == letters})


def in_span_brute(rows, vec, bound):
    """Search integer combinations with |coefficients| <= bound."""
    for coeffs in itertools.product(range(-bound, bound + 1), repeat=len(rows)):
        if all(sum(c * r[k] for c, r in zip(coeffs, rows)) == vec[k] for k in range(len(vec))):
            return coeffs
    return None


def rational_solve(rows, vec):
    """Coefficients over Q of vec in the span of independent rows, or None."""
    # Gaussian elimination on the transposed system rows^T c = vec.
    k, d = len(rows), len(vec)
    aug = [[Fraction(rows[j][i]) for j in range(k)] + [Fraction(vec[i])] for i in range(d)]
    r = 0
    pivots = []
    for c in range(k):
        p = next((i for i in range(r, d) if aug[i][c] != 0), None)
        if p is None:
            continue
        aug[r], aug[p] = aug[p], aug[r]
        pv = aug[r][c]
        aug[r] = [x / pv for x in aug[r]]
        for i in range(d):
            if i != r and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[r])]
        pivots.append(c)
        r += 1
    if any(aug[i][k] != 0 for i in range(r, d)):
        return None
    sol = [Fraction(0)] * k
    for i, c in enumerate(pivots):
        sol[c] = aug[i][k]
    return sol


def determinant(matrix):
    """Exact determinant by fraction elimination."""
    a = [[Fraction(x) for x in row] for row in matrix]
    n = len(a)
    det = Fraction(1)
    for c in range(n):
        p = next((i for i in range(c, n) if a[i][c] != 0), None)
        if p is None:
            return 0
        if p != c:
            a[c], a[p] = a[p], a[c]
            det = -det
        det *= a[c][c]
        for i in range(c + 1, n):
            f = a[i][c] / a[c][c]
            a[i] = [x - f * y for x, y in zip(a[i], a[c])]
    return int(det)


class NaiveRing:
    """A Lie ring from structure constants, bracket by the defining formula."""

    def __init__(self, rank, orders, brackets):
        self.rank = rank
        self.orders = orders
        self.c = {}
        for (i, j), v in brackets.items():
            self.c[(i, j)] = list(v)
            self.c[(j, i)] = [-x for x in v]

    def red(self, v):
        return tuple(x % d if d else x for x, d in zip(v, self.orders))

    def br(self, a, b):
        out = [0] * self.rank
        for i in range(self.rank):
            for j in range(self.rank):
                v = self.c.get((i + 1, j + 1))
                if v:
                    for k in range(self.rank):
                        out[k] += a[i] * b[j] * v[k]
        return self.red(out)

    def is_engel(self, n):
        gens = [tuple(int(k == i) for k in range(self.rank)) for i in range(self.rank)]
        for x in itertools.product(*(range(d) for d in self.orders)):
            for y in gens:
                z = self.red(y)
                for _ in range(n):
                    z = self.br(x, z)
                if any(z):
                    return False
        return True

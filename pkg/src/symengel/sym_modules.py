"""The lattices S''_n(M) <= P_n(M) <= S'_n(M) inside T^n(M), M = Z^m.

* S'_n  -- symmetric tensors (fixed by the position action of S_n).
* S''_n -- image of the full symmetrization map.
* P_n   -- span of the n-th tensor powers ``x (x) ... (x) x``.

All three live in one coordinate system: the m^n words of length n in
lexicographic order (see :func:`ambient_words`).
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import lru_cache

from .lattice import Lattice, contains, hnf, index, lattice_of_tensors, same_lattice
from .tensor_core import (
    Tensor,
    Word,
    composition_sum,
    compositions,
    modified_symmetrization,
    tensor_power,
)


class CheckFailure(RuntimeError):
    """A computation contradicted one of the verified closed-form facts."""


@lru_cache(maxsize=None)
def ambient_words(m: int, n: int) -> tuple[Word, ...]:
    if m < 1 or n < 1:
        raise ValueError(f"need m >= 1 and n >= 1, got m={m}, n={n}")
    return tuple(itertools.product(range(1, m + 1), repeat=n))


def strict_labels(m: int, n: int):
    """``(j, k)`` pairs indexing the bases of S'_n and S''_n.

    ``j`` is strictly increasing in ``1..m``, ``k`` a composition of ``n`` of
    the same length ``s``; ordered by ``s``, then ``j``, then ``k``.
    """
    for s in range(1, min(m, n) + 1):
        for j in itertools.combinations(range(1, m + 1), s):
            for k in compositions(n, s):
                yield j, k


def basis_S_prime(m: int, n: int) -> list[Tensor]:
    return [modified_symmetrization(j, k, m) for j, k in strict_labels(m, n)]


def basis_S_dprime(m: int, n: int) -> list[Tensor]:
    return [
        math.prod(math.factorial(x) for x in k) * modified_symmetrization(j, k, m)
        for j, k in strict_labels(m, n)
    ]


def generators_P(m: int, n: int) -> list[tuple[tuple[int, ...], Tensor]]:
    """Generators of P_n(M), one per weakly increasing multi-index.

    For ``j_1 <= .. <= j_s`` (``1 <= s <= n``) the generator is the sum over
    compositions ``k`` of ``n`` of ``(x_{j_1}^{(k_1)} .. x_{j_s}^{(k_s)})*``.
    There are ``C(m+n, n) - 1`` of them.
    """
    return [
        (j, composition_sum(j, n, m))
        for s in range(1, n + 1)
        for j in itertools.combinations_with_replacement(range(1, m + 1), s)
    ]


def lattice_S_prime(m: int, n: int) -> Lattice:
    return lattice_of_tensors(basis_S_prime(m, n), ambient_words(m, n))


def lattice_S_dprime(m: int, n: int) -> Lattice:
    return lattice_of_tensors(basis_S_dprime(m, n), ambient_words(m, n))


def lattice_P(m: int, n: int) -> Lattice:
    """HNF basis of P_n(M) reduced from :func:`generators_P`."""
    return lattice_of_tensors([t for _, t in generators_P(m, n)], ambient_words(m, n))


def oracle_P_lattice(m: int, n: int, bound: int | None = None) -> Lattice:
    """Brute-force P_n: span of ``v^{(x) n}`` for all ``v`` in ``{0..bound}^m``."""
    bound = n if bound is None else bound
    if bound < n:
        raise ValueError(f"bound {bound} is below the degree {n}")
    words = ambient_words(m, n)
    column = {w: i for i, w in enumerate(words)}
    rows = [
        tensor_power(v, n).to_vector(column, len(words))
        for v in itertools.product(range(bound + 1), repeat=m)
        if any(v)
    ]
    return hnf(rows, len(words), words)


def index_formula_S(m: int, n: int) -> int:
    """Closed form for ``[S'_n : S''_n]``.

    Product over compositions ``k`` of ``n`` (of length ``s``) of
    ``(k_1! .. k_s!)^C(m, s)``.
    """
    if m < 1 or n < 1:
        raise ValueError(f"need m >= 1 and n >= 1, got m={m}, n={n}")
    total = 1
    for s in range(1, n + 1):
        for k in compositions(n, s):
            total *= math.prod(math.factorial(x) for x in k) ** math.comb(m, s)
    return total


@dataclass(frozen=True)
class SymmetricModuleFamily:
    m: int
    n: int
    s_prime: Lattice
    s_dprime: Lattice
    p: Lattice

    @property
    def rank(self) -> int:
        return math.comb(self.m + self.n - 1, self.n)

    def index_S(self) -> int:
        return index(self.s_prime, self.s_dprime)

    def index_P(self) -> int:
        """``[S'_n : P_n]``."""
        return index(self.s_prime, self.p)

    def is_sandwiched(self) -> bool:
        return all(contains(self.p, r)[0] for r in self.s_dprime.rows) and all(
            contains(self.s_prime, r)[0] for r in self.p.rows
        )


def symmetric_family(m: int, n: int) -> SymmetricModuleFamily:
    return SymmetricModuleFamily(m, n, lattice_S_prime(m, n), lattice_S_dprime(m, n), lattice_P(m, n))


def prime_index(p: int, m: int) -> int:
    """``[S'_p : P_p]`` computed by HNF."""
    return index(lattice_S_prime(m, p), lattice_P(m, p))


def prime_index_check(p: int, m: int) -> bool:
    """True iff the prime ``p`` does not divide ``[S'_p : P_p]``."""
    if p < 2 or any(p % q == 0 for q in range(2, math.isqrt(p) + 1)):
        raise ValueError(f"{p} is not prime")
    return prime_index(p, m) % p != 0


# Gaussian integers.  M = Z[i]x1 + Z[i]x2 is handled as a Z-module: a tensor
# with Z[i] coefficients over the words in {1,2}^3 becomes an integer vector
# of length 16, real parts in the first 8 slots and imaginary parts in the
# last 8.

GaussianTensor = dict[Word, tuple[int, int]]


def _gmul(a: tuple[int, int], b: tuple[int, int]) -> tuple[int, int]:
    return (a[0] * b[0] - a[1] * b[1], a[0] * b[1] + a[1] * b[0])


def _gaussian_power(v: list[tuple[int, int]], n: int) -> GaussianTensor:
    out: GaussianTensor = {}
    support = [(i + 1, c) for i, c in enumerate(v) if c != (0, 0)]
    for choice in itertools.product(support, repeat=n):
        coeff = (1, 0)
        for _, c in choice:
            coeff = _gmul(coeff, c)
        out[tuple(letter for letter, _ in choice)] = coeff
    return out


def _gaussian_combination(*terms: tuple[tuple[int, int], GaussianTensor]) -> GaussianTensor:
    out: dict[Word, tuple[int, int]] = {}
    for scalar, t in terms:
        for w, c in t.items():
            re, im = _gmul(scalar, c)
            old = out.get(w, (0, 0))
            out[w] = (old[0] + re, old[1] + im)
    return {w: c for w, c in out.items() if c != (0, 0)}


def _from_integral(t: Tensor) -> GaussianTensor:
    return {w: (c, 0) for w, c in t.items()}


def _flatten(t: GaussianTensor, words: tuple[Word, ...]) -> list[int]:
    return [t.get(w, (0, 0))[0] for w in words] + [t.get(w, (0, 0))[1] for w in words]


@dataclass(frozen=True)
class GaussianReport:
    basis_spans_P3: bool
    identity_holds: bool
    element_in_span: bool

    @property
    def passed(self) -> bool:
        return self.basis_spans_P3 and self.identity_holds and not self.element_in_span


def gaussian_example_check() -> GaussianReport:
    """Show that the generator theorem for P_n fails over Z[i] (m=2, n=3).

    (a) four integral elements form a Z-basis of P_3(Z x1 + Z x2);
    (b) ``(1+i)(x1^(2) x2^(1))*`` is a Z[i]-combination of four cubes;
    (c) that element is not in the Z[i]-span of the four basis elements.

    Raises :class:`CheckFailure` if any of the three does not come out.
    """
    m, n = 2, 3
    words = ambient_words(m, n)
    a = modified_symmetrization((1,), (3,), m)
    b = modified_symmetrization((2,), (3,), m)
    c = modified_symmetrization((1, 2), (2, 1), m) + modified_symmetrization((1, 2), (1, 2), m)
    d = 2 * modified_symmetrization((1, 2), (1, 2), m)
    four = [a, b, c, d]

    basis_lat = lattice_of_tensors(four, words)
    basis_ok = basis_lat.rank == 4 and same_lattice(basis_lat, lattice_P(m, n))

    one, i_ = (1, 0), (0, 1)
    target = _gaussian_combination(((1, 1), _from_integral(modified_symmetrization((1, 2), (2, 1), m))))
    cubes = _gaussian_combination(
        (one, _gaussian_power([one, one], n)),
        (one, _gaussian_power([one, i_], n)),
        ((-2, 0), _gaussian_power([one, (0, 0)], n)),
        ((-1, 1), _gaussian_power([(0, 0), one], n)),
    )
    identity_ok = target == cubes

    rows = []
    for t in four:
        g = _from_integral(t)
        rows.append(_flatten(g, words))
        rows.append(_flatten(_gaussian_combination((i_, g)), words))
    span = hnf(rows, 2 * len(words))
    in_span = contains(span, _flatten(target, words))[0]

    report = GaussianReport(basis_ok, identity_ok, in_span)
    if not report.passed:
        raise CheckFailure(f"Gaussian-integer example failed: {report}")
    return report

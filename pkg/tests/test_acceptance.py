"""Exit criteria.  Every comparison here is exact integer equality.

Run ``pytest tests/test_acceptance.py`` for a PASS/FAIL line per criterion
in the terminal summary.
"""
import itertools
import math
import random

from symengel.lattice import hnf, index
from symengel.lie_engel import (
    abelian_ring,
    brute_force_engel_test,
    cg_engel_test,
    cg_pm_engel_test,
    free_nilpotent_class2,
    heisenberg_ring,
    solvable_ring,
    symmetrized_engel_term,
)
from symengel.sym_modules import (
    gaussian_example_check,
    generators_P,
    index_formula_S,
    lattice_P,
    lattice_S_dprime,
    lattice_S_prime,
    oracle_P_lattice,
    prime_index,
)
from symengel.tensor_core import (
    Tensor,
    commutative_image,
    composition_sum,
    compositions,
    mobius_combination,
    modified_symmetrization,
    subset_sum_tensor,
    symmetrize_word,
    tensor_power,
)


def test_c01_mobius_identity():
    for n in range(1, 7):
        for s in range(1, n + 1):
            direct = Tensor.zero(s, n)
            for k in compositions(n, s):
                direct = direct + modified_symmetrization(tuple(range(1, s + 1)), k, s)
            assert mobius_combination(s, n) == direct, (s, n)

    ms = modified_symmetrization
    p = lambda *v: tensor_power(list(v), 4)  # noqa: E731
    lhs2 = ms((1, 2), (3, 1)) + ms((1, 2), (2, 2)) + ms((1, 2), (1, 3))
    assert lhs2 == p(1, 1) - p(1, 0) - p(0, 1) == mobius_combination(2, 4)
    lhs3 = ms((1, 2, 3), (2, 1, 1)) + ms((1, 2, 3), (1, 2, 1)) + ms((1, 2, 3), (1, 1, 2))
    rhs3 = p(1, 1, 1) - p(1, 1, 0) - p(1, 0, 1) - p(0, 1, 1) + p(1, 0, 0) + p(0, 1, 0) + p(0, 0, 1)
    assert lhs3 == rhs3 == mobius_combination(3, 4)


def test_c02_commutative_images():
    assert commutative_image(mobius_combination(2, 4)) == {(1, 1, 1, 2): 4, (1, 1, 2, 2): 6, (1, 2, 2, 2): 4}
    assert commutative_image(mobius_combination(3, 4)) == {(1, 1, 2, 3): 12, (1, 2, 2, 3): 12, (1, 2, 3, 3): 12}


def test_c03_index_closed_forms():
    for m in (1, 2, 3):
        for n in (2, 3, 4, 5):
            assert index(lattice_S_prime(m, n), lattice_S_dprime(m, n)) == index_formula_S(m, n), (m, n)
        assert index(lattice_S_prime(m, 2), lattice_S_dprime(m, 2)) == 2**m
        assert index(lattice_S_prime(m, 3), lattice_S_dprime(m, 3)) == 2 ** (m * m) * 3**m
    assert index(lattice_S_prime(2, 4), lattice_S_dprime(2, 4)) == 82944


def test_c04_rank_of_P():
    for m in (1, 2, 3):
        for n in (1, 2, 3, 4, 5):
            assert lattice_P(m, n).rank == math.comb(m + n - 1, n), (m, n)


def test_c05_generators_match_oracle():
    for m in (1, 2, 3):
        for n in (1, 2, 3, 4):
            assert lattice_P(m, n).rows == oracle_P_lattice(m, n, bound=n).rows, (m, n)


def test_c06_generator_count():
    for m in range(1, 6):
        for n in range(1, 6):
            assert len(generators_P(m, n)) == math.comb(m + n, n) - 1, (m, n)
    assert len(generators_P(2, 3)) == 9


def test_c07_prime_index():
    for p in (2, 3):
        for m in (1, 2, 3):
            assert prime_index(p, m) % p != 0, (p, m)
    for m in (1, 2, 3):
        assert lattice_P(m, 2).rows == lattice_S_prime(m, 2).rows
    assert prime_index(5, 2) % 5 != 0


def test_c08_gaussian_counterexample():
    report = gaussian_example_check()
    assert report.basis_spans_P3
    assert report.identity_holds
    assert not report.element_in_span


def test_c09_engel_equivalence():
    corpus = [
        abelian_ring(2, 2),
        abelian_ring(3, 3),
        heisenberg_ring(2),
        heisenberg_ring(3),
        heisenberg_ring(4),
        solvable_ring(2),
        solvable_ring(3),
        free_nilpotent_class2(2, 2),
        free_nilpotent_class2(2, 3),
        free_nilpotent_class2(3, 2),
        free_nilpotent_class2(3, 3),
    ]
    assert len(corpus) >= 10
    for ring in corpus:
        for n in (1, 2, 3, 4):
            brute = brute_force_engel_test(ring, n).holds
            assert cg_engel_test(ring, n).holds == brute, (ring, n)
            assert cg_pm_engel_test(ring, n).holds == brute, (ring, n)


CASES = 200


def test_c10_property_suite():
    rng = random.Random(20261016)

    # symmetric group fixedness of symmetrized outputs
    for _ in range(CASES):
        m, n = rng.randint(1, 3), rng.randint(2, 5)
        word = [rng.randint(1, m) for _ in range(n)]
        s = rng.randint(1, n)
        parts = next(itertools.islice(compositions(n, s), rng.randrange(math.comb(n - 1, s - 1)), None))
        indices = [rng.randint(1, m) for _ in range(s)]
        v = [rng.randint(-3, 3) for _ in range(m)]
        subset = {i for i in range(1, m + 1) if rng.random() < 0.5}
        a, b = rng.sample(range(n), 2)
        sigma = list(range(n))
        sigma[a], sigma[b] = sigma[b], sigma[a]
        for t in (
            symmetrize_word(word, m),
            modified_symmetrization(indices, parts, m),
            tensor_power(v, n),
            subset_sum_tensor(subset, n, m),
            composition_sum(indices, n, m),
        ):
            assert t.permuted(sigma) == t

    # HNF canonicity under random unimodular row operations
    for _ in range(CASES):
        rows_n, cols = rng.randint(1, 5), rng.randint(1, 5)
        rows = [[rng.randint(-5, 5) for _ in range(cols)] for _ in range(rows_n)]
        mixed = [list(r) for r in rows]
        for _ in range(rng.randint(0, 10)):
            i, j = rng.randrange(rows_n), rng.randrange(rows_n)
            if i != j:
                q = rng.randint(-3, 3)
                mixed[i] = [x + q * y for x, y in zip(mixed[i], mixed[j])]
            if rng.random() < 0.3:
                mixed[i] = [-x for x in mixed[i]]
        rng.shuffle(mixed)
        assert hnf(mixed, cols) == hnf(rows, cols)

    # index multiplicativity on nested diagonal lattices
    def diag(d):
        return hnf([[d[i] if i == j else 0 for j in range(len(d))] for i in range(len(d))], len(d))

    for _ in range(CASES):
        k = rng.randint(1, 4)
        top = [rng.randint(1, 5) for _ in range(k)]
        mid = [x * rng.randint(1, 4) for x in top]
        low = [x * rng.randint(1, 4) for x in mid]
        a, b, c = diag(top), diag(mid), diag(low)
        assert index(a, c) == index(a, b) * index(b, c)

    # additivity in y of the symmetrized Engel term
    rings = [heisenberg_ring(4), free_nilpotent_class2(3, 3), solvable_ring(3), free_nilpotent_class2(2, 5)]
    for _ in range(CASES):
        ring = rng.choice(rings)
        y1 = tuple(rng.randrange(d) for d in ring.orders)
        y2 = tuple(rng.randrange(d) for d in ring.orders)
        s = rng.randint(1, 3)
        parts = tuple(rng.randint(1, 2) for _ in range(s))
        indices = tuple(rng.randint(1, ring.rank) for _ in range(s))
        lhs = symmetrized_engel_term(ring, indices, parts, ring.add(y1, y2))
        rhs = ring.add(
            symmetrized_engel_term(ring, indices, parts, y1),
            symmetrized_engel_term(ring, indices, parts, y2),
        )
        assert lhs == rhs

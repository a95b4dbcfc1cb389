"""Degree-n tensors over a free Z-module of rank m, and their symmetrizations.

A word is a tuple of letters in ``1..m`` of length ``n``; it stands for the
pure tensor ``x_{w_1} (x) ... (x) x_{w_n}``.  A :class:`Tensor` is a sparse
integer combination of words.  Words compare lexicographically, which fixes
the column order of every matrix built downstream.
"""
from __future__ import annotations

import itertools
import math
from collections import Counter
from typing import Iterable, Iterator, Mapping, Sequence

Word = tuple[int, ...]


def check_word(word: Sequence[int], m: int, n: int) -> Word:
    word = tuple(word)
    if len(word) != n:
        raise ValueError(f"word {word} has length {len(word)}, expected {n}")
    for letter in word:
        if not isinstance(letter, int) or not 1 <= letter <= m:
            raise ValueError(f"letter {letter!r} of {word} outside 1..{m}")
    return word


def check_composition(parts: Sequence[int], n: int | None = None) -> tuple[int, ...]:
    parts = tuple(parts)
    if not parts or any(not isinstance(k, int) or k < 1 for k in parts):
        raise ValueError(f"composition {parts} must be a nonempty tuple of positive integers")
    if n is not None and sum(parts) != n:
        raise ValueError(f"composition {parts} does not sum to {n}")
    return parts


def compositions(n: int, s: int) -> Iterator[tuple[int, ...]]:
    """Ordered tuples of ``s`` positive integers summing to ``n``.

    Tuples come out with the first part largest first, e.g. ``(3, 1), (2, 2),
    (1, 3)`` for ``n=4, s=2``.  Nothing is yielded when ``s > n`` or ``s < 1``.
    """
    if s < 1 or s > n:
        return
    if s == 1:
        yield (n,)
        return
    for first in range(n - s + 1, 0, -1):
        for rest in compositions(n - first, s - 1):
            yield (first,) + rest


def all_compositions(n: int) -> Iterator[tuple[int, ...]]:
    for s in range(1, n + 1):
        yield from compositions(n, s)


def distinct_permutations(items: Iterable[int]) -> Iterator[tuple[int, ...]]:
    """Distinct rearrangements of a multiset, in lexicographic order.

    Classic next-permutation stepping; each arrangement is produced once, so
    the cost is proportional to the multinomial coefficient rather than n!.
    """
    seq = sorted(items)
    size = len(seq)
    while True:
        yield tuple(seq)
        i = size - 2
        while i >= 0 and seq[i] >= seq[i + 1]:
            i -= 1
        if i < 0:
            return
        j = size - 1
        while seq[j] <= seq[i]:
            j -= 1
        seq[i], seq[j] = seq[j], seq[i]
        seq[i + 1:] = reversed(seq[i + 1:])


def stabilizer_order(word: Sequence[int]) -> int:
    """Order of the stabilizer of ``word`` under position permutations."""
    return math.prod(math.factorial(c) for c in Counter(word).values())


class Tensor:
    """Sparse element of T^n(M) for M free of rank ``rank``.

    Instances are immutable; arithmetic returns new tensors.  Zero
    coefficients are never stored.
    """

    __slots__ = ("_rank", "_degree", "_terms")

    def __init__(self, rank: int, degree: int, terms: Mapping[Sequence[int], int] | None = None):
        if not isinstance(degree, int) or degree < 1:
            raise ValueError(f"degree must be a positive integer, got {degree!r}")
        if not isinstance(rank, int) or rank < 1:
            raise ValueError(f"rank must be a positive integer, got {rank!r}")
        self._rank = rank
        self._degree = degree
        clean: dict[Word, int] = {}
        for word, coeff in (terms or {}).items():
            word = check_word(word, rank, degree)
            if coeff:
                clean[word] = clean.get(word, 0) + int(coeff)
                if not clean[word]:
                    del clean[word]
        self._terms = clean

    @classmethod
    def _trusted(cls, rank: int, degree: int, terms: dict[Word, int]) -> Tensor:
        # internal constructor: caller guarantees valid words and nonzero coefficients
        obj = cls.__new__(cls)
        obj._rank = rank
        obj._degree = degree
        obj._terms = terms
        return obj

    @classmethod
    def zero(cls, rank: int, degree: int) -> Tensor:
        return cls(rank, degree)

    @classmethod
    def word(cls, rank: int, word: Sequence[int], coeff: int = 1) -> Tensor:
        word = tuple(word)
        return cls(rank, len(word), {word: coeff})

    @property
    def rank(self) -> int:
        return self._rank

    @property
    def degree(self) -> int:
        return self._degree

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __contains__(self, word) -> bool:
        return tuple(word) in self._terms

    def coefficient(self, word: Sequence[int]) -> int:
        return self._terms.get(tuple(word), 0)

    def items(self) -> list[tuple[Word, int]]:
        """(word, coefficient) pairs in lexicographic word order."""
        return sorted(self._terms.items())

    def support(self) -> list[Word]:
        return sorted(self._terms)

    def _check_compatible(self, other: Tensor) -> None:
        if not isinstance(other, Tensor):
            raise TypeError(f"expected Tensor, got {type(other).__name__}")
        if (self._rank, self._degree) != (other._rank, other._degree):
            raise ValueError(
                f"incompatible tensors: rank/degree {self._rank}/{self._degree} "
                f"vs {other._rank}/{other._degree}"
            )

    def __add__(self, other: Tensor) -> Tensor:
        self._check_compatible(other)
        terms = dict(self._terms)
        for word, coeff in other._terms.items():
            total = terms.get(word, 0) + coeff
            if total:
                terms[word] = total
            else:
                terms.pop(word, None)
        return Tensor._trusted(self._rank, self._degree, terms)

    def __neg__(self) -> Tensor:
        return Tensor._trusted(self._rank, self._degree, {w: -c for w, c in self._terms.items()})

    def __sub__(self, other: Tensor) -> Tensor:
        return self + (-other)

    def __mul__(self, scalar: int) -> Tensor:
        if not isinstance(scalar, int):
            return NotImplemented
        if scalar == 0:
            return Tensor.zero(self._rank, self._degree)
        return Tensor._trusted(self._rank, self._degree, {w: scalar * c for w, c in self._terms.items()})

    __rmul__ = __mul__

    def exact_div(self, divisor: int) -> Tensor:
        terms = {}
        for word, coeff in self._terms.items():
            q, r = divmod(coeff, divisor)
            assert r == 0, f"coefficient {coeff} of {word} not divisible by {divisor}"
            terms[word] = q
        return Tensor._trusted(self._rank, self._degree, terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Tensor):
            return NotImplemented
        return (self._rank, self._degree, self._terms) == (other._rank, other._degree, other._terms)

    def __hash__(self) -> int:
        return hash((self._rank, self._degree, frozenset(self._terms.items())))

    def __repr__(self) -> str:
        if not self._terms:
            return f"Tensor(rank={self._rank}, degree={self._degree}, 0)"
        body = " + ".join(f"{c}*{''.join(map(str, w)) if self._rank < 10 else w}" for w, c in self.items())
        return f"Tensor(rank={self._rank}, degree={self._degree}, {body})"

    def permuted(self, sigma: Sequence[int]) -> Tensor:
        """Apply the position action ``sigma.(w_1..w_n) = (w_{sigma^-1(1)}, ..)``.

        ``sigma`` is a permutation of ``range(n)`` given as its image list.
        """
        n = self._degree
        if sorted(sigma) != list(range(n)):
            raise ValueError(f"{sigma} is not a permutation of range({n})")
        inverse = [0] * n
        for i, image in enumerate(sigma):
            inverse[image] = i
        terms = {tuple(w[inverse[p]] for p in range(n)): c for w, c in self._terms.items()}
        return Tensor._trusted(self._rank, n, terms)

    def is_symmetric(self) -> bool:
        """True iff fixed by every position permutation.

        Adjacent transpositions generate S_n, so checking those is enough.
        """
        for p in range(self._degree - 1):
            for word, coeff in self._terms.items():
                swapped = word[:p] + (word[p + 1], word[p]) + word[p + 2:]
                if self._terms.get(swapped, 0) != coeff:
                    return False
        return True

    def to_vector(self, column_of: Mapping[Word, int], width: int) -> list[int]:
        """Coordinates with respect to an ordered word basis.

        Raises ``KeyError`` if the tensor's support leaves the basis.
        """
        vec = [0] * width
        for word, coeff in self._terms.items():
            vec[column_of[word]] = coeff
        return vec

    def with_rank(self, rank: int) -> Tensor:
        """The same tensor viewed inside a larger (or equal) ambient rank."""
        if rank < self._rank and any(max(w) > rank for w in self._terms):
            raise ValueError(f"tensor uses letters beyond rank {rank}")
        return Tensor._trusted(rank, self._degree, dict(self._terms))


def symmetrize_word(word: Sequence[int], rank: int | None = None) -> Tensor:
    """Sum of ``sigma.word`` over all of S_n.

    Each distinct rearrangement carries the stabilizer order of ``word``.
    """
    word = tuple(word)
    rank = max(word) if rank is None else rank
    check_word(word, rank, len(word))
    stab = stabilizer_order(word)
    return Tensor._trusted(rank, len(word), {w: stab for w in distinct_permutations(word)})


def modified_symmetrization(indices: Sequence[int], parts: Sequence[int], rank: int | None = None) -> Tensor:
    """``(X_{i_1}^{(k_1)} ... X_{i_s}^{(k_s)})*`` as a tensor of degree ``sum(parts)``.

    Equal to the symmetrization of ``i_1^{k_1} ... i_s^{k_s}`` divided by
    ``k_1! ... k_s!``.  Indices need not be distinct; when they collide every
    distinct arrangement gets coefficient ``stabilizer / prod(k_r!)``.
    """
    indices = tuple(indices)
    parts = check_composition(parts)
    if len(indices) != len(parts):
        raise ValueError(f"{len(indices)} indices but {len(parts)} parts")
    word = tuple(itertools.chain.from_iterable([i] * k for i, k in zip(indices, parts)))
    rank = max(indices) if rank is None else rank
    check_word(word, rank, len(word))
    stab = stabilizer_order(word)
    denom = math.prod(math.factorial(k) for k in parts)
    coeff, rem = divmod(stab, denom)
    assert rem == 0, f"stabilizer order {stab} not divisible by {denom}"
    return Tensor._trusted(rank, len(word), {w: coeff for w in distinct_permutations(word)})


def tensor_power(v: Sequence[int], n: int) -> Tensor:
    """Noncommutative expansion of ``(sum_i v_i x_i)^{(x) n}``."""
    rank = len(v)
    if n < 1:
        raise ValueError(f"degree must be positive, got {n}")
    support = [(i + 1, c) for i, c in enumerate(v) if c]
    terms: dict[Word, int] = {}
    for choice in itertools.product(support, repeat=n):
        terms[tuple(letter for letter, _ in choice)] = math.prod(c for _, c in choice)
    return Tensor._trusted(rank, n, terms)


def subset_sum_tensor(subset: Iterable[int], n: int, rank: int | None = None) -> Tensor:
    """``X_I``: every distinct degree-n word using each letter of ``I`` at least once."""
    letters = sorted(set(subset))
    if rank is None:
        rank = max(letters, default=1)
    total = Tensor.zero(rank, n)
    for parts in compositions(n, len(letters)):
        total = total + modified_symmetrization(letters, parts, rank)
    return total


def composition_sum(indices: Sequence[int], n: int, rank: int | None = None) -> Tensor:
    """Sum of ``modified_symmetrization(indices, k)`` over compositions ``k`` of ``n``."""
    indices = tuple(indices)
    rank = max(indices) if rank is None else rank
    total = Tensor.zero(rank, n)
    for parts in compositions(n, len(indices)):
        total = total + modified_symmetrization(indices, parts, rank)
    return total


def mobius_combination(s: int, n: int, rank: int | None = None) -> Tensor:
    """Inclusion-exclusion over subsets of ``{1..s}`` of powers of subset sums.

    Returns ``(-1)^s * sum_J (-1)^{|J|} (sum_{j in J} X_j)^{(x) n}``, which is
    the composition sum of modified symmetrizations on ``(1, .., s)``.
    """
    if s < 1:
        raise ValueError(f"s must be positive, got {s}")
    rank = s if rank is None else rank
    if rank < s:
        raise ValueError(f"rank {rank} smaller than s={s}")
    total = Tensor.zero(rank, n)
    for size in range(1, s + 1):
        sign = (-1) ** (s - size)
        for subset in itertools.combinations(range(s), size):
            v = [0] * rank
            for j in subset:
                v[j] = 1
            total = total + sign * tensor_power(v, n)
    return total


def commutative_image(t: Tensor) -> dict[tuple[int, ...], int]:
    """Merge words with the same letter multiset (image in the symmetric algebra)."""
    image: dict[tuple[int, ...], int] = {}
    for word, coeff in t.items():
        key = tuple(sorted(word))
        image[key] = image.get(key, 0) + coeff
    return {k: c for k, c in sorted(image.items()) if c}

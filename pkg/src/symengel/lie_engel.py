"""Lie rings given by structure constants, and n-Engel tests.

A ring is additively generated by ``x_1..x_m`` with diagonal relations
``d_i x_i = 0`` (``d_i = 0`` means infinite order) and brackets
``[x_i, x_j] = sum_k c_ij^k x_k`` stored for ``i < j`` only.  Elements are
plain tuples of ints of length ``m`` with entry ``i`` reduced into
``[0, d_i)`` whenever ``d_i > 0``.

Indices in the public API (brackets table, multi-indices, generator
numbers) are 1-based; element tuples are ordinary 0-based sequences.
"""
from __future__ import annotations

import itertools
import json
import math
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Mapping, Sequence

from .tensor_core import check_composition, compositions, modified_symmetrization

Element = tuple[int, ...]

DEFAULT_BRUTE_FORCE_CAP = 10**6


class RingFormatError(ValueError):
    """Malformed ring description; ``location`` points into the input."""

    def __init__(self, location: str, message: str):
        super().__init__(f"{location}: {message}")
        self.location = location


class BruteForceCapError(ValueError):
    pass


@dataclass(frozen=True)
class Violation:
    axiom: str
    indices: tuple[int, ...]
    value: Element

    def __str__(self) -> str:
        return f"{self.axiom} fails at {self.indices}: got {self.value}"


class LieRingError(ValueError):
    def __init__(self, violation: Violation):
        super().__init__(str(violation))
        self.violation = violation


@dataclass(frozen=True, eq=False)
class LieRing:
    rank: int
    orders: tuple[int, ...]
    brackets: Mapping[tuple[int, int], Element]
    _table: tuple = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        m = self.rank
        if not isinstance(m, int) or m < 1:
            raise ValueError(f"rank must be a positive integer, got {m!r}")
        orders = tuple(int(d) for d in self.orders)
        if len(orders) != m or any(d < 0 for d in orders):
            raise ValueError(f"need {m} nonnegative orders, got {self.orders}")
        object.__setattr__(self, "orders", orders)
        clean: dict[tuple[int, int], Element] = {}
        table = [[None] * m for _ in range(m)]
        zero = (0,) * m
        for (i, j), value in self.brackets.items():
            if not (1 <= i < j <= m):
                raise ValueError(f"bracket key ({i}, {j}) must satisfy 1 <= i < j <= {m}")
            if len(value) != m:
                raise ValueError(f"bracket ({i}, {j}) has {len(value)} coefficients, expected {m}")
            v = self.reduce(value)
            if any(v):
                clean[(i, j)] = v
        for a in range(m):
            for b in range(m):
                if a < b:
                    table[a][b] = clean.get((a + 1, b + 1), zero)
                elif a > b:
                    table[a][b] = self.reduce(-c for c in clean.get((b + 1, a + 1), zero))
                else:
                    table[a][b] = zero
        object.__setattr__(self, "brackets", clean)
        object.__setattr__(self, "_table", tuple(tuple(r) for r in table))

    @property
    def m(self) -> int:
        return self.rank

    def __eq__(self, other) -> bool:
        if not isinstance(other, LieRing):
            return NotImplemented
        return (self.rank, self.orders, self.brackets) == (other.rank, other.orders, other.brackets)

    def __hash__(self) -> int:
        return hash((self.rank, self.orders, tuple(sorted(self.brackets.items()))))

    @property
    def is_finite(self) -> bool:
        return all(d > 0 for d in self.orders)

    @property
    def size(self) -> int | None:
        return math.prod(self.orders) if self.is_finite else None

    def reduce(self, v) -> Element:
        return tuple(c % d if d else c for c, d in zip(v, self.orders, strict=False))

    def element(self, v: Sequence[int]) -> Element:
        if len(v) != self.rank:
            raise ValueError(f"element {tuple(v)} has length {len(v)}, expected {self.rank}")
        return self.reduce(v)

    def generator(self, i: int) -> Element:
        """The element ``x_i`` (1-based)."""
        return self.reduce(int(k == i - 1) for k in range(self.rank))

    def zero(self) -> Element:
        return (0,) * self.rank

    def generators(self) -> list[Element]:
        return [self.generator(i) for i in range(1, self.rank + 1)]

    def elements(self):
        """Every element of a finite ring, in lexicographic coefficient order."""
        if not self.is_finite:
            raise ValueError("ring has generators of infinite order")
        return itertools.product(*(range(d) for d in self.orders))

    def add(self, a: Element, b: Element) -> Element:
        return self.reduce(x + y for x, y in zip(a, b))

    def scale(self, k: int, a: Element) -> Element:
        return self.reduce(k * x for x in a)

    def ad_matrix(self, x: Element) -> list[list[int]]:
        """Matrix ``A`` with ``[x, y]_k = sum_j A[k][j] y_j`` (before reduction)."""
        m = self.rank
        cols = []
        for j in range(m):
            col = [0] * m
            for i, xi in enumerate(x):
                if xi:
                    for k, c in enumerate(self._table[i][j]):
                        if c:
                            col[k] += xi * c
            cols.append(col)
        return [[cols[j][k] for j in range(m)] for k in range(m)]

    def apply(self, matrix: list[list[int]], y: Element) -> Element:
        return self.reduce(sum(a * b for a, b in zip(row, y) if a and b) for row in matrix)


def bracket(ring: LieRing, a: Element, b: Element) -> Element:
    out = [0] * ring.rank
    table = ring._table
    for i, ai in enumerate(a):
        if not ai:
            continue
        for j, bj in enumerate(b):
            if not bj or i == j:
                continue
            for k, c in enumerate(table[i][j]):
                if c:
                    out[k] += ai * bj * c
    return ring.reduce(out)


def validate(ring: LieRing) -> Violation | None:
    """First violated axiom on generators, or ``None``.

    Checks that ``d_i [x_i, x_j] = 0`` (so the bracket respects the additive
    relations), anticommutativity of the stored table, and the Jacobi
    identity on all generator triples.
    """
    m = ring.rank
    gens = ring.generators()
    for i in range(m):
        if ring.orders[i]:
            for j in range(m):
                v = ring.scale(ring.orders[i], bracket(ring, gens[i], gens[j]))
                if any(v):
                    return Violation("order-compatibility", (i + 1, j + 1), v)
    for i in range(m):
        for j in range(m):
            v = ring.add(bracket(ring, gens[i], gens[j]), bracket(ring, gens[j], gens[i]))
            if any(v) or (i == j and any(bracket(ring, gens[i], gens[i]))):
                return Violation("anticommutativity", (i + 1, j + 1), v)
    for i, j, k in itertools.combinations(range(m), 3):
        x, y, z = gens[i], gens[j], gens[k]
        total = ring.add(
            ring.add(bracket(ring, x, bracket(ring, y, z)), bracket(ring, y, bracket(ring, z, x))),
            bracket(ring, z, bracket(ring, x, y)),
        )
        if any(total):
            return Violation("Jacobi", (i + 1, j + 1, k + 1), total)
    return None


def make_ring(rank: int, orders: Sequence[int], brackets: Mapping[tuple[int, int], Sequence[int]]) -> LieRing:
    """Build a :class:`LieRing` and reject it if an axiom fails."""
    ring = LieRing(rank, tuple(orders), {k: tuple(v) for k, v in brackets.items()})
    violation = validate(ring)
    if violation is not None:
        raise LieRingError(violation)
    return ring


def engel_bracket(ring: LieRing, x: Element, n: int, y: Element) -> Element:
    """``(ad x)^n y = [x, [x, ... [x, y]]]``."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    for _ in range(n):
        y = bracket(ring, x, y)
    return y


def _arrangement_sum(ring: LieRing, counts: tuple[int, ...], y: Element, memo: dict) -> Element:
    # Sum over all distinct words w with letter multiplicities ``counts`` of
    # [x_{w_1} [x_{w_2} ... [x_{w_n} y]]].  Splitting off the outermost letter
    # gives sum_l ad(x_l) applied to the sum for counts - e_l.
    if not any(counts):
        return y
    hit = memo.get(counts)
    if hit is not None:
        return hit
    total = ring.zero()
    for letter, c in enumerate(counts):
        if c:
            rest = counts[:letter] + (c - 1,) + counts[letter + 1:]
            inner = _arrangement_sum(ring, rest, y, memo)
            if any(inner):
                total = ring.add(total, bracket(ring, ring.generator(letter + 1), inner))
    memo[counts] = total
    return total


def symmetrized_engel_term(
    ring: LieRing, indices: Sequence[int], parts: Sequence[int], y: Element, memo: dict | None = None
) -> Element:
    """``[(x_{j_1}^{(k_1)} .. x_{j_s}^{(k_s)})* y]``.

    Sums the right-normed brackets over the words of the modified
    symmetrization.  All those words share one coefficient (1 when the
    indices are distinct), so the sum runs over letter multiplicities
    instead of materializing each word.  ``memo`` may be shared between
    calls with the same ``y``.
    """
    indices = tuple(indices)
    parts = check_composition(parts)
    if len(indices) != len(parts):
        raise ValueError(f"{len(indices)} indices but {len(parts)} parts")
    counts = [0] * ring.rank
    for j, k in zip(indices, parts):
        counts[j - 1] += k
    coeff = math.prod(math.factorial(c) for c in counts) // math.prod(math.factorial(k) for k in parts)
    return ring.scale(coeff, _arrangement_sum(ring, tuple(counts), y, {} if memo is None else memo))


def symmetrized_engel_term_by_words(ring: LieRing, indices: Sequence[int], parts: Sequence[int], y: Element) -> Element:
    """Same value as :func:`symmetrized_engel_term`, word by word."""
    total = ring.zero()
    for word, coeff in modified_symmetrization(indices, parts, ring.rank).items():
        v = y
        for letter in reversed(word):
            v = bracket(ring, ring.generator(letter), v)
        total = ring.add(total, ring.scale(coeff, v))
    return total


def cg_condition(
    ring: LieRing,
    indices: Sequence[int],
    n: int,
    y: Element,
    signs: Sequence[int] | None = None,
    memo: dict | None = None,
) -> Element:
    """Sum over compositions ``k`` of ``n`` of the (optionally signed) terms.

    With ``signs = (p_1..p_s)`` each term is weighted by ``prod p_r^{k_r}``.
    """
    memo = {} if memo is None else memo
    total = ring.zero()
    for parts in compositions(n, len(indices)):
        weight = 1
        if signs is not None:
            weight = math.prod(p**k for p, k in zip(signs, parts))
        term = symmetrized_engel_term(ring, indices, parts, y, memo)
        total = ring.add(total, ring.scale(weight, term))
    return total


@dataclass(frozen=True)
class EngelVerdict:
    holds: bool
    witness: tuple | None = None

    def __bool__(self) -> bool:
        return self.holds


def _multi_indices(m: int, n: int):
    for s in range(1, n + 1):
        yield from itertools.combinations_with_replacement(range(1, m + 1), s)


def cg_engel_test(ring: LieRing, n: int) -> EngelVerdict:
    """n-Engel test through the composition-sum conditions.

    One condition per weakly increasing multi-index of length ``1..n`` and
    per generator ``y``.  The witness is the first failure ``(indices,
    y_index, value)`` in the order: length, multi-index, generator.
    """
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    gens = ring.generators()
    memos = [{} for _ in gens]
    for indices in _multi_indices(ring.rank, n):
        for yi, y in enumerate(gens, start=1):
            value = cg_condition(ring, indices, n, y, memo=memos[yi - 1])
            if any(value):
                return EngelVerdict(False, (indices, yi, value))
    return EngelVerdict(True)


def cg_pm_engel_test(ring: LieRing, n: int) -> EngelVerdict:
    """Signed variant: every choice of ``p_r = +-1`` per position."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    gens = ring.generators()
    memos = [{} for _ in gens]
    for indices in _multi_indices(ring.rank, n):
        for signs in itertools.product((1, -1), repeat=len(indices)):
            for yi, y in enumerate(gens, start=1):
                value = cg_condition(ring, indices, n, y, signs, memos[yi - 1])
                if any(value):
                    return EngelVerdict(False, (indices, signs, yi, value))
    return EngelVerdict(True)


def brute_force_engel_test(ring: LieRing, n: int, cap: int = DEFAULT_BRUTE_FORCE_CAP) -> EngelVerdict:
    """Check ``(ad x)^n y = 0`` for every element ``x`` and generator ``y``."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    if not ring.is_finite:
        raise ValueError("brute force needs every generator to have finite order")
    if ring.size > cap:
        raise BruteForceCapError(f"ring has {ring.size} elements, above the cap of {cap}")
    gens = ring.generators()
    for x in ring.elements():
        ad = ring.ad_matrix(x)
        for yi, y in enumerate(gens, start=1):
            v = y
            for _ in range(n):
                v = ring.apply(ad, v)
                if not any(v):
                    break
            if any(v):
                return EngelVerdict(False, (x, yi, v))
    return EngelVerdict(True)


def quotient_mod_t(ring: LieRing, t: int) -> LieRing:
    """``L / tL``: orders become ``gcd(d_i, t)`` (or ``t`` for infinite order)."""
    if t < 1:
        raise ValueError(f"t must be positive, got {t}")
    orders = tuple(math.gcd(d, t) if d else t for d in ring.orders)
    return make_ring(ring.rank, orders, ring.brackets)


@lru_cache(maxsize=None)
def condition_count(m: int, n: int) -> int:
    """Conditions per ``y`` in the composition-sum test: ``C(m+n, n) - 1``."""
    if m < 1 or n < 1:
        raise ValueError(f"need m >= 1 and n >= 1, got m={m}, n={n}")
    total = sum(math.comb(m + s - 1, s) for s in range(1, n + 1))
    assert total == math.comb(m + n, n) - 1
    return total


def signed_condition_count(m: int, n: int) -> int:
    """Conditions per ``y`` in the signed test: ``sum_s 2^s C(m+s-1, s)``."""
    return sum(2**s * math.comb(m + s - 1, s) for s in range(1, n + 1))


# ring files

_TOP_KEYS = {"rank", "orders", "brackets"}
_BRACKET_KEYS = {"i", "j", "value"}


def _no_duplicate_keys(pairs):
    out = {}
    for k, v in pairs:
        if k in out:
            raise RingFormatError(f"key {k!r}", "duplicate key")
        out[k] = v
    return out


def _int(value, location: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise RingFormatError(location, f"expected an integer, got {value!r}")
    return value


def ring_from_dict(data) -> LieRing:
    if not isinstance(data, dict):
        raise RingFormatError("$", "top level must be an object")
    extra = set(data) - _TOP_KEYS
    if extra:
        raise RingFormatError("$", f"unknown keys {sorted(extra)}")
    missing = _TOP_KEYS - set(data)
    if missing:
        raise RingFormatError("$", f"missing keys {sorted(missing)}")
    m = _int(data["rank"], "rank")
    if m < 1:
        raise RingFormatError("rank", "must be positive")
    orders = data["orders"]
    if not isinstance(orders, list) or len(orders) != m:
        raise RingFormatError("orders", f"expected a list of {m} integers")
    orders = [_int(d, f"orders[{i}]") for i, d in enumerate(orders)]
    if any(d < 0 for d in orders):
        raise RingFormatError("orders", "orders must be nonnegative")
    if not isinstance(data["brackets"], list):
        raise RingFormatError("brackets", "expected a list")
    table: dict[tuple[int, int], tuple[int, ...]] = {}
    for pos, entry in enumerate(data["brackets"]):
        where = f"brackets[{pos}]"
        if not isinstance(entry, dict):
            raise RingFormatError(where, "expected an object")
        if set(entry) != _BRACKET_KEYS:
            raise RingFormatError(where, f"keys must be exactly {sorted(_BRACKET_KEYS)}, got {sorted(entry)}")
        i, j = _int(entry["i"], f"{where}.i"), _int(entry["j"], f"{where}.j")
        if not 1 <= i < j <= m:
            raise RingFormatError(where, f"need 1 <= i < j <= {m}, got i={i}, j={j}")
        if (i, j) in table:
            raise RingFormatError(where, f"duplicate bracket ({i}, {j})")
        value = entry["value"]
        if not isinstance(value, list) or len(value) != m:
            raise RingFormatError(f"{where}.value", f"expected a list of {m} integers")
        table[(i, j)] = tuple(_int(c, f"{where}.value[{k}]") for k, c in enumerate(value))
    ring = LieRing(m, tuple(orders), table)
    violation = validate(ring)
    if violation is not None:
        raise RingFormatError("$", f"not a Lie ring: {violation}")
    return ring


def loads_ring(text: str) -> LieRing:
    try:
        data = json.loads(text, object_pairs_hook=_no_duplicate_keys)
    except json.JSONDecodeError as exc:
        raise RingFormatError(f"line {exc.lineno} column {exc.colno}", exc.msg) from None
    return ring_from_dict(data)


def load_ring(path) -> LieRing:
    with open(path, encoding="utf-8") as fh:
        return loads_ring(fh.read())


def ring_to_dict(ring: LieRing) -> dict:
    return {
        "rank": ring.rank,
        "orders": list(ring.orders),
        "brackets": [{"i": i, "j": j, "value": list(v)} for (i, j), v in sorted(ring.brackets.items())],
    }


def dumps_ring(ring: LieRing) -> str:
    return json.dumps(ring_to_dict(ring))


# Standard examples used by the tests and the CLI.

def abelian_ring(m: int, t: int = 0) -> LieRing:
    return make_ring(m, [t] * m, {})


def heisenberg_ring(t: int = 0) -> LieRing:
    return make_ring(3, [t] * 3, {(1, 2): (0, 0, 1)})


def solvable_ring(t: int) -> LieRing:
    """Two generators with ``[x1, x2] = x1``."""
    return make_ring(2, [t, t], {(1, 2): (1, 0)})


def free_nilpotent_class2(g: int, t: int = 0) -> LieRing:
    """Free nilpotent class-2 ring on ``g`` generators, reduced mod ``t``.

    Basis: ``x_1..x_g`` followed by ``[x_a, x_b]`` for ``a < b``.
    """
    pairs = list(itertools.combinations(range(1, g + 1), 2))
    m = g + len(pairs)
    brackets = {}
    for pos, (a, b) in enumerate(pairs):
        v = [0] * m
        v[g + pos] = 1
        brackets[(a, b)] = tuple(v)
    return make_ring(m, [t] * m, brackets)


def free_nilpotent_class3_rank2(t: int = 0) -> LieRing:
    """Free nilpotent class-3 ring on two generators, reduced mod ``t``.

    Basis: ``x1, x2, x3 = [x1 x2], x4 = [x1 x3], x5 = [x2 x3]``.
    """
    return make_ring(
        5,
        [t] * 5,
        {(1, 2): (0, 0, 1, 0, 0), (1, 3): (0, 0, 0, 1, 0), (2, 3): (0, 0, 0, 0, 1)},
    )


def sl2_ring(t: int = 0) -> LieRing:
    """``e, f, h`` with ``[e, f] = h``, ``[h, e] = 2e``, ``[h, f] = -2f``."""
    # generators ordered (e, f, h): [x1,x3] = [e,h] = -2e, [x2,x3] = [f,h] = 2f
    return make_ring(3, [t] * 3, {(1, 2): (0, 0, 1), (1, 3): (-2, 0, 0), (2, 3): (0, 2, 0)})

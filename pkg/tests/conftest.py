from __future__ import annotations

import itertools
import random

import pytest

from nongrs.field import build_field


def digits(a: int, p: int, m: int) -> list[int]:
    return [(a // p**i) % p for i in range(m)]


def undigits(d, p: int) -> int:
    return sum(c * p**i for i, c in enumerate(d))


def oracle_mul(a: int, b: int, p: int, modulus) -> int:
    """Schoolbook product of encodings reduced by a monic modulus."""
    m = len(modulus) - 1
    x, y = digits(a, p, m), digits(b, p, m)
    prod = [0] * (2 * m - 1)
    for i, xi in enumerate(x):
        for j, yj in enumerate(y):
            prod[i + j] = (prod[i + j] + xi * yj) % p
    for top in range(len(prod) - 1, m - 1, -1):
        c = prod[top]
        if c:
            for i in range(m + 1):
                prod[top - m + i] = (prod[top - m + i] - c * modulus[i]) % p
    return undigits(prod[:m], p)


def oracle_add(a: int, b: int, p: int, m: int) -> int:
    return undigits([(x + y) % p for x, y in zip(digits(a, p, m), digits(b, p, m))], p)


def naive_weights(code) -> list[int]:
    """Weight distribution by plain message enumeration (tiny codes only)."""
    F = code.field
    G = code.generator.tolist()
    counts = [0] * (code.length + 1)
    for msg in itertools.product(range(F.q), repeat=code.dimension):
        word = [0] * code.length
        for c, row in zip(msg, G):
            for j, g in enumerate(row):
                word[j] = F.add(word[j], F.mul(c, g))
        counts[sum(1 for x in word if x)] += 1
    return counts


SMALL_FIELDS = [(2, 1), (3, 1), (5, 1), (7, 1), (2, 2), (2, 3), (3, 2), (2, 4), (5, 2), (3, 3)]


@pytest.fixture
def rng():
    return random.Random(12345)


@pytest.fixture(params=SMALL_FIELDS, ids=lambda pm: f"GF({pm[0]}^{pm[1]})")
def small_field(request):
    return build_field(*request.param)

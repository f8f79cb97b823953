"""Finite fields F_{p^m} in a polynomial basis.

Elements are plain Python ints: the element ``sum c_i x^i`` is encoded as
``sum c_i p^i``.  Encoding 0 is the additive identity and 1 the
multiplicative identity.  Every :class:`FieldSpec` offers scalar operations
(``add``, ``mul``, ...) and numpy-vectorised counterparts (``add_v``,
``mul_v``, ...) that act elementwise on integer arrays of encodings.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Sequence

import numpy as np

from .errors import ValidationError

MAX_FIELD_SIZE = 1 << 20
TABLE_LIMIT = 1 << 16  # log/antilog tables at or below this size
ADD_TABLE_LIMIT = 1 << 12  # dense addition table at or below this size


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def prime_factors(n: int) -> list[int]:
    """Distinct prime factors of ``n`` in increasing order."""
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1
    if n > 1:
        out.append(n)
    return out


# -- polynomials over F_p as coefficient lists, lowest degree first ---------


def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _pmod(a: list[int], f: list[int], p: int) -> list[int]:
    a = _trim([c % p for c in a])
    df = len(f) - 1
    inv_lead = pow(f[-1], p - 2, p)
    while len(a) - 1 >= df:
        c = a[-1] * inv_lead % p
        shift = len(a) - 1 - df
        for i, fc in enumerate(f):
            a[shift + i] = (a[shift + i] - c * fc) % p
        _trim(a)
    return a


def _pmul(a: list[int], b: list[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return _trim(out)


def _pgcd(a: list[int], b: list[int], p: int) -> list[int]:
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        a, b = b, _pmod(a, b, p)
    return a


def _ppowmod(base: list[int], e: int, f: list[int], p: int) -> list[int]:
    result = [1]
    base = _pmod(base, f, p)
    while e:
        if e & 1:
            result = _pmod(_pmul(result, base, p), f, p)
        base = _pmod(_pmul(base, base, p), f, p)
        e >>= 1
    return result


def is_irreducible(coeffs: Sequence[int], p: int) -> bool:
    """Ben-Or test: ``f`` is irreducible iff gcd(x^{p^i} - x, f) = 1 for i <= m/2."""
    f = _trim([c % p for c in coeffs])
    m = len(f) - 1
    if m < 1:
        return False
    if m == 1:
        return True
    if f[0] == 0:
        return False
    xp = [0, 1]
    for _ in range(m // 2):
        xp = _ppowmod(xp, p, f, p)
        diff = list(xp) + [0] * max(0, 2 - len(xp))
        diff[1] = (diff[1] - 1) % p
        if len(_pgcd(f, _trim(diff), p)) > 1:
            return False
    return True


@lru_cache(maxsize=None)
def default_modulus(p: int, m: int) -> tuple[int, ...]:
    """Smallest monic irreducible of degree ``m``, ordering c_0..c_{m-1} by
    the integer ``sum c_i p^i``."""
    for enc in range(p**m):
        coeffs = [(enc // p**i) % p for i in range(m)] + [1]
        if is_irreducible(coeffs, p):
            return tuple(coeffs)
    raise AssertionError("no irreducible polynomial found")  # pragma: no cover


class FieldSpec:
    """The field F_{p^m} = F_p[x]/(modulus).

    Construct with :func:`build_field`.  Instances are immutable and safe to
    share between threads.
    """

    def __init__(self, p: int, m: int, modulus: Sequence[int] | None = None,
                 max_size: int = MAX_FIELD_SIZE):
        if not isinstance(p, int) or not is_prime(p):
            raise ValidationError(f"characteristic {p} is not prime")
        if not isinstance(m, int) or m < 1:
            raise ValidationError(f"extension degree {m} must be a positive integer")
        q = p**m
        if q > max_size:
            raise ValidationError(f"field size {q} exceeds the bound {max_size}")
        if modulus is None:
            modulus = default_modulus(p, m)
        else:
            modulus = tuple(int(c) % p for c in modulus)
            if len(modulus) != m + 1 or modulus[-1] != 1:
                raise ValidationError(f"modulus must be monic of degree {m}, got {list(modulus)}")
            if not is_irreducible(modulus, p):
                raise ValidationError(f"modulus {list(modulus)} is reducible over F_{p}")
        self.p = p
        self.m = m
        self.q = q
        self.modulus = tuple(modulus)
        self._pw = [p**i for i in range(m + 1)]
        # x^m = -sum_{i<m} c_i x^i
        self._red = [(-c) % p for c in self.modulus[:m]]
        self._exp: list[int] | None = None
        self._log: list[int] | None = None
        self._exp_np = self._log_np = None
        self.primitive_element = self._find_primitive()
        if q <= TABLE_LIMIT:
            self._build_tables()
        self._add_np = None
        self._neg_np = None
        if p != 2 and m > 1 and q <= ADD_TABLE_LIMIT:
            r = np.arange(q, dtype=np.int64)
            self._add_np = self._add_digits_v(r[:, None], r[None, :])
            self._neg_np = self._neg_digits_v(r)

    # -- identity ----------------------------------------------------------

    def __repr__(self) -> str:
        return f"FieldSpec(p={self.p}, m={self.m}, modulus={list(self.modulus)})"

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, FieldSpec) and self.p == other.p
                and self.m == other.m and self.modulus == other.modulus)

    def __hash__(self) -> int:
        return hash((self.p, self.m, self.modulus))

    def to_json(self) -> dict:
        return {"p": self.p, "m": self.m, "modulus": list(self.modulus)}

    @classmethod
    def from_json(cls, data: dict) -> "FieldSpec":
        return build_field(int(data["p"]), int(data["m"]), data.get("modulus"))

    # -- generic (table-free) arithmetic -----------------------------------

    def _digits(self, a: int) -> list[int]:
        p = self.p
        return [(a // w) % p for w in self._pw[:self.m]]

    def _undigits(self, d: Iterable[int]) -> int:
        return sum(c * w for c, w in zip(d, self._pw))

    def _mul_generic(self, a: int, b: int) -> int:
        if self.m == 1:
            return a * b % self.p
        p, m = self.p, self.m
        da, db = self._digits(a), self._digits(b)
        c = [0] * (2 * m - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    c[i + j] += x * y
        for t in range(2 * m - 2, m - 1, -1):
            ct = c[t] % p
            if ct:
                for i, r in enumerate(self._red):
                    c[t - m + i] += ct * r
        return self._undigits(x % p for x in c[:m])

    def _pow_generic(self, a: int, e: int) -> int:
        result = 1
        while e:
            if e & 1:
                result = self._mul_generic(result, a)
            a = self._mul_generic(a, a)
            e >>= 1
        return result

    def _find_primitive(self) -> int:
        n = self.q - 1
        if n == 1:
            return 1
        factors = prime_factors(n)
        for g in range(2, self.q):
            if all(self._pow_generic(g, n // r) != 1 for r in factors):
                return g
        raise AssertionError("no primitive element")  # pragma: no cover

    def _build_tables(self) -> None:
        n = self.q - 1
        exp = np.ones(n, dtype=np.int64)
        g = self.primitive_element
        filled = 1
        while filled < n:
            step = self._mul_generic(int(exp[filled - 1]), g)
            take = min(filled, n - filled)
            exp[filled:filled + take] = self._mul_v_generic(exp[:take], step)
            filled += take
        log = np.zeros(self.q, dtype=np.int64)
        log[exp] = np.arange(n, dtype=np.int64)
        if len(set(exp.tolist())) != n:  # pragma: no cover
            raise AssertionError("primitive element does not generate the group")
        self._exp_np = np.concatenate([exp, exp])
        self._log_np = log
        self._exp = self._exp_np.tolist()
        self._log = log.tolist()

    # -- scalar operations -------------------------------------------------

    def add(self, a: int, b: int) -> int:
        p = self.p
        if p == 2:
            return a ^ b
        if self.m == 1:
            return (a + b) % p
        r = 0
        for w in self._pw[:self.m]:
            r += ((a // w + b // w) % p) * w
        return r

    def neg(self, a: int) -> int:
        p = self.p
        if p == 2:
            return a
        if self.m == 1:
            return (-a) % p
        r = 0
        for w in self._pw[:self.m]:
            r += ((-(a // w)) % p) * w
        return r

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        if self.m == 1:
            return a * b % self.p
        if self._exp is not None:
            return self._exp[self._log[a] + self._log[b]]
        return self._mul_generic(a, b)

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inversion of zero in a finite field")
        if self.m == 1:
            return pow(a, self.p - 2, self.p)
        if self._exp is not None:
            return self._exp[(self.q - 1 - self._log[a]) % (self.q - 1)]
        return self._pow_generic(a, self.q - 2)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            a, e = self.inv(a), -e
        if e == 0:
            return 1
        if a == 0:
            return 0
        if self._exp is not None:
            return self._exp[(self._log[a] * e) % (self.q - 1)]
        return self._pow_generic(a, e % (self.q - 1) or (self.q - 1))

    def log(self, a: int) -> int:
        """Discrete logarithm of ``a`` to the base ``primitive_element``."""
        if a == 0:
            raise ValueError("log of zero")
        if self._log is not None:
            return self._log[a]
        x, g = 1, self.primitive_element
        for e in range(self.q - 1):
            if x == a:
                return e
            x = self._mul_generic(x, g)
        raise AssertionError("unreachable")  # pragma: no cover

    def power(self, e: int) -> int:
        """``primitive_element ** e``."""
        return self.pow(self.primitive_element, e)

    @property
    def x(self) -> int:
        """The residue class of the indeterminate x."""
        if self.m > 1:
            return self.p
        return (-self.modulus[0]) % self.p

    def total(self, values: Iterable[int]) -> int:
        s = 0
        for v in values:
            s = self.add(s, v)
        return s

    def prod(self, values: Iterable[int]) -> int:
        s = 1
        for v in values:
            s = self.mul(s, v)
        return s

    def from_int(self, n: int) -> int:
        """Image of the integer ``n`` in the prime subfield."""
        return n % self.p

    def element(self, token) -> int:
        """Parse an element given as an encoding or as ``"w^e"`` / ``"w"``,
        a power of the primitive element."""
        if isinstance(token, bool):
            raise ValidationError(f"not a field element: {token!r}")
        if isinstance(token, int):
            value = token
        elif isinstance(token, str):
            t = token.strip().replace(" ", "")
            if t in ("w", "ω"):
                return self.primitive_element
            if t.startswith(("w^", "ω^")):
                try:
                    return self.power(int(t[2:]))
                except ValueError:
                    raise ValidationError(f"not a field element: {token!r}") from None
            try:
                value = int(t)
            except ValueError:
                raise ValidationError(f"not a field element: {token!r}") from None
        else:
            raise ValidationError(f"not a field element: {token!r}")
        if not 0 <= value < self.q:
            raise ValidationError(f"encoding {value} outside [0, {self.q})")
        return value

    def elements(self) -> list[int]:
        return list(range(self.q))

    # -- squares and subfields ---------------------------------------------

    def is_square(self, a: int) -> bool:
        if self.p == 2 or a == 0:
            return True
        return self.pow(a, (self.q - 1) // 2) == 1

    def sqrt(self, a: int) -> int | None:
        """A square root of ``a``, the one with the smaller encoding, or None."""
        if a == 0:
            return 0
        if self.p == 2:
            return self.pow(a, self.q // 2)
        if not self.is_square(a):
            return None
        if self._log is not None:
            r = self._exp[self._log[a] // 2]
        else:
            r = self._tonelli_shanks(a)
        return min(r, self.neg(r))

    def _tonelli_shanks(self, a: int) -> int:
        s, t = 0, self.q - 1
        while t % 2 == 0:
            s, t = s + 1, t // 2
        z = self.primitive_element  # a non-square
        c = self.pow(z, t)
        x = self.pow(a, (t + 1) // 2)
        b = self.pow(a, t)
        while b != 1:
            i, b2 = 0, b
            while b2 != 1:
                b2 = self.mul(b2, b2)
                i += 1
            for _ in range(s - i - 1):
                c = self.mul(c, c)
            x = self.mul(x, c)
            c = self.mul(c, c)
            b = self.mul(b, c)
            s = i
        return x

    def subfield_elements(self, r: int) -> list[int]:
        """The p^r elements of the subfield F_{p^r}, sorted by encoding."""
        if r < 1 or self.m % r:
            raise ValidationError(f"subfield degree {r} does not divide {self.m}")
        size = self.p**r
        g = self.power((self.q - 1) // (size - 1))
        out = {0}
        y = 1
        for _ in range(size - 1):
            out.add(y)
            y = self.mul(y, g)
        return sorted(out)

    def in_subfield(self, a: int, r: int) -> bool:
        return self.pow(a, self.p**r) == a

    # -- vectorised operations ---------------------------------------------

    def _split_v(self, a: np.ndarray) -> list[np.ndarray]:
        return [(a // w) % self.p for w in self._pw[:self.m]]

    def _join_v(self, digits: list[np.ndarray]) -> np.ndarray:
        out = digits[0] % self.p
        for d, w in zip(digits[1:], self._pw[1:]):
            out = out + (d % self.p) * w
        return out

    def _add_digits_v(self, a, b):
        da, db = self._split_v(np.asarray(a)), self._split_v(np.asarray(b))
        return self._join_v([x + y for x, y in zip(da, db)])

    def _neg_digits_v(self, a):
        return self._join_v([-x for x in self._split_v(np.asarray(a))])

    def _mul_v_generic(self, a, b):
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        p, m = self.p, self.m
        if m == 1:
            return (a * b) % p
        da, db = self._split_v(a), self._split_v(b)
        c = [None] * (2 * m - 1)
        for i in range(m):
            for j in range(m):
                term = da[i] * db[j]
                c[i + j] = term if c[i + j] is None else c[i + j] + term
        for t in range(2 * m - 2, m - 1, -1):
            ct = c[t] % p
            for i, r in enumerate(self._red):
                if r:
                    c[t - m + i] = c[t - m + i] + ct * r
        return self._join_v(c[:m])

    def add_v(self, a, b) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        if self.p == 2:
            return a ^ b
        if self.m == 1:
            return (a + b) % self.p
        if self._add_np is not None:
            return self._add_np[a, b]
        return self._add_digits_v(a, b)

    def neg_v(self, a) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        if self.p == 2:
            return a
        if self.m == 1:
            return (-a) % self.p
        if self._neg_np is not None:
            return self._neg_np[a]
        return self._neg_digits_v(a)

    def sub_v(self, a, b) -> np.ndarray:
        return self.add_v(a, self.neg_v(b))

    def mul_v(self, a, b) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        if self.m == 1:
            return (a * b) % self.p
        if self._exp_np is not None:
            prod = self._exp_np[self._log_np[a] + self._log_np[b]]
            return np.where((a == 0) | (b == 0), 0, prod)
        return self._mul_v_generic(a, b)


def build_field(p: int, m: int = 1, modulus: Sequence[int] | None = None,
                max_size: int = MAX_FIELD_SIZE) -> FieldSpec:
    """Construct F_{p^m}.

    Without ``modulus`` the smallest monic irreducible polynomial is used
    (coefficients c_0..c_{m-1} ordered as the integer sum c_i p^i), so
    ``build_field(2, 4)`` works modulo x^4 + x + 1.  ``modulus`` is given
    lowest coefficient first and must be monic and irreducible.
    """
    return _cached_field(p, m, None if modulus is None else tuple(int(c) for c in modulus),
                         max_size)


@lru_cache(maxsize=64)
def _cached_field(p, m, modulus, max_size):
    return FieldSpec(p, m, modulus, max_size)

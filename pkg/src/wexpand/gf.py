"""Finite fields GF(p^k) with table-driven discrete logarithms.

Elements are polynomials over Z_p reduced modulo a fixed monic irreducible
polynomial.  They are encoded as integers ``sum(c[i] * p**i)``; that encoding
is what every file format and every construction in this package sees.

The modulus is the lexicographically smallest monic irreducible polynomial of
degree k (coefficients compared constant term first) and the generator is the
smallest primitive element in the same order, so ``field_new(p, k)`` is fully
deterministic.
"""

from __future__ import annotations

import functools
import itertools

from .errors import (
    DegreeZero,
    DivisionByZero,
    DlogOfZero,
    FieldMismatch,
    FieldTooLarge,
    NotPrime,
    NotPrimePower,
)

MAX_ORDER = 1 << 20


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def prime_power(q: int) -> tuple[int, int]:
    """Return ``(p, k)`` with ``q == p**k``, or raise NotPrimePower."""
    if q < 2:
        raise NotPrimePower(q)
    p = next(d for d in range(2, q + 1) if q % d == 0)
    k, r = 0, q
    while r % p == 0:
        r //= p
        k += 1
    if r != 1:
        raise NotPrimePower(q)
    return p, k


def is_prime_power(q: int) -> bool:
    try:
        prime_power(q)
    except NotPrimePower:
        return False
    return True


def _prime_factors(n: int) -> list[int]:
    out, d = [], 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


# -- polynomials over Z_p, coefficient tuples with constant term first -------


def _trim(c):
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return c


def _polymod(a, m, p):
    a = _trim(a)
    m = _trim(m)
    inv_lead = pow(m[-1], -1, p)
    while len(a) >= len(m):
        f = a[-1] * inv_lead % p
        shift = len(a) - len(m)
        for i, mi in enumerate(m):
            a[shift + i] = (a[shift + i] - f * mi) % p
        a = _trim(a)
    return a


def _is_irreducible(m, p) -> bool:
    k = len(m) - 1
    for d in range(1, k // 2 + 1):
        for low in itertools.product(range(p), repeat=d):
            if not _polymod(m, list(low) + [1], p):
                return False
    return True


def _smallest_irreducible(p: int, k: int) -> tuple[int, ...]:
    # itertools.product varies the last position fastest; reverse to make the
    # constant term the most significant key.
    for rev in itertools.product(range(p), repeat=k):
        low = tuple(reversed(rev))
        if k > 1 and low[0] == 0:
            continue
        m = low + (1,)
        if _is_irreducible(m, p):
            return m
    raise AssertionError(f"no irreducible polynomial of degree {k} over Z_{p}")


class FiniteField:
    """GF(p^k).  Construct through :func:`field_new`."""

    def __init__(self, p: int, k: int, modulus: tuple[int, ...]):
        self.p = p
        self.k = k
        self.q = p**k
        self.modulus = modulus
        self._pows = [p**i for i in range(k)]
        self._exp, self._log = self._power_tables()
        self.generator = FieldElem(self._coeffs(self._exp[1] if self.q > 2 else 1), self)

    def __repr__(self):
        return f"GF({self.p}^{self.k})" if self.k > 1 else f"GF({self.p})"

    def __eq__(self, other):
        return isinstance(other, FiniteField) and (self.p, self.k) == (other.p, other.k)

    def __hash__(self):
        return hash((self.p, self.k))

    # -- integer-encoded arithmetic, used by the constructions ---------------

    def _coeffs(self, a: int) -> tuple[int, ...]:
        return tuple((a // self._pows[i]) % self.p for i in range(self.k))

    def _index(self, coeffs) -> int:
        return sum(c * w for c, w in zip(coeffs, self._pows))

    def _polymul_index(self, a: int, b: int) -> int:
        ca, cb = self._coeffs(a), self._coeffs(b)
        prod = [0] * (2 * self.k - 1)
        for i, x in enumerate(ca):
            if x:
                for j, y in enumerate(cb):
                    prod[i + j] = (prod[i + j] + x * y) % self.p
        r = _polymod(prod, self.modulus, self.p)
        return self._index(r + [0] * (self.k - len(r)))

    def _power_tables(self):
        q = self.q
        order = q - 1
        factors = _prime_factors(order)

        def pw(a, e):
            r = 1
            while e:
                if e & 1:
                    r = self._polymul_index(r, a)
                a = self._polymul_index(a, a)
                e >>= 1
            return r

        candidates = sorted(range(1, q), key=self._coeffs)
        gen = next(g for g in candidates if all(pw(g, order // r) != 1 for r in factors))
        exp = [1] * order
        for i in range(1, order):
            exp[i] = self._polymul_index(exp[i - 1], gen)
        log = [-1] * q
        for i, a in enumerate(exp):
            log[a] = i
        return exp, log

    def add(self, a: int, b: int) -> int:
        if self.k == 1:
            return (a + b) % self.p
        p = self.p
        return sum(((a // w) % p + (b // w) % p) % p * w for w in self._pows)

    def neg(self, a: int) -> int:
        if self.k == 1:
            return -a % self.p
        p = self.p
        return sum((-(a // w)) % p * w for w in self._pows)

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self._exp[(self._log[a] + self._log[b]) % (self.q - 1)]

    def inv(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero("inverse of zero")
        return self._exp[-self._log[a] % (self.q - 1)]

    def log(self, a: int) -> int:
        if a == 0:
            raise DlogOfZero("discrete log of zero")
        return self._log[a]

    def exp(self, e: int) -> int:
        return self._exp[e % (self.q - 1)]

    # -- element-level API ----------------------------------------------------

    def __call__(self, value) -> FieldElem:
        if isinstance(value, FieldElem):
            if value.field != self:
                raise FieldMismatch(f"{value.field} vs {self}")
            return value
        if isinstance(value, int):
            if self.k == 1:
                value %= self.p
            elif not 0 <= value < self.q:
                raise ValueError(f"{value} is not an element index of {self}")
            return FieldElem(self._coeffs(value), self)
        coeffs = tuple(int(c) % self.p for c in value)
        if len(coeffs) != self.k:
            raise ValueError(f"expected {self.k} coefficients, got {len(coeffs)}")
        return FieldElem(coeffs, self)

    @property
    def zero(self) -> FieldElem:
        return self(0)

    @property
    def one(self) -> FieldElem:
        return self(1)

    def elements(self):
        """All elements in encoding order."""
        return [self(i) for i in range(self.q)]


class FieldElem:
    __slots__ = ("coeffs", "field")

    def __init__(self, coeffs: tuple[int, ...], field: FiniteField):
        self.coeffs = coeffs
        self.field = field

    @property
    def index(self) -> int:
        return self.field._index(self.coeffs)

    def __int__(self):
        return self.index

    def __repr__(self):
        if self.field.k == 1:
            return f"{self.coeffs[0]}"
        terms = []
        for i, c in reversed(list(enumerate(self.coeffs))):
            if c:
                mono = "1" if i == 0 else ("x" if i == 1 else f"x^{i}")
                terms.append(mono if c == 1 and i else f"{c}{'' if i == 0 else '*' + mono}")
        return " + ".join(terms) or "0"

    def __eq__(self, other):
        if isinstance(other, int):
            return self.index == other
        return (
            isinstance(other, FieldElem)
            and self.field == other.field
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.field, self.coeffs))

    def _other(self, other) -> FieldElem:
        if isinstance(other, int):
            return self.field(other)
        if other.field != self.field:
            raise FieldMismatch(f"{self.field} vs {other.field}")
        return other

    def __add__(self, other):
        return f_add(self, self._other(other))

    __radd__ = __add__

    def __sub__(self, other):
        return f_add(self, f_neg(self._other(other)))

    def __neg__(self):
        return f_neg(self)

    def __mul__(self, other):
        return f_mul(self, self._other(other))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return f_mul(self, f_inv(self._other(other)))

    def __pow__(self, e: int):
        if self.index == 0:
            if e == 0:
                return self.field.one
            if e < 0:
                raise DivisionByZero("zero to a negative power")
            return self
        F = self.field
        return F(F.exp(F.log(self.index) * e))


@functools.lru_cache(maxsize=None)
def field_new(p: int, k: int = 1) -> FiniteField:
    """GF(p^k) with deterministic modulus and generator."""
    if not isinstance(p, int) or not is_prime(p):
        raise NotPrime(p)
    if k < 1:
        raise DegreeZero(k)
    if p**k > MAX_ORDER:
        raise FieldTooLarge(f"{p}^{k} exceeds {MAX_ORDER}")
    return FiniteField(p, k, _smallest_irreducible(p, k))


def field_of_order(q: int) -> FiniteField:
    p, k = prime_power(q)
    return field_new(p, k)


def _same_field(a: FieldElem, b: FieldElem):
    if a.field != b.field:
        raise FieldMismatch(f"{a.field} vs {b.field}")
    return a.field


def f_add(a: FieldElem, b: FieldElem) -> FieldElem:
    F = _same_field(a, b)
    return F(tuple((x + y) % F.p for x, y in zip(a.coeffs, b.coeffs)))


def f_neg(a: FieldElem) -> FieldElem:
    F = a.field
    return F(tuple(-x % F.p for x in a.coeffs))


def f_mul(a: FieldElem, b: FieldElem) -> FieldElem:
    F = _same_field(a, b)
    return F(F._polymul_index(a.index, b.index))


def f_inv(a: FieldElem) -> FieldElem:
    F = a.field
    return F(F.inv(a.index))


def dlog(F: FiniteField, a) -> int:
    """Exponent e in [0, q-1) with generator**e == a."""
    a = F(a)
    return F.log(a.index)

"""Arithmetic in GF(p^m) with log/antilog tables.

Elements are integers in ``[0, p**m)`` whose base-``p`` digits are the
polynomial coefficients (lowest degree first) of the residue modulo the
field's primitive modulus.  The element ``x`` (integer ``p``) is the
primitive element ``alpha``.

The bulk methods on :class:`FiniteField` (``add``, ``mul``, ...) accept
plain integers or numpy integer arrays and broadcast; :class:`FieldElement`
is a thin scalar wrapper with operator overloads.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass

import numpy as np

#: Default upper bound on ``p**m``.
MAX_FIELD_ORDER = 2**20

# One canonical primitive modulus per (p, m): the lexicographically smallest
# monic primitive polynomial, encoded as an integer whose base-p digits are
# the coefficients (so 0x11d is x^8 + x^4 + x^3 + x^2 + 1).
PRIMITIVE_MODULI: dict[int, dict[int, int]] = {
    2: {1: 0x3, 2: 0x7, 3: 0xb, 4: 0x13, 5: 0x25, 6: 0x43, 7: 0x83, 8: 0x11d, 9: 0x211,
        10: 0x409, 11: 0x805, 12: 0x1053, 13: 0x201b, 14: 0x402b, 15: 0x8003,
        16: 0x1002d, 17: 0x20009, 18: 0x40027, 19: 0x80027, 20: 0x100009, 21: 0x200005},
    3: {1: 4, 2: 14, 3: 34, 4: 86, 5: 250, 6: 734, 7: 2203, 8: 6590, 9: 19747,
        10: 59081, 11: 177163, 12: 531656, 13: 1594330},
    5: {1: 7, 2: 32, 3: 142, 4: 662, 5: 3147, 6: 15632, 7: 78142, 8: 390663, 9: 1953163},
    7: {1: 9, 2: 59, 3: 366, 4: 2476, 5: 16818, 6: 117808, 7: 823587},
    11: {1: 14, 2: 139, 3: 1346, 4: 14654, 5: 161187, 6: 1771712},
    13: {1: 15, 2: 184, 3: 2216, 4: 28745, 5: 371347},
    17: {1: 20, 2: 309, 3: 4933, 4: 83549, 5: 1419877},
    19: {1: 23, 2: 382, 3: 6882, 4: 130369},
    23: {1: 25, 2: 559, 3: 12193, 4: 279875},
    29: {1: 31, 2: 873, 3: 24429, 4: 707329},
    31: {1: 38, 2: 1004, 3: 29836, 4: 923600},
}


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    return all(n % d for d in range(2, math.isqrt(n) + 1))


def prime_power(q: int) -> tuple[int, int] | None:
    """Return ``(p, s)`` with ``q == p**s`` and ``p`` prime, or None."""
    if q < 2:
        return None
    for p in range(2, math.isqrt(q) + 1):
        if q % p == 0:
            s = 0
            while q % p == 0:
                q //= p
                s += 1
            return (p, s) if q == 1 else None
    return (q, 1)


def _digits(value: int, p: int, m: int) -> list[int]:
    return [(value // p**i) % p for i in range(m)]


class FiniteField:
    """GF(p^m) built from the built-in primitive modulus table.

    Use :func:`make_field` rather than constructing directly; it caches.
    """

    def __init__(self, p: int, m: int, max_order: int = MAX_FIELD_ORDER):
        if not is_prime(p):
            raise ValueError(f"characteristic {p} is not prime")
        if m < 1:
            raise ValueError(f"extension degree must be positive, got {m}")
        order = p**m
        if order > max_order:
            raise ValueError(f"GF({p}^{m}) has order {order} > cap {max_order}")
        try:
            encoded = PRIMITIVE_MODULI[p][m]
        except KeyError:
            raise ValueError(f"no built-in primitive polynomial for GF({p}^{m})") from None

        self.p = p
        self.m = m
        self.order = order
        self.modulus: tuple[int, ...] = tuple(_digits(encoded, p, m + 1))
        self.primitive_element_index = p if m > 1 else (-self.modulus[0]) % p
        self._modulus_int = encoded

        dtype = np.int32 if order <= 2**31 else np.int64
        exp = np.empty(order - 1, dtype=dtype)
        log = np.full(order, -1, dtype=dtype)
        x = 1
        for i in range(order - 1):
            exp[i] = x
            log[x] = i
            x = self._times_alpha(x)
        if x != 1 or np.any(log[1:] < 0):
            raise ValueError(f"modulus for GF({p}^{m}) is not primitive")
        exp.setflags(write=False)
        log.setflags(write=False)
        self.antilog_table = exp
        self.log_table = log

    def _times_alpha(self, x: int) -> int:
        p, m = self.p, self.m
        if m == 1:
            return (x * self.primitive_element_index) % p
        if p == 2:
            x <<= 1
            if x >> m:
                x ^= self._modulus_int
            return x
        top = x // p ** (m - 1)
        digits = [0] + _digits(x, p, m - 1)
        return sum(((d - top * c) % p) * p**i for i, (d, c) in enumerate(zip(digits, self.modulus)))

    def __repr__(self) -> str:
        return f"GF({self.p}^{self.m})"

    @property
    def group_order(self) -> int:
        return self.order - 1

    @property
    def alpha(self) -> FieldElement:
        return FieldElement(self, self.primitive_element_index)

    @property
    def zero(self) -> FieldElement:
        return FieldElement(self, 0)

    @property
    def one(self) -> FieldElement:
        return FieldElement(self, 1)

    def __call__(self, value: int) -> FieldElement:
        value = int(value)
        if not 0 <= value < self.order:
            raise ValueError(f"{value} is not an element index of {self}")
        return FieldElement(self, value)

    def alpha_power(self, t):
        """Integer representation of ``alpha**t`` (array-aware)."""
        return self.antilog_table[np.mod(t, self.group_order)]

    # Raw vectorized arithmetic on integer representations.

    def add(self, a, b):
        if self.p == 2:
            return np.bitwise_xor(a, b)
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        out = np.zeros(np.broadcast_shapes(a.shape, b.shape), dtype=np.int64)
        weight = 1
        for _ in range(self.m):
            out += ((a // weight + b // weight) % self.p) * weight
            weight *= self.p
        return out if out.ndim else int(out)

    def neg(self, a):
        if self.p == 2:
            return a
        a = np.asarray(a, dtype=np.int64)
        out = np.zeros_like(a)
        weight = 1
        for _ in range(self.m):
            out += ((-(a // weight)) % self.p) * weight
            weight *= self.p
        return out if out.ndim else int(out)

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        a = np.asarray(a)
        b = np.asarray(b)
        nz = (a != 0) & (b != 0)
        la = self.log_table[np.where(nz, a, 1)].astype(np.int64)
        lb = self.log_table[np.where(nz, b, 1)].astype(np.int64)
        out = np.where(nz, self.antilog_table[(la + lb) % self.group_order], 0)
        return out if out.ndim else int(out)

    def power(self, a, t: int):
        a = np.asarray(a)
        la = self.log_table[np.where(a != 0, a, 1)].astype(np.int64)
        out = self.antilog_table[(la * t) % self.group_order]
        if t > 0:
            out = np.where(a != 0, out, 0)
        elif np.any(a == 0):
            raise ZeroDivisionError("zero raised to a non-positive power")
        return out if out.ndim else int(out)

    def inv(self, a):
        a = np.asarray(a)
        if np.any(a == 0):
            raise ZeroDivisionError(f"zero has no inverse in {self}")
        out = self.antilog_table[(-self.log_table[a].astype(np.int64)) % self.group_order]
        return out if out.ndim else int(out)


@dataclass(frozen=True)
class FieldElement:
    field: FiniteField
    value: int

    def _check(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.field is not self.field:
                raise ValueError(f"field mismatch: {self.field} vs {other.field}")
            return other.value
        return NotImplemented

    def __add__(self, other):
        v = self._check(other)
        if v is NotImplemented:
            return v
        return FieldElement(self.field, int(self.field.add(self.value, v)))

    def __sub__(self, other):
        v = self._check(other)
        if v is NotImplemented:
            return v
        return FieldElement(self.field, int(self.field.sub(self.value, v)))

    def __neg__(self):
        return FieldElement(self.field, int(self.field.neg(self.value)))

    def __mul__(self, other):
        v = self._check(other)
        if v is NotImplemented:
            return v
        return FieldElement(self.field, int(self.field.mul(self.value, v)))

    def __truediv__(self, other):
        v = self._check(other)
        if v is NotImplemented:
            return v
        return self * FieldElement(self.field, int(self.field.inv(v)))

    def __pow__(self, t: int):
        return FieldElement(self.field, int(self.field.power(self.value, int(t))))

    def inverse(self) -> FieldElement:
        return FieldElement(self.field, int(self.field.inv(self.value)))

    @property
    def log(self) -> int:
        """Exponent ``i`` with ``alpha**i == self``."""
        if self.value == 0:
            raise ValueError("log of zero is undefined")
        return int(self.field.log_table[self.value])

    def multiplicative_order(self) -> int:
        n = self.field.group_order
        return n // math.gcd(n, self.log)

    def __repr__(self) -> str:
        if self.value == 0:
            return f"{self.field}(0)"
        return f"{self.field}(a^{self.log})"


@functools.lru_cache(maxsize=None)
def make_field(p: int, m: int, max_order: int = MAX_FIELD_ORDER) -> FiniteField:
    """Return the (cached) field GF(p^m)."""
    return FiniteField(p, m, max_order)


def subfield_generator(field: FiniteField, n: int) -> FieldElement:
    """Return ``beta = alpha**n``, generator of the subfield of order ``N/n + 1``.

    ``n`` must divide the multiplicative group order ``N`` and ``N/n + 1``
    must be a subfield order, i.e. ``(N/n + 1)**k == field.order`` for some k.
    """
    N = field.group_order
    if n <= 0 or N % n:
        raise ValueError(f"{n} does not divide the group order {N} of {field}")
    q = N // n + 1
    k = round(math.log(field.order, q)) if q > 1 else 0
    if q < 2 or q**k != field.order:
        raise ValueError(f"alpha^{n} does not generate a subfield of {field}")
    return field.alpha ** n


def subfield_elements(field: FiniteField, q: int) -> np.ndarray:
    """Integer representations of GF(q) inside ``field``: ``[0, 1, beta, ..., beta^(q-2)]``."""
    N = field.group_order
    if (q - 1) == 0 or N % (q - 1):
        raise ValueError(f"GF({q}) is not a subfield of {field}")
    n = N // (q - 1)
    beta = subfield_generator(field, n)
    powers = field.alpha_power(beta.log * np.arange(q - 1))
    return np.concatenate(([0], powers)).astype(np.int64)


def vector_coordinates(x: FieldElement, basis: list[FieldElement]) -> tuple[FieldElement, ...]:
    """Coordinates of ``x`` over GF(q) in the given GF(q)-basis of GF(q^len(basis))."""
    field = x.field
    dim = len(basis)
    q = round(field.order ** (1 / dim))
    if dim == 0 or q**dim != field.order:
        raise ValueError(f"a basis of {field} over a subfield cannot have {dim} elements")
    sub = subfield_elements(field, q)
    # Enumerate every GF(q)-combination of the basis; the basis is independent
    # iff the q**dim combinations are pairwise distinct.
    combos = np.zeros(1, dtype=np.int64)
    for b in basis:
        scaled = field.mul(sub, b.value)
        combos = np.asarray(field.add(combos[:, None], scaled[None, :])).reshape(-1)
    if np.unique(combos).size != combos.size:
        raise ValueError("basis is linearly dependent over the subfield")
    flat = int(np.flatnonzero(combos == x.value)[0])
    coords = []
    for _ in range(dim):
        flat, c = divmod(flat, q)
        coords.append(c)
    return tuple(FieldElement(field, int(sub[c])) for c in reversed(coords))


"""Finite fields F_q, q = p^e, with elements encoded as integers.

An element is stored as the integer whose base-p digits (least significant
first) are the coefficients of its polynomial representative modulo the
field's defining polynomial.  The encoding is independent of how the
modulus was chosen, which keeps code files portable.

Arithmetic on numpy arrays goes through precomputed tables; scalar helpers
and the small :class:`Elem` wrapper are provided for readability.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass, field as dc_field
from typing import Sequence

import numpy as np

MAX_ORDER = 1 << 16
_TABLE_ORDER = 256  # full add/mul tables up to this q


class FieldError(ValueError):
    pass


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    i = 2
    while i * i <= p:
        if p % i == 0:
            return False
        i += 1
    return True


# -- polynomials over F_p, coefficient lists in ascending order ------------

def _trim(c: list[int]) -> list[int]:
    while c and c[-1] == 0:
        c.pop()
    return c


def _poly_mod_p(a: Sequence[int], m: Sequence[int], p: int) -> list[int]:
    a = _trim([x % p for x in a])
    dm = len(m) - 1
    inv_lead = pow(m[-1], p - 2, p)
    while len(a) - 1 >= dm:
        coef = a[-1] * inv_lead % p
        shift = len(a) - 1 - dm
        for i, mi in enumerate(m):
            a[shift + i] = (a[shift + i] - coef * mi) % p
        _trim(a)
    return a


def is_irreducible(modulus: Sequence[int], p: int) -> bool:
    """Trial division by every monic polynomial of degree 1..deg/2."""
    m = [int(c) % p for c in modulus]
    if len(m) < 2 or m[-1] == 0:
        return False
    deg = len(m) - 1
    for d in range(1, deg // 2 + 1):
        for low in itertools.product(range(p), repeat=d):
            if not _poly_mod_p(m, list(low) + [1], p):
                return False
    return True


@functools.lru_cache(maxsize=None)
def default_modulus(p: int, e: int) -> tuple[int, ...]:
    """Smallest monic irreducible of degree e over F_p.

    Candidates are ordered by the integer whose base-p digits are the
    non-leading coefficients (constant term least significant).
    """
    for code in range(p**e):
        low = [(code // p**i) % p for i in range(e)]
        cand = low + [1]
        if is_irreducible(cand, p):
            return tuple(cand)
    raise FieldError(f"no irreducible polynomial of degree {e} over F_{p}")


def _coerce(a):
    """Lists and tuples become arrays; ints and arrays pass through."""
    return np.asarray(a, dtype=np.int64) if isinstance(a, (list, tuple)) else a


@dataclass(frozen=True, eq=False)
class FieldSpec:
    """The finite field F_q with q = p**e.

    Build instances with :func:`field_make`; equality is structural on
    ``(p, e, modulus)``.
    """

    p: int
    e: int
    modulus: tuple[int, ...] | None = None
    _tables: dict = dc_field(default_factory=dict, repr=False, compare=False)

    @property
    def q(self) -> int:
        return self.p**self.e

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FieldSpec):
            return NotImplemented
        return (self.p, self.e, self.modulus) == (other.p, other.e, other.modulus)

    def __hash__(self) -> int:
        return hash((self.p, self.e, self.modulus))

    def __repr__(self) -> str:
        if self.e == 1:
            return f"GF({self.p})"
        return f"GF({self.p}^{self.e}, modulus={list(self.modulus)})"

    # -- encoding ---------------------------------------------------------

    def to_poly(self, a: int) -> list[int]:
        return [(a // self.p**i) % self.p for i in range(self.e)]

    def from_poly(self, coeffs: Sequence[int]) -> int:
        if self.e == 1:
            return int(coeffs[0]) % self.p if len(coeffs) else 0
        c = _poly_mod_p(list(coeffs), self.modulus, self.p)
        return sum(int(x) * self.p**i for i, x in enumerate(c))

    # -- scalar arithmetic (reference path, no tables) --------------------

    def _add_scalar(self, a: int, b: int) -> int:
        if self.e == 1:
            return (a + b) % self.p
        if self.p == 2:
            return a ^ b
        pa, pb = self.to_poly(a), self.to_poly(b)
        return sum(((x + y) % self.p) * self.p**i for i, (x, y) in enumerate(zip(pa, pb)))

    def _mul_scalar(self, a: int, b: int) -> int:
        if self.e == 1:
            return a * b % self.p
        pa, pb = self.to_poly(a), self.to_poly(b)
        prod = [0] * (2 * self.e - 1)
        for i, x in enumerate(pa):
            if x:
                for j, y in enumerate(pb):
                    prod[i + j] += x * y
        return self.from_poly(prod)

    # -- tables -----------------------------------------------------------

    def _build_tables(self) -> None:
        q, p = self.q, self.p
        idx = np.arange(q, dtype=np.int64)
        if self.e == 1:
            neg = (-idx) % p
        else:
            digits = [(idx // p**i) % p for i in range(self.e)]
            neg = sum(((-d) % p) * p**i for i, d in enumerate(digits))
        exp = np.zeros(q - 1, dtype=np.int64)
        log = np.full(q, -1, dtype=np.int64)
        gen = self._find_primitive()
        x = 1
        for i in range(q - 1):
            exp[i] = x
            log[x] = i
            x = self._mul_scalar(x, gen)
        inv = np.zeros(q, dtype=np.int64)
        inv[1:] = exp[(-log[1:]) % (q - 1)]
        self._tables.update(neg=neg, exp=exp, log=log, inv=inv, gen=gen)
        if q <= _TABLE_ORDER:
            a = idx[:, None]
            b = idx[None, :]
            if self.e == 1:
                add = (a + b) % p
            elif p == 2:
                add = a ^ b
            else:
                add = np.zeros((q, q), dtype=np.int64)
                for i in range(self.e):
                    pw = p**i
                    add += (((a // pw) % p + (b // pw) % p) % p) * pw
            mul = np.zeros((q, q), dtype=np.int64)
            nz = idx[1:]
            mul[1:, 1:] = exp[(log[nz][:, None] + log[nz][None, :]) % (q - 1)]
            self._tables.update(add=add, mul=mul)

    def _find_primitive(self) -> int:
        q = self.q
        if q == 2:
            return 1
        order = q - 1
        primes = [r for r in range(2, order + 1) if order % r == 0 and is_prime(r)]
        for g in range(2, q):
            if all(self._pow_scalar(g, order // r) != 1 for r in primes):
                return g
        raise FieldError("no primitive element found")  # unreachable for a field

    def _pow_scalar(self, a: int, k: int) -> int:
        r = 1
        while k:
            if k & 1:
                r = self._mul_scalar(r, a)
            a = self._mul_scalar(a, a)
            k >>= 1
        return r

    def table(self, name: str) -> np.ndarray:
        if not self._tables:
            self._build_tables()
        return self._tables[name]

    # -- vectorised arithmetic on ints or integer arrays ------------------

    def add(self, a, b):
        a, b = _coerce(a), _coerce(b)
        if self.e == 1:
            return (a + b) % self.p
        if self.p == 2:
            return a ^ b
        if self.q <= _TABLE_ORDER:
            r = self.table("add")[a, b]
            return r if isinstance(r, np.ndarray) else int(r)
        a, b = np.asarray(a), np.asarray(b)
        out = np.zeros(np.broadcast(a, b).shape, dtype=np.int64)
        for i in range(self.e):
            pw = self.p**i
            out += (((a // pw) % self.p + (b // pw) % self.p) % self.p) * pw
        return out if out.ndim else int(out)

    def neg(self, a):
        r = self.table("neg")[_coerce(a)]
        return r if isinstance(r, np.ndarray) else int(r)

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        a, b = _coerce(a), _coerce(b)
        if self.e == 1:
            return a * b % self.p
        if self.q <= _TABLE_ORDER:
            r = self.table("mul")[a, b]
            return r if isinstance(r, np.ndarray) else int(r)
        a, b = np.asarray(a), np.asarray(b)
        log, exp = self.table("log"), self.table("exp")
        la, lb = log[a], log[b]
        out = exp[(la + lb) % (self.q - 1)]
        out = np.where((a == 0) | (b == 0), 0, out)
        return out if out.ndim else int(out)

    def inv(self, a):
        if np.any(np.asarray(a) == 0):
            raise ZeroDivisionError("inverse of zero in a finite field")
        r = self.table("inv")[a]
        return r if isinstance(r, np.ndarray) else int(r)

    def pow(self, a: int, k: int) -> int:
        if k == 0:
            return 1
        if a == 0:
            return 0
        log, exp = self.table("log"), self.table("exp")
        return int(exp[(int(log[a]) * k) % (self.q - 1)])

    def elements(self) -> range:
        return range(self.q)

    def __call__(self, value: int) -> "Elem":
        return Elem(int(value), self)


def field_make(p: int, e: int = 1, modulus: Sequence[int] | None = None) -> FieldSpec:
    """Validate parameters and return the field F_{p^e}."""
    if not is_prime(p):
        raise FieldError(f"characteristic {p} is not prime")
    if e < 1:
        raise FieldError(f"extension degree must be >= 1, got {e}")
    if p**e > MAX_ORDER:
        raise FieldError(f"field order {p}^{e} exceeds the cap 2^16")
    if e == 1:
        if modulus is not None and len(modulus) != 2:
            raise FieldError("a prime field takes no modulus (or a linear one)")
        return FieldSpec(p, 1, None)
    if modulus is None:
        mod = default_modulus(p, e)
    else:
        mod = tuple(int(c) % p for c in modulus)
        if len(mod) != e + 1:
            raise FieldError(f"modulus must have degree {e}")
        if mod[-1] != 1:
            raise FieldError("modulus must be monic")
        if not is_irreducible(mod, p):
            raise FieldError(f"modulus {list(mod)} is reducible over F_{p}")
    return FieldSpec(p, e, mod)


def field_of_order(q: int, modulus: Sequence[int] | None = None) -> FieldSpec:
    """Field of order q (a prime power) with the default modulus."""
    if q < 2:
        raise FieldError(f"{q} is not a prime power")
    for p in range(2, q + 1):
        if q % p == 0:
            break
    e, r = 0, q
    while r % p == 0:
        r //= p
        e += 1
    if r != 1 or not is_prime(p):
        raise FieldError(f"{q} is not a prime power")
    return field_make(p, e, modulus)


@dataclass(frozen=True)
class Elem:
    value: int
    field: FieldSpec

    def __post_init__(self):
        if not 0 <= self.value < self.field.q:
            raise FieldError(f"{self.value} is not an element of {self.field}")

    def _check(self, other: "Elem") -> None:
        if not isinstance(other, Elem) or other.field != self.field:
            raise FieldError("operands belong to different fields")

    def __add__(self, other):
        self._check(other)
        return Elem(self.field.add(self.value, other.value), self.field)

    def __sub__(self, other):
        self._check(other)
        return Elem(self.field.sub(self.value, other.value), self.field)

    def __mul__(self, other):
        self._check(other)
        return Elem(self.field.mul(self.value, other.value), self.field)

    def __truediv__(self, other):
        self._check(other)
        return self * other.inverse()

    def __neg__(self):
        return Elem(self.field.neg(self.value), self.field)

    def inverse(self) -> "Elem":
        return Elem(self.field.inv(self.value), self.field)

    def __int__(self) -> int:
        return self.value


def field_arith(op: str, a: Elem, b: Elem | None = None) -> Elem:
    """Dispatch one of add, sub, mul, inv, neg on :class:`Elem` operands."""
    if op in ("inv", "neg"):
        return a.inverse() if op == "inv" else -a
    if b is None:
        raise FieldError(f"operation {op!r} needs two operands")
    try:
        return {"add": a.__add__, "sub": a.__sub__, "mul": a.__mul__}[op](b)
    except KeyError:
        raise FieldError(f"unknown operation {op!r}") from None

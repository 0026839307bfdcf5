"""Arithmetic in F_{p^n} and in polynomial rings over it.

Field elements are integers 0 .. p^n - 1 whose base-p digits are the
coefficients of a polynomial in the generator x, reduced modulo a fixed monic
irreducible polynomial. Multiplication goes through log/antilog tables built
from a primitive element; the fields used here have at most a few thousand
elements.
"""
from __future__ import annotations

import itertools
from functools import lru_cache
from typing import Iterator, Optional, Sequence


def _is_prime(p: int) -> bool:
    return p >= 2 and all(p % k for k in range(2, int(p**0.5) + 1))


def prime_power(q: int) -> tuple[int, int]:
    """(p, r) with q = p^r, or ValueError."""
    for p in range(2, q + 1):
        if q % p == 0:
            r, m = 0, q
            while m % p == 0:
                m //= p
                r += 1
            if m != 1:
                raise ValueError(f"{q} is not a prime power")
            return p, r
    raise ValueError(f"{q} is not a prime power")


# --- dense polynomials over F_p, used only to find a modulus ---------------------


def _pmod(a: list[int], b: list[int], p: int) -> list[int]:
    a = a[:]
    inv = pow(b[-1], -1, p)
    while len(a) >= len(b) and any(a):
        if a[-1] == 0:
            a.pop()
            continue
        f = a[-1] * inv % p
        shift = len(a) - len(b)
        for i, c in enumerate(b):
            a[shift + i] = (a[shift + i] - f * c) % p
        a.pop()
    while a and a[-1] == 0:
        a.pop()
    return a


def _is_irreducible(f: list[int], p: int) -> bool:
    n = len(f) - 1
    if n == 1:
        return True
    # no factor of degree <= n/2: brute force over monic candidates
    for d in range(1, n // 2 + 1):
        for coeffs in itertools.product(range(p), repeat=d):
            g = list(coeffs) + [1]
            if not _pmod(f, g, p):
                return False
    return True


@lru_cache(maxsize=None)
def conway_like_modulus(p: int, n: int) -> tuple[int, ...]:
    """Lexicographically first monic irreducible of degree n whose root is a
    primitive element (so the log table can use x itself). Needs n >= 2."""
    if n < 2:
        raise ValueError("prime fields use a primitive residue instead of a modulus")
    for coeffs in itertools.product(range(p), repeat=n):
        f = list(reversed(coeffs)) + [1]
        if f[0] == 0:
            continue
        if _is_irreducible(f, p) and _x_is_primitive(f, p, n):
            return tuple(f)
    raise RuntimeError("no primitive polynomial found")


def _x_is_primitive(f: list[int], p: int, n: int) -> bool:
    order = p**n - 1
    cur = [1]
    for k in range(1, order + 1):
        cur = _pmod([0] + cur, f, p)
        if cur == [1]:
            return k == order
    return False


class GF:
    """The field F_{p^n}."""

    def __init__(self, p: int, n: int = 1):
        if not _is_prime(p):
            raise ValueError(f"{p} is not prime")
        if n < 1:
            raise ValueError("extension degree must be positive")
        self.p, self.n, self.size = p, n, p**n
        if n == 1:
            self.modulus = (0, 1)
            gen = next(g for g in range(1, p) if p == 2 or all(pow(g, (p - 1) // f, p) != 1 for f in _prime_factors(p - 1)))
            self._build_tables_prime(gen)
        else:
            self.modulus = conway_like_modulus(p, n)
            self._build_tables_ext()

    def _build_tables_prime(self, gen: int) -> None:
        q = self.size
        self.exp = [0] * (2 * (q - 1))
        self.log = [None] * q
        x = 1
        for k in range(q - 1):
            self.exp[k] = x
            self.log[x] = k
            x = x * gen % self.p
        for k in range(q - 1, 2 * (q - 1)):
            self.exp[k] = self.exp[k - (q - 1)]

    def _build_tables_ext(self) -> None:
        p, n, q = self.p, self.n, self.size
        f = list(self.modulus)
        self.exp = [0] * (2 * (q - 1))
        self.log = [None] * q
        cur = [1] + [0] * (n - 1)
        for k in range(q - 1):
            idx = self._encode(cur)
            self.exp[k] = idx
            self.log[idx] = k
            # multiply by x and reduce
            top = cur[-1]
            cur = [0] + cur[:-1]
            if top:
                for i in range(n):
                    cur[i] = (cur[i] - top * f[i]) % p
        for k in range(q - 1, 2 * (q - 1)):
            self.exp[k] = self.exp[k - (q - 1)]

    def _encode(self, coeffs: Sequence[int]) -> int:
        v = 0
        for c in reversed(coeffs):
            v = v * self.p + c
        return v

    def _decode(self, v: int) -> list[int]:
        out = []
        for _ in range(self.n):
            v, c = divmod(v, self.p)
            out.append(c)
        return out

    # raw integer arithmetic
    def _add(self, a: int, b: int) -> int:
        if self.n == 1:
            return (a + b) % self.p
        da, db = self._decode(a), self._decode(b)
        return self._encode([(x + y) % self.p for x, y in zip(da, db)])

    def _neg(self, a: int) -> int:
        if self.n == 1:
            return (-a) % self.p
        return self._encode([(-x) % self.p for x in self._decode(a)])

    def _mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self.exp[self.log[a] + self.log[b]]

    def _inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero in a finite field")
        return self.exp[(self.size - 1 - self.log[a]) % (self.size - 1)]

    def _pow(self, a: int, k: int) -> int:
        if a == 0:
            if k < 0:
                raise ZeroDivisionError("negative power of zero")
            return 1 if k == 0 else 0
        return self.exp[(self.log[a] * k) % (self.size - 1)]

    # element constructors
    def __call__(self, v) -> "FqElement":
        if isinstance(v, FqElement):
            if v.field is not self:
                raise ValueError("element of a different field")
            return v
        return FqElement(self, int(v) % self.p)

    def element(self, index: int) -> "FqElement":
        if not 0 <= index < self.size:
            raise ValueError("index out of range")
        return FqElement(self, index)

    def from_coeffs(self, coeffs: Sequence[int]) -> "FqElement":
        cs = [int(c) % self.p for c in coeffs] + [0] * (self.n - len(coeffs))
        if len(cs) > self.n:
            raise ValueError("too many coefficients")
        return FqElement(self, self._encode(cs))

    @property
    def zero(self) -> "FqElement":
        return FqElement(self, 0)

    @property
    def one(self) -> "FqElement":
        return FqElement(self, 1)

    @property
    def generator(self) -> "FqElement":
        return FqElement(self, self.exp[1] if self.size > 2 else 1)

    def elements(self) -> Iterator["FqElement"]:
        for i in range(self.size):
            yield FqElement(self, i)

    def units(self) -> Iterator["FqElement"]:
        for i in range(1, self.size):
            yield FqElement(self, i)

    def prime_field_elements(self) -> Iterator["FqElement"]:
        for i in range(self.p):
            yield FqElement(self, i)

    def __repr__(self):
        return f"GF({self.p}^{self.n})"

    def __eq__(self, other):
        return isinstance(other, GF) and (self.p, self.n, self.modulus) == (other.p, other.n, other.modulus)

    def __hash__(self):
        return hash((self.p, self.n, self.modulus))

    def __reduce__(self):
        return (field, (self.p, self.n))


def _prime_factors(m: int) -> list[int]:
    out, k = [], 2
    while k * k <= m:
        if m % k == 0:
            out.append(k)
            while m % k == 0:
                m //= k
        k += 1
    if m > 1:
        out.append(m)
    return out


@lru_cache(maxsize=None)
def field(p: int, n: int = 1) -> GF:
    """Cached field constructor; equal arguments give the same object."""
    return GF(p, n)


class FqElement:
    __slots__ = ("field", "v")

    def __init__(self, f: GF, v: int):
        self.field, self.v = f, v

    def _coerce(self, other) -> int:
        if isinstance(other, FqElement):
            if other.field is not self.field:
                raise ValueError("mixing elements of different fields")
            return other.v
        if isinstance(other, int):
            return other % self.field.p
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FqElement(self.field, self.field._add(self.v, o))

    __radd__ = __add__

    def __neg__(self):
        return FqElement(self.field, self.field._neg(self.v))

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FqElement(self.field, self.field._add(self.v, self.field._neg(o)))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FqElement(self.field, self.field._mul(self.v, o))

    __rmul__ = __mul__

    def inverse(self) -> "FqElement":
        return FqElement(self.field, self.field._inv(self.v))

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FqElement(self.field, self.field._mul(self.v, self.field._inv(o)))

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, k: int):
        return FqElement(self.field, self.field._pow(self.v, k))

    def __eq__(self, other):
        if isinstance(other, FqElement):
            return self.field is other.field and self.v == other.v
        if isinstance(other, int):
            return self.v == other % self.field.p and self.v < self.field.p
        return NotImplemented

    def __hash__(self):
        return hash((self.field.p, self.field.n, self.v))

    def __bool__(self):
        return self.v != 0

    def __repr__(self):
        f = self.field
        if f.n == 1 or self.v < f.p:
            return str(self.v)
        cs = f._decode(self.v)
        terms = []
        for i, c in enumerate(cs):
            if c:
                mon = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
                coef = "" if (c == 1 and i) else str(c)
                terms.append(coef + mon)
        return "+".join(reversed(terms))

    def frobenius(self, k: int = 1) -> "FqElement":
        return self ** (self.field.p**k)

    def qth_root(self, q: int) -> "FqElement":
        """Unique q-th root for q = p^r: the inverse Frobenius x^{p^(n - r mod n)}."""
        p, r = prime_power(q)
        if p != self.field.p:
            raise ValueError(f"q={q} is not a power of the characteristic {self.field.p}")
        n = self.field.n
        return self.frobenius((n - r % n) % n)

    def in_prime_field(self) -> bool:
        return self.v < self.field.p

    def to_json(self):
        return self.field._decode(self.v)


def embedding(small: GF, big: GF):
    """A field homomorphism small -> big (requires n_small | n_big)."""
    if small.p != big.p or big.n % small.n:
        raise ValueError(f"{small} does not embed in {big}")
    if small.n == 1:
        return lambda a: FqElement(big, a.v)
    f = [FqElement(big, c) for c in small.modulus]
    root = next(z for z in big.elements() if peval(f, z) == big.zero)

    def emb(a: FqElement) -> FqElement:
        return peval([FqElement(big, c) for c in small._decode(a.v)], root)

    return emb


# --- polynomials over F_q, coefficient lists from low to high degree --------------


def ptrim(a: list) -> list:
    a = list(a)
    while a and not a[-1]:
        a.pop()
    return a


def pdeg(a: list) -> int:
    return len(ptrim(a)) - 1


def peval(a: Sequence, z):
    acc = z.field.zero
    for c in reversed(a):
        acc = acc * z + c
    return acc


def padd(a: list, b: list) -> list:
    n = max(len(a), len(b))
    zero = (a or b)[0].field.zero if (a or b) else None
    return ptrim([(a[i] if i < len(a) else zero) + (b[i] if i < len(b) else zero) for i in range(n)])


def pneg(a: list) -> list:
    return [-c for c in a]


def psub(a: list, b: list) -> list:
    return padd(a, pneg(b))


def pmul(a: list, b: list) -> list:
    a, b = ptrim(a), ptrim(b)
    if not a or not b:
        return []
    zero = a[0].field.zero
    out = [zero] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if not x:
            continue
        for j, y in enumerate(b):
            out[i + j] = out[i + j] + x * y
    return ptrim(out)


def pdivmod(a: list, b: list) -> tuple[list, list]:
    a, b = ptrim(a), ptrim(b)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    if len(a) < len(b):
        return [], a
    zero = b[0].field.zero
    inv = b[-1].inverse()
    a = a[:]
    quo = [zero] * (len(a) - len(b) + 1)
    for k in range(len(a) - len(b), -1, -1):
        c = a[k + len(b) - 1] * inv
        quo[k] = c
        if c:
            for i, y in enumerate(b):
                a[k + i] = a[k + i] - c * y
    return ptrim(quo), ptrim(a[: len(b) - 1])


def pmonic(a: list) -> list:
    a = ptrim(a)
    if not a:
        return a
    inv = a[-1].inverse()
    return [c * inv for c in a]


def pgcd(a: list, b: list) -> list:
    a, b = ptrim(a), ptrim(b)
    while b:
        a, b = b, pdivmod(a, b)[1]
    return pmonic(a)


def pderiv(a: list) -> list:
    return ptrim([c * k for k, c in enumerate(a)][1:])


def ppth_root(a: list) -> list:
    """g with g(x)^p = a(x), assuming a' = 0 (so only exponents divisible by p)."""
    a = ptrim(a)
    p = a[0].field.p
    n = a[0].field.n
    return ptrim([a[i] ** (p ** (n - 1)) for i in range(0, len(a), p)])


def radical(a: list) -> list:
    """Monic product of the distinct irreducible factors, valid in
    characteristic p (inseparable parts handled by p-th roots)."""
    a = pmonic(a)
    if pdeg(a) <= 0:
        return a[:1] if a else a
    d = pderiv(a)
    if not d:
        return radical(ppth_root(a))
    g = pgcd(a, d)
    h = pdivmod(a, g)[0]  # squarefree
    r = radical(g)
    if pdeg(r) <= 0:
        return pmonic(h)
    common = pgcd(h, r)
    return pmonic(pdivmod(pmul(h, r), common)[0])


def distinct_root_count(a: list) -> int:
    """Number of distinct roots over the algebraic closure."""
    return max(0, pdeg(radical(a)))


def roots_in_field(a: list, f: GF) -> list[FqElement]:
    return [z for z in f.elements() if not peval(a, z)]


def poly_from_roots(roots: Sequence[FqElement], f: GF) -> list:
    out = [f.one]
    for z in roots:
        out = pmul(out, [-z, f.one])
    return out


def taylor_shift(a: list, t0) -> list:
    """Coefficients of a(s + t0) in s."""
    out: list = []
    for c in reversed(ptrim(a)):
        # out = out * (s + t0) + c
        out = padd(pmul(out, [t0, t0.field.one]), [c])
    return ptrim(out)


def series_div(num: list, den: list, order: int) -> list:
    """First `order` coefficients of num/den as a power series (den(0) != 0)."""
    den = ptrim(den)
    f = den[0].field
    if not den[0]:
        raise ZeroDivisionError("series denominator vanishes at the origin")
    inv0 = den[0].inverse()
    num = list(num) + [f.zero] * max(0, order - len(num))
    out = []
    for k in range(order):
        acc = num[k]
        for j in range(1, min(k, len(den) - 1) + 1):
            acc = acc - den[j] * out[k - j]
        out.append(acc * inv0)
    return out

"""Prime fields and their extensions F_{p^e}.

An element of F_{p^e} is encoded as an integer in ``[0, p^e)`` whose base-p
digits are the coefficients of a polynomial in ``x`` reduced modulo a fixed
monic irreducible polynomial (lowest degree first).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product

import numpy as np

# Conway polynomials, coefficients lowest degree first, leading 1 omitted.
CONWAY: dict[tuple[int, int], tuple[int, ...]] = {
    (2, 2): (1, 1),
    (2, 3): (1, 1, 0),
    (2, 4): (1, 1, 0, 0),
    (2, 5): (1, 0, 1, 0, 0),
    (2, 6): (1, 1, 0, 1, 1, 0),
    (2, 7): (1, 1, 0, 0, 0, 0, 0),
    (2, 8): (1, 0, 1, 1, 1, 0, 0, 0),
    (3, 2): (2, 2),
    (3, 3): (1, 2, 0),
    (3, 4): (2, 0, 0, 2),
    (3, 5): (1, 2, 0, 0, 0),
    (3, 6): (2, 2, 1, 0, 2, 0),
    (3, 7): (1, 0, 2, 0, 0, 0, 0),
    (3, 8): (2, 2, 2, 0, 1, 2, 0, 0),
    (5, 2): (2, 4),
    (5, 3): (3, 3, 0),
    (5, 4): (2, 4, 4, 0),
    (5, 5): (3, 4, 0, 0, 0),
    (5, 6): (2, 0, 1, 4, 1, 0),
    (5, 7): (3, 3, 0, 0, 0, 0, 0),
    (5, 8): (2, 4, 3, 0, 1, 0, 0, 0),
}

MAX_DEGREE = 8


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


def _polymulmod(a, b, modulus, p):
    """Multiply coefficient lists ``a*b`` modulo monic ``x^e + modulus``."""
    e = len(modulus)
    prod = [0] * (2 * e - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                prod[i + j] = (prod[i + j] + x * y) % p
    for k in range(len(prod) - 1, e - 1, -1):
        c = prod[k]
        if c:
            prod[k] = 0
            for j, m in enumerate(modulus):
                prod[k - e + j] = (prod[k - e + j] - c * m) % p
    return prod[:e]


def is_irreducible(modulus: tuple[int, ...], p: int) -> bool:
    """Brute-force irreducibility of monic ``x^e + sum modulus[i] x^i``.

    Checks that no monic polynomial of degree <= e/2 divides it.
    """
    e = len(modulus)
    poly = list(modulus) + [1]
    for d in range(1, e // 2 + 1):
        for tail in product(range(p), repeat=d):
            div = list(tail) + [1]
            rem = poly[:]
            for k in range(len(rem) - 1, d - 1, -1):
                c = rem[k]
                if c:
                    for j in range(d + 1):
                        rem[k - d + j] = (rem[k - d + j] - c * div[j]) % p
            if not any(rem[:d]):
                return False
    return True


@lru_cache(maxsize=None)
def irreducible_polynomial(p: int, e: int) -> tuple[int, ...]:
    """A fixed monic irreducible of degree ``e`` over F_p (leading 1 omitted)."""
    if e < 1 or e > MAX_DEGREE:
        raise ValueError(f"extension degree must be in 1..{MAX_DEGREE}, got {e}")
    if (p, e) in CONWAY:
        return CONWAY[(p, e)]
    if e == 1:
        return (0,)
    # lexicographically first irreducible for primes outside the table
    for tail in product(range(p), repeat=e):
        cand = tuple(reversed(tail))
        if cand[0] != 0 and is_irreducible(cand, p):
            return cand
    raise AssertionError("no irreducible polynomial found")


@dataclass(frozen=True)
class Field:
    """The finite field F_{p^e}."""

    p: int
    e: int = 1
    modulus: tuple[int, ...] = field(default=(), compare=False)

    def __post_init__(self):
        if not is_prime(self.p):
            raise ValueError(f"characteristic must be prime, got {self.p}")
        if self.e > 1 and not self.modulus:
            object.__setattr__(self, "modulus", irreducible_polynomial(self.p, self.e))
        elif self.e < 1 or self.e > MAX_DEGREE:
            raise ValueError(f"extension degree must be in 1..{MAX_DEGREE}")

    @property
    def order(self) -> int:
        return self.p ** self.e

    def digits(self, x: int) -> list[int]:
        out = []
        for _ in range(self.e):
            x, r = divmod(x, self.p)
            out.append(r)
        return out

    def from_digits(self, ds) -> int:
        x = 0
        for d in reversed(list(ds)):
            x = x * self.p + int(d) % self.p
        return x

    def add(self, x: int, y: int) -> int:
        if self.e == 1:
            return (x + y) % self.p
        return self.from_digits(a + b for a, b in zip(self.digits(x), self.digits(y)))

    def neg(self, x: int) -> int:
        if self.e == 1:
            return (-x) % self.p
        return self.from_digits(-a for a in self.digits(x))

    def sub(self, x: int, y: int) -> int:
        return self.add(x, self.neg(y))

    def mul(self, x: int, y: int) -> int:
        if self.e == 1:
            return (x * y) % self.p
        return self.from_digits(_polymulmod(self.digits(x), self.digits(y), self.modulus, self.p))

    def pow(self, x: int, k: int) -> int:
        result, base = 1, x
        while k:
            if k & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            k >>= 1
        return result

    def inv(self, x: int) -> int:
        if x % self.order == 0:
            raise ZeroDivisionError("zero has no inverse")
        return self.pow(x, self.order - 2)

    def mult_matrix(self, x: int) -> np.ndarray:
        """The e x e matrix over F_p of multiplication by ``x`` in the power basis."""
        cols = [self.digits(self.mul(x, self.p ** j)) for j in range(self.e)]
        return np.array(cols, dtype=np.int64).T.reshape(self.e, self.e)

    def random(self, rng: np.random.Generator) -> int:
        return int(rng.integers(0, self.order))

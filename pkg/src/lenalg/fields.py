"""Exact scalar arithmetic over Q, F_p and F_{p^k}.

All arithmetic is exact: rationals are arbitrary-precision `Fraction`s,
prime-field elements are residues in [0, p), extension-field elements are
coefficient tuples reduced modulo an irreducible monic polynomial.  Values
are canonical, so `==` on payloads is exact field equality and payloads can
be used as dict keys and sorted (payload order is the deterministic
enumeration order used everywhere for witnesses and reports).

A `Field` handle owns the operations; payloads themselves carry no field
reference.  Mixing payloads from different fields is a caller error.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    CharacteristicTwo,
    InfiniteFieldUnsupported,
    NonPrimeModulus,
    ReducibleModulus,
    UnsupportedExtension,
)

# Finite fields are capped well above anything the enumeration engines can
# use; the cap keeps the irreducibility check (trial division) trivially fast.
MAX_FIELD_ORDER = 4096

# Default moduli (little-endian, monic) for the extensions shipped with the
# CLI shorthand names.  Anything else needs an explicit modulus.
DEFAULT_MODULI = {
    (2, 2): (1, 1, 1),        # x^2 + x + 1
    (2, 3): (1, 1, 0, 1),     # x^3 + x + 1
    (3, 2): (1, 0, 1),        # x^2 + 1
}

_RATIONAL_RE = re.compile(r"^[+-]?\d+(/[1-9]\d*)?$")
_INT_RE = re.compile(r"^[+-]?\d+$")


def _is_prime(n):
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class FieldSpec:
    """Declarative description of a field; `field_make` turns it into a handle.

    kind is one of "rationals", "prime", "extension".  For extensions the
    modulus is a little-endian coefficient tuple of length k+1 with leading
    coefficient 1.
    """

    kind: str
    p: int | None = None
    k: int = 1
    modulus: tuple[int, ...] | None = None


class Field:
    """Common surface of all field handles."""

    zero = None
    one = None

    def characteristic(self):
        raise NotImplementedError

    def order(self):
        """Number of elements, or None for infinite fields."""
        return None

    def is_finite(self):
        return self.order() is not None

    def is_two_element_field(self):
        return self.order() == 2

    def elements(self):
        """All elements in payload-lexicographic order (finite fields only)."""
        raise InfiniteFieldUnsupported(f"{self.label()} has infinitely many elements")

    def add(self, a, b):
        raise NotImplementedError

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        raise NotImplementedError

    def neg(self, a):
        raise NotImplementedError

    def inv(self, a):
        raise NotImplementedError

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def halve(self, a):
        """a/2, refusing characteristic 2 where 2 is not invertible."""
        if self.characteristic() == 2:
            raise CharacteristicTwo("cannot divide by two in characteristic 2")
        return self.div(a, self.from_int(2))

    def from_int(self, n):
        """The image of the integer n in this field."""
        raise NotImplementedError

    def parse(self, text):
        raise NotImplementedError

    def render(self, value):
        raise NotImplementedError

    def spec(self):
        raise NotImplementedError

    def label(self):
        raise NotImplementedError

    def __repr__(self):
        return f"<field {self.label()}>"


class Rationals(Field):
    """The rational numbers; payloads are `fractions.Fraction`."""

    zero = Fraction(0)
    one = Fraction(1)

    def characteristic(self):
        return 0

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return 1 / a

    def div(self, a, b):
        if b == 0:
            raise ZeroDivisionError("division by zero")
        return a / b

    def from_int(self, n):
        return Fraction(n)

    def parse(self, text):
        text = text.strip()
        if not _RATIONAL_RE.match(text):
            raise ValueError(f"not a rational scalar: {text!r}")
        return Fraction(text)

    def render(self, value):
        return str(value)

    def spec(self):
        return FieldSpec(kind="rationals")

    def label(self):
        return "Q"

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash("rationals")


class PrimeField(Field):
    """F_p for a prime p; payloads are ints in [0, p)."""

    def __init__(self, p):
        if not _is_prime(p):
            raise NonPrimeModulus(f"{p} is not prime")
        self.p = p
        self.zero = 0
        self.one = 1 % p

    def characteristic(self):
        return self.p

    def order(self):
        return self.p

    def elements(self):
        return iter(range(self.p))

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, self.p - 2, self.p)

    def from_int(self, n):
        return n % self.p

    def parse(self, text):
        text = text.strip()
        if not _INT_RE.match(text):
            raise ValueError(f"not an integer scalar: {text!r}")
        return int(text) % self.p

    def render(self, value):
        return str(value)

    def spec(self):
        return FieldSpec(kind="prime", p=self.p)

    def label(self):
        return f"F{self.p}"

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("prime", self.p))


def _poly_trim(c):
    i = len(c)
    while i > 0 and c[i - 1] == 0:
        i -= 1
    return tuple(c[:i])


def _poly_mul(a, b, p):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _poly_trim(out)


def _poly_mod(a, m, p):
    # m monic
    a = list(a)
    dm = len(m) - 1
    for i in range(len(a) - 1, dm - 1, -1):
        c = a[i] % p
        if c:
            a[i] = 0
            for j in range(dm):
                a[i - dm + j] = (a[i - dm + j] - c * m[j]) % p
    return _poly_trim(a[:dm])


def _poly_divmod(a, b, p):
    # b nonzero; returns (q, r)
    a = list(a)
    db, lb = len(b) - 1, b[-1]
    if db < 0:
        raise ZeroDivisionError
    inv_lb = pow(lb, p - 2, p)
    q = [0] * max(len(a) - db, 0)
    for i in range(len(a) - 1, db - 1, -1):
        c = (a[i] * inv_lb) % p
        if c:
            q[i - db] = c
            for j in range(db + 1):
                a[i - db + j] = (a[i - db + j] - c * b[j]) % p
    return _poly_trim(q), _poly_trim(a)


def _poly_irreducible(m, p):
    """Trial division by every monic polynomial of degree 1..deg(m)//2."""
    deg = len(m) - 1
    if deg <= 0:
        return False
    for d in range(1, deg // 2 + 1):
        for tail in itertools.product(range(p), repeat=d):
            divisor = tuple(tail) + (1,)
            _, r = _poly_divmod(m, divisor, p)
            if not r:
                return False
    return True


class ExtensionField(Field):
    """F_{p^k} as F_p[x]/(modulus); payloads are length-k coefficient tuples."""

    def __init__(self, p, k, modulus=None):
        if not _is_prime(p):
            raise NonPrimeModulus(f"{p} is not prime")
        if k < 1:
            raise UnsupportedExtension(f"extension degree {k} < 1")
        if p ** k > MAX_FIELD_ORDER:
            raise UnsupportedExtension(
                f"GF({p}^{k}) exceeds the supported order bound {MAX_FIELD_ORDER}"
            )
        if modulus is None:
            modulus = DEFAULT_MODULI.get((p, k))
            if modulus is None:
                raise UnsupportedExtension(
                    f"no default modulus for GF({p}^{k}); supply one explicitly"
                )
        modulus = tuple(c % p for c in modulus)
        if len(modulus) != k + 1 or modulus[-1] != 1:
            raise ReducibleModulus(
                f"modulus must be monic of degree {k}, got {list(modulus)}"
            )
        if k >= 1 and not _poly_irreducible(modulus, p):
            raise ReducibleModulus(f"modulus {list(modulus)} factors over F_{p}")
        self.p = p
        self.k = k
        self.modulus = modulus
        self.zero = (0,) * k
        self.one = tuple([1 % p] + [0] * (k - 1))
        q = p ** k
        self._mul_table = None
        self._inv_table = None
        if q * q <= 65536:
            elems = list(self.elements())
            table = {}
            for a in elems:
                for b in elems:
                    table[(a, b)] = self._mul_raw(a, b)
            self._mul_table = table
            inv = {}
            for a in elems:
                if a != self.zero:
                    for b in elems:
                        if table[(a, b)] == self.one:
                            inv[a] = b
                            break
            self._inv_table = inv

    def characteristic(self):
        return self.p

    def order(self):
        return self.p ** self.k

    def elements(self):
        return (tuple(t) for t in itertools.product(range(self.p), repeat=self.k))

    def add(self, a, b):
        p = self.p
        return tuple((x + y) % p for x, y in zip(a, b))

    def sub(self, a, b):
        p = self.p
        return tuple((x - y) % p for x, y in zip(a, b))

    def neg(self, a):
        p = self.p
        return tuple((-x) % p for x in a)

    def _pad(self, c):
        return tuple(c) + (0,) * (self.k - len(c))

    def _mul_raw(self, a, b):
        return self._pad(_poly_mod(_poly_mul(_poly_trim(a), _poly_trim(b), self.p),
                                   self.modulus, self.p))

    def mul(self, a, b):
        if self._mul_table is not None:
            return self._mul_table[(a, b)]
        return self._mul_raw(a, b)

    def inv(self, a):
        if a == self.zero:
            raise ZeroDivisionError("inverse of zero")
        if self._inv_table is not None:
            return self._inv_table[a]
        # extended Euclid in F_p[x]
        r0, r1 = self.modulus, _poly_trim(a)
        s0, s1 = (), (1,)
        p = self.p
        while r1:
            q, r = _poly_divmod(r0, r1, p)
            r0, r1 = r1, r
            qs1 = _poly_mul(q, s1, p)
            new_s = _poly_trim([(x - y) % p for x, y in
                                itertools.zip_longest(s0, qs1, fillvalue=0)])
            s0, s1 = s1, new_s
        # r0 is a nonzero constant gcd
        c_inv = pow(r0[0], p - 2, p)
        return self._pad(_poly_mul(s0, (c_inv,), p))

    def from_int(self, n):
        return self._pad((n % self.p,))

    def parse(self, text):
        text = text.strip()
        if text.startswith("[") and text.endswith("]"):
            inner = text[1:-1].strip()
            parts = [s.strip() for s in inner.split(",")] if inner else []
            if any(not _INT_RE.match(s) for s in parts):
                raise ValueError(f"bad coefficient list: {text!r}")
            coeffs = [int(s) % self.p for s in parts]
            if len(coeffs) > self.k:
                raise ValueError(f"coefficient list longer than degree {self.k}: {text!r}")
            return self._pad(coeffs)
        if _INT_RE.match(text):
            # integers embed via the prime subfield
            return self.from_int(int(text))
        raise ValueError(f"not an extension-field scalar: {text!r}")

    def render(self, value):
        return "[" + ",".join(str(c) for c in value) + "]"

    def spec(self):
        return FieldSpec(kind="extension", p=self.p, k=self.k, modulus=self.modulus)

    def label(self):
        if DEFAULT_MODULI.get((self.p, self.k)) == self.modulus:
            return f"GF{self.p ** self.k}"
        return f"GF({self.p}^{self.k})"

    def __eq__(self, other):
        return (isinstance(other, ExtensionField) and other.p == self.p
                and other.k == self.k and other.modulus == self.modulus)

    def __hash__(self):
        return hash(("extension", self.p, self.k, self.modulus))


def field_make(spec):
    """Build a field handle from a FieldSpec."""
    if spec.kind == "rationals":
        return Rationals()
    if spec.kind == "prime":
        return PrimeField(spec.p)
    if spec.kind == "extension":
        return ExtensionField(spec.p, spec.k, spec.modulus)
    raise ValueError(f"unknown field kind {spec.kind!r}")


_SHORTHAND = {"Q": FieldSpec(kind="rationals")}
for _p in (2, 3, 5, 7, 11, 13):
    _SHORTHAND[f"F{_p}"] = FieldSpec(kind="prime", p=_p)
for (_p, _k), _m in DEFAULT_MODULI.items():
    _SHORTHAND[f"GF{_p ** _k}"] = FieldSpec(kind="extension", p=_p, k=_k, modulus=_m)


def make_field(name):
    """Field from a shorthand label: "Q", "F<p>", or "GF4"/"GF8"/"GF9"."""
    if isinstance(name, Field):
        return name
    if isinstance(name, FieldSpec):
        return field_make(name)
    key = name.strip()
    if key in _SHORTHAND:
        return field_make(_SHORTHAND[key])
    m = re.match(r"^F(\d+)$", key)
    if m:
        return PrimeField(int(m.group(1)))
    raise ValueError(f"unknown field shorthand {name!r}")


def halve(field, value):
    """value/2 over the given field; errors in characteristic 2."""
    return field.halve(value)

"""Exact arithmetic for small finite commutative rings.

Supported ring kinds:

* ``Zmod(m)``, the integers mod m,
* ``GaloisField(p, k, modulus)``, the field with p^k elements presented as
  Z/p[x] modulo a monic irreducible polynomial,
* ``GaloisRing(p, e, k, modulus)``, the local ring Z/p^e[x] modulo a monic
  lift of an irreducible polynomial, with residue field GF(p^k),
* ``ProductRing(rings)``, finite products.

Every ring enumerates its elements in a fixed canonical order, so unit
indices, reports and downstream lattices are reproducible across runs.
Rings are immutable after construction and all operations are pure.

When no modulus is given, the lexicographically smallest monic irreducible
of the requested degree is chosen (coefficient tuples compared from the
leading coefficient down, i.e. enumeration by the base-p integer value of
the non-leading coefficients).  Galois ring moduli are the coefficientwise
lifts of that choice to {0, ..., p-1}.
"""

from __future__ import annotations

from math import gcd
from typing import Iterable, Optional, Sequence

DEFAULT_ELEMENT_BOUND = 1 << 16


class RingError(ValueError):
    """Invalid ring construction or an operation on incompatible elements."""


class RingSpecError(RingError):
    """A ring spec string failed to parse; carries the offending token."""

    def __init__(self, message: str, token: str = ""):
        super().__init__(message)
        self.token = token


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


# ---------------------------------------------------------------------------
# polynomial helpers over Z/m (coefficient tuples, index = degree)


def _poly_trim(c: list[int]) -> tuple[int, ...]:
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def _poly_add(a, b, m):
    n = max(len(a), len(b))
    out = [0] * n
    for i, x in enumerate(a):
        out[i] = x
    for i, x in enumerate(b):
        out[i] = (out[i] + x) % m
    return _poly_trim(out)


def _poly_neg(a, m):
    return _poly_trim([(-x) % m for x in a])


def _poly_mul(a, b, m):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _poly_trim([v % m for v in out])


def _poly_rem_monic(a, mod, m):
    """Remainder of a modulo a monic polynomial, coefficients in Z/m."""
    a = list(a)
    d = len(mod) - 1
    while len(a) > d:
        lead = a[-1] % m
        if lead:
            shift = len(a) - 1 - d
            for i in range(d):
                a[shift + i] = (a[shift + i] - lead * mod[i]) % m
        a.pop()
    return _poly_trim([v % m for v in a])


def _poly_divmod_field(a, b, p):
    """Polynomial division over Z/p (p prime), b nonzero."""
    a = [x % p for x in a]
    b = [x % p for x in b]
    while b and b[-1] == 0:
        b.pop()
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    inv_lead = pow(b[-1], -1, p)
    q = [0] * max(0, len(a) - len(b) + 1)
    while len(a) >= len(b) and any(a):
        while a and a[-1] == 0:
            a.pop()
        if len(a) < len(b):
            break
        coeff = (a[-1] * inv_lead) % p
        shift = len(a) - len(b)
        q[shift] = coeff
        for i, bx in enumerate(b):
            a[shift + i] = (a[shift + i] - coeff * bx) % p
    return _poly_trim(q), _poly_trim([x % p for x in a])


def _poly_is_irreducible(mod: Sequence[int], p: int) -> bool:
    """Exhaustive trial division by all monic polynomials of degree <= k/2."""
    k = len(mod) - 1
    if k < 1:
        return False
    if k == 1:
        return True
    for deg in range(1, k // 2 + 1):
        for idx in range(p**deg):
            cand = []
            v = idx
            for _ in range(deg):
                cand.append(v % p)
                v //= p
            cand.append(1)
            _, rem = _poly_divmod_field(list(mod), cand, p)
            if not rem:
                return False
    return True


def smallest_irreducible(p: int, k: int) -> tuple[int, ...]:
    """Lexicographically smallest monic irreducible of degree k over Z/p."""
    for idx in range(p**k):
        coeffs = []
        v = idx
        for _ in range(k):
            coeffs.append(v % p)
            v //= p
        # idx counts with the constant term fastest, which is exactly
        # lexicographic order on (a_{k-1}, ..., a_0)
        coeffs.append(1)
        if _poly_is_irreducible(coeffs, p):
            return tuple(coeffs)
    raise RingError(f"no irreducible polynomial of degree {k} over Z/{p}")


def _poly_str(coeffs: Sequence[int]) -> str:
    terms = []
    for deg in range(len(coeffs) - 1, -1, -1):
        c = coeffs[deg]
        if not c:
            continue
        if deg == 0:
            terms.append(str(c))
        elif deg == 1:
            terms.append("x" if c == 1 else f"{c}x")
        else:
            terms.append(f"x^{deg}" if c == 1 else f"{c}x^{deg}")
    return "+".join(terms) if terms else "0"


# ---------------------------------------------------------------------------
# elements


class RingElement:
    """Immutable element of a finite ring, identified by canonical coords.

    Elements of two structurally equal rings (same kind, parameters and
    modulus) compare and hash alike even when the handles are distinct.
    """

    __slots__ = ("ring", "coords", "_hash")

    def __init__(self, ring: "Ring", coords):
        self.ring = ring
        self.coords = coords
        object.__setattr__(self, "_hash", hash((hash(ring), coords)))

    def __setattr__(self, name, value):
        if name in ("ring", "coords") and hasattr(self, "_hash"):
            raise AttributeError("RingElement is immutable")
        object.__setattr__(self, name, value)

    def __eq__(self, other):
        if not isinstance(other, RingElement):
            return NotImplemented
        if self.ring is not other.ring and self.ring != other.ring:
            return False
        return self.coords == other.coords

    def __hash__(self):
        return self._hash

    def __add__(self, other):
        return self.ring.add(self, self.ring.coerce(other))

    __radd__ = __add__

    def __neg__(self):
        return self.ring.neg(self)

    def __sub__(self, other):
        return self.ring.add(self, self.ring.neg(self.ring.coerce(other)))

    def __mul__(self, other):
        return self.ring.mul(self, self.ring.coerce(other))

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            base = self.inverse()
            n = -n
        else:
            base = self
        acc = self.ring.one
        while n:
            if n & 1:
                acc = self.ring.mul(acc, base)
            base = self.ring.mul(base, base)
            n >>= 1
        return acc

    def is_unit(self) -> bool:
        return self.ring.inverse_or_none(self) is not None

    def inverse(self) -> "RingElement":
        inv = self.ring.inverse_or_none(self)
        if inv is None:
            raise RingError(f"{self} is not a unit in {self.ring.spec_string()}")
        return inv

    def is_zero(self) -> bool:
        return self == self.ring.zero

    def __str__(self):
        return self.ring.format_element(self)

    def __repr__(self):
        return f"<{self} in {self.ring.spec_string()}>"


class Ring:
    """Common interface for the concrete ring kinds."""

    card: int

    def __init__(self):
        self._units: Optional[list[RingElement]] = None
        self._unit_index: Optional[dict[RingElement, int]] = None
        self._zero: Optional[RingElement] = None
        self._one: Optional[RingElement] = None
        self._hash_cache: Optional[int] = None

    # subclasses implement: _add, _neg, _mul, _inverse_or_none,
    # _enumerate_coords, _zero_coords, _one_coords, format_element,
    # spec_string, characteristic

    @property
    def zero(self) -> RingElement:
        if self._zero is None:
            self._zero = RingElement(self, self._zero_coords())
        return self._zero

    @property
    def one(self) -> RingElement:
        if self._one is None:
            self._one = RingElement(self, self._one_coords())
        return self._one

    def coerce(self, x) -> RingElement:
        if isinstance(x, RingElement):
            if x.ring is not self:
                raise RingError("ring mismatch")
            return x
        if isinstance(x, int):
            return self.from_int(x)
        raise RingError(f"cannot coerce {x!r} into {self.spec_string()}")

    def from_int(self, n: int) -> RingElement:
        out = self.zero
        step = self.one if n >= 0 else self.neg(self.one)
        for _ in range(abs(n)):
            out = self.add(out, step)
        return out

    def add(self, a: RingElement, b: RingElement) -> RingElement:
        return RingElement(self, self._add(a.coords, b.coords))

    def neg(self, a: RingElement) -> RingElement:
        return RingElement(self, self._neg(a.coords))

    def mul(self, a: RingElement, b: RingElement) -> RingElement:
        return RingElement(self, self._mul(a.coords, b.coords))

    def inverse_or_none(self, a: RingElement) -> Optional[RingElement]:
        coords = self._inverse_or_none(a.coords)
        return None if coords is None else RingElement(self, coords)

    def elements(self) -> Iterable[RingElement]:
        for coords in self._enumerate_coords():
            yield RingElement(self, coords)

    def units(self) -> list[RingElement]:
        if self._units is None:
            self._units = [x for x in self.elements() if x.is_unit()]
            self._unit_index = {u: i for i, u in enumerate(self._units)}
        return self._units

    def unit_index(self, u: RingElement) -> int:
        self.units()
        try:
            return self._unit_index[u]
        except KeyError:
            raise RingError(f"{u} is not a unit of {self.spec_string()}") from None

    def unit_squares(self) -> frozenset[RingElement]:
        return frozenset(u * u for u in self.units())

    def minus_one(self) -> RingElement:
        return self.neg(self.one)

    @property
    def is_field(self) -> bool:
        return False

    def characteristic(self) -> int:
        n = 1
        acc = self.one
        while not acc.is_zero():
            acc = self.add(acc, self.one)
            n += 1
        return n

    def _eq_key(self):
        return (type(self).__name__, self.spec_string())

    def __eq__(self, other):
        if self is other:
            return True
        return isinstance(other, Ring) and self._eq_key() == other._eq_key()

    def __hash__(self):
        cached = getattr(self, "_hash_cache", None)
        if cached is None:
            cached = hash(self._eq_key())
            object.__setattr__(self, "_hash_cache", cached)
        return cached

    def __repr__(self):
        return self.spec_string()


class Zmod(Ring):
    """Integers modulo m, m >= 2; elements are residues 0..m-1."""

    def __init__(self, m: int, max_elements: int = DEFAULT_ELEMENT_BOUND):
        super().__init__()
        if m < 2:
            raise RingError(f"Z/{m}: modulus must be at least 2")
        if m > max_elements:
            raise RingError(f"Z/{m} exceeds the element bound {max_elements}")
        self.m = m
        self.card = m

    def _zero_coords(self):
        return 0

    def _one_coords(self):
        return 1 % self.m

    def _add(self, a, b):
        return (a + b) % self.m

    def _neg(self, a):
        return (-a) % self.m

    def _mul(self, a, b):
        return (a * b) % self.m

    def _inverse_or_none(self, a):
        if gcd(a, self.m) != 1:
            return None
        return pow(a, -1, self.m)

    def _enumerate_coords(self):
        return range(self.m)

    def from_int(self, n: int) -> RingElement:
        return RingElement(self, n % self.m)

    @property
    def is_field(self) -> bool:
        return _is_prime(self.m)

    def characteristic(self) -> int:
        return self.m

    def format_element(self, el: RingElement) -> str:
        return str(el.coords)

    def spec_string(self) -> str:
        return f"Z/{self.m}"


class GaloisField(Ring):
    """GF(p^k) = Z/p[x] / (modulus); elements are coefficient tuples."""

    def __init__(self, p: int, k: int, modulus: Optional[Sequence[int]] = None,
                 max_elements: int = DEFAULT_ELEMENT_BOUND):
        super().__init__()
        if not _is_prime(p):
            raise RingError(f"GF({p}^{k}): {p} is not prime")
        if k < 1:
            raise RingError(f"GF({p}^{k}): degree must be positive")
        if p**k > max_elements:
            raise RingError(f"GF({p}^{k}) exceeds the element bound {max_elements}")
        self.p = p
        self.k = k
        self._canonical_modulus = modulus is None
        if modulus is None:
            modulus = smallest_irreducible(p, k)
        modulus = tuple(c % p for c in modulus)
        if len(modulus) != k + 1 or modulus[-1] != 1:
            raise RingError(f"GF({p}^{k}): modulus must be monic of degree {k}")
        if not _poly_is_irreducible(modulus, p):
            raise RingError(f"GF({p}^{k}): reducible modulus {_poly_str(modulus)}")
        self.modulus = modulus
        self.card = p**k

    def _pad(self, coeffs):
        return tuple(coeffs) + (0,) * (self.k - len(coeffs))

    def _zero_coords(self):
        return (0,) * self.k

    def _one_coords(self):
        return self._pad((1,)) if self.k else ()

    def _add(self, a, b):
        return tuple((x + y) % self.p for x, y in zip(a, b))

    def _neg(self, a):
        return tuple((-x) % self.p for x in a)

    def _mul(self, a, b):
        prod = _poly_mul(_poly_trim(list(a)), _poly_trim(list(b)), self.p)
        return self._pad(_poly_rem_monic(prod, self.modulus, self.p))

    def _inverse_or_none(self, a):
        a_t = _poly_trim(list(a))
        if not a_t:
            return None
        # extended Euclid over Z/p[x]
        r0, r1 = tuple(self.modulus), a_t
        s0, s1 = (), (1,)
        while r1:
            q, r = _poly_divmod_field(list(r0), list(r1), self.p)
            r0, r1 = r1, r
            s0, s1 = s1, _poly_add(s0, _poly_neg(_poly_mul(q, s1, self.p), self.p), self.p)
        # r0 is a nonzero constant gcd
        inv_c = pow(r0[0], -1, self.p)
        inv = _poly_mul(s0, (inv_c,), self.p)
        return self._pad(_poly_rem_monic(inv, self.modulus, self.p))

    def _enumerate_coords(self):
        for idx in range(self.card):
            coords = []
            v = idx
            for _ in range(self.k):
                coords.append(v % self.p)
                v //= self.p
            yield tuple(coords)

    def gen(self) -> RingElement:
        """The class of x."""
        if self.k == 1:
            return RingElement(self, self._pad(_poly_rem_monic((0, 1), self.modulus, self.p)))
        return RingElement(self, self._pad((0, 1)))

    @property
    def is_field(self) -> bool:
        return True

    def characteristic(self) -> int:
        return self.p

    def format_element(self, el: RingElement) -> str:
        return _poly_str(el.coords)

    def _eq_key(self):
        return ("GaloisField", self.p, self.k, self.modulus)

    def spec_string(self) -> str:
        if self._canonical_modulus:
            return f"GF({self.p}^{self.k})"
        return f"GF({self.p}^{self.k};{_poly_str(self.modulus)})"


class GaloisRing(Ring):
    """GR(p^e, k) = Z/p^e[x] / (monic lift of an irreducible over Z/p)."""

    def __init__(self, p: int, e: int, k: int, modulus: Optional[Sequence[int]] = None,
                 max_elements: int = DEFAULT_ELEMENT_BOUND):
        super().__init__()
        if not _is_prime(p):
            raise RingError(f"GR({p}^{e},{k}): {p} is not prime")
        if e < 1 or k < 1:
            raise RingError(f"GR({p}^{e},{k}): exponent and degree must be positive")
        if p ** (e * k) > max_elements:
            raise RingError(f"GR({p}^{e},{k}) exceeds the element bound {max_elements}")
        self.p = p
        self.e = e
        self.k = k
        self.q = p**e
        self._canonical_modulus = modulus is None
        if modulus is None:
            modulus = smallest_irreducible(p, k)  # lift is coefficientwise
        modulus = tuple(c % self.q for c in modulus)
        if len(modulus) != k + 1 or modulus[-1] != 1:
            raise RingError(f"GR({p}^{e},{k}): modulus must be monic of degree {k}")
        reduced = tuple(c % p for c in modulus)
        if not _poly_is_irreducible(reduced, p):
            raise RingError(
                f"GR({p}^{e},{k}): reducible modulus {_poly_str(modulus)} mod {p}"
            )
        self.modulus = modulus
        self.residue_field = GaloisField(p, k, reduced, max_elements=max_elements)
        self.card = p ** (e * k)

    def _pad(self, coeffs):
        return tuple(coeffs) + (0,) * (self.k - len(coeffs))

    def _zero_coords(self):
        return (0,) * self.k

    def _one_coords(self):
        return self._pad((1,))

    def _add(self, a, b):
        return tuple((x + y) % self.q for x, y in zip(a, b))

    def _neg(self, a):
        return tuple((-x) % self.q for x in a)

    def _mul(self, a, b):
        prod = _poly_mul(_poly_trim(list(a)), _poly_trim(list(b)), self.q)
        return self._pad(_poly_rem_monic(prod, self.modulus, self.q))

    def residue(self, el: RingElement) -> RingElement:
        """Image in the residue field GF(p^k)."""
        return RingElement(self.residue_field, tuple(c % self.p for c in el.coords))

    def _inverse_or_none(self, a):
        res = tuple(c % self.p for c in a)
        inv0 = self.residue_field._inverse_or_none(res)
        if inv0 is None:
            return None
        # Newton lift: y -> y(2 - a y) doubles p-adic precision
        y = tuple(c % self.q for c in inv0)
        one = self._one_coords()
        for _ in range(self.e.bit_length() + 1):
            ay = self._mul(a, y)
            if ay == one:
                return y
            two_minus = self._add(self._neg(ay), self._add(one, one))
            y = self._mul(y, two_minus)
        return y if self._mul(a, y) == one else None

    def _enumerate_coords(self):
        for idx in range(self.card):
            coords = []
            v = idx
            for _ in range(self.k):
                coords.append(v % self.q)
                v //= self.q
            yield tuple(coords)

    def gen(self) -> RingElement:
        return RingElement(self, self._pad((0, 1)) if self.k > 1 else
                           self._pad(_poly_rem_monic((0, 1), self.modulus, self.q)))

    @property
    def is_field(self) -> bool:
        return self.e == 1

    def characteristic(self) -> int:
        return self.q

    def format_element(self, el: RingElement) -> str:
        return _poly_str(el.coords)

    def _eq_key(self):
        return ("GaloisRing", self.p, self.e, self.k, self.modulus)

    def spec_string(self) -> str:
        if self._canonical_modulus:
            return f"GR({self.p}^{self.e},{self.k})"
        return f"GR({self.p}^{self.e},{self.k};{_poly_str(self.modulus)})"


class ProductRing(Ring):
    """Finite product of rings; elements are tuples of components."""

    def __init__(self, factors: Sequence[Ring], max_elements: int = DEFAULT_ELEMENT_BOUND):
        super().__init__()
        if not factors:
            raise RingError("product ring needs at least one factor")
        card = 1
        for f in factors:
            card *= f.card
        if card > max_elements:
            raise RingError(f"product ring exceeds the element bound {max_elements}")
        self.factors = tuple(factors)
        self.card = card

    def _zero_coords(self):
        return tuple(f.zero for f in self.factors)

    def _one_coords(self):
        return tuple(f.one for f in self.factors)

    def _add(self, a, b):
        return tuple(f.add(x, y) for f, x, y in zip(self.factors, a, b))

    def _neg(self, a):
        return tuple(f.neg(x) for f, x in zip(self.factors, a))

    def _mul(self, a, b):
        return tuple(f.mul(x, y) for f, x, y in zip(self.factors, a, b))

    def _inverse_or_none(self, a):
        out = []
        for f, x in zip(self.factors, a):
            inv = f.inverse_or_none(x)
            if inv is None:
                return None
            out.append(inv)
        return tuple(out)

    def _enumerate_coords(self):
        def rec(i):
            if i == len(self.factors):
                yield ()
                return
            for rest in rec(i + 1):
                for x in self.factors[i].elements():
                    yield (x,) + rest

        # first factor varies fastest, matching the base-q digit orders above
        return rec(0)

    def format_element(self, el: RingElement) -> str:
        return "(" + ",".join(str(x) for x in el.coords) + ")"

    def spec_string(self) -> str:
        return "prod(" + ",".join(f.spec_string() for f in self.factors) + ")"


# ---------------------------------------------------------------------------
# the 2x2 elementary matrix identity


def mat2_mul(a, b):
    return (
        (a[0][0] * b[0][0] + a[0][1] * b[1][0], a[0][0] * b[0][1] + a[0][1] * b[1][1]),
        (a[1][0] * b[0][0] + a[1][1] * b[1][0], a[1][0] * b[0][1] + a[1][1] * b[1][1]),
    )


def elementary_factorization(ring: Ring, a: RingElement):
    """Write diag(a, a^-1) as an explicit product of elementary matrices.

    Expanding the commutator of diag(a, 1) with w = e12(1) e21(-1) e12(1)
    gives the word

        e12(a) e21(-a^-1) e12(a) e12(-1) e21(1) e12(-1),

    whose product is diag(a, a^-1).  The product is verified before the
    factor list is returned.
    """
    a = ring.coerce(a)
    ainv = a.inverse()
    one = ring.one
    zero = ring.zero

    def e12(t):
        return ((one, t), (zero, one))

    def e21(t):
        return ((one, zero), (t, one))

    word = [e12(a), e21(-ainv), e12(a), e12(-one), e21(one), e12(-one)]
    prod = ((one, zero), (zero, one))
    for m in word:
        prod = mat2_mul(prod, m)
    expected = ((a, zero), (zero, ainv))
    if prod != expected:
        raise RingError("elementary factorization failed verification")
    return word


# ---------------------------------------------------------------------------
# ring spec mini-language:
#   Z/<m>   GF(<p>^<k>)   GF(<p>^<k>;<poly>)   GR(<p>^<e>,<k>)   prod(...)


def _parse_poly(text: str, token_context: str) -> tuple[int, ...]:
    text = text.replace(" ", "")
    if not text:
        raise RingSpecError("empty polynomial", token_context)
    coeffs: dict[int, int] = {}
    # split into signed terms
    terms = []
    cur = ""
    for ch in text:
        if ch in "+-" and cur:
            terms.append(cur)
            cur = ch if ch == "-" else ""
        else:
            cur += ch
    if cur:
        terms.append(cur)
    for term in terms:
        t = term
        sign = 1
        if t.startswith("-"):
            sign = -1
            t = t[1:]
        elif t.startswith("+"):
            t = t[1:]
        if not t:
            raise RingSpecError(f"bad polynomial term {term!r}", term)
        if "x" in t:
            coef_s, _, exp_s = t.partition("x")
            coef_s = coef_s.rstrip("*")
            coef = int(coef_s) if coef_s else 1
            if exp_s.startswith("^"):
                exp = int(exp_s[1:])
            elif exp_s == "":
                exp = 1
            else:
                raise RingSpecError(f"bad polynomial term {term!r}", term)
        else:
            if not t.isdigit():
                raise RingSpecError(f"bad polynomial term {term!r}", term)
            coef = int(t)
            exp = 0
        coeffs[exp] = coeffs.get(exp, 0) + sign * coef
    deg = max(coeffs)
    return tuple(coeffs.get(i, 0) for i in range(deg + 1))


def _split_top_commas(text: str) -> list[str]:
    parts = []
    depth = 0
    cur = ""
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == "," and depth == 0:
            parts.append(cur)
            cur = ""
        else:
            cur += ch
    parts.append(cur)
    return parts


def _parse_prime_power(text: str) -> tuple[int, int]:
    """Parse 'p^k' or a plain prime power q, returning (p, k)."""
    if "^" in text:
        p_s, _, k_s = text.partition("^")
        if not (p_s.strip().isdigit() and k_s.strip().isdigit()):
            raise RingSpecError(f"bad prime power {text!r}", text)
        p = int(p_s)
        if not _is_prime(p):
            raise RingSpecError(f"{p} is not prime in {text!r}", p_s.strip())
        return p, int(k_s)
    if not text.strip().isdigit():
        raise RingSpecError(f"bad prime power {text!r}", text)
    q = int(text)
    for p in range(2, q + 1):
        if _is_prime(p) and q % p == 0:
            k = 0
            while q % p == 0:
                q //= p
                k += 1
            if q != 1:
                raise RingSpecError(f"{text!r} is not a prime power", text)
            return p, k
    raise RingSpecError(f"{text!r} is not a prime power", text)


def parse_ring_spec(spec: str, max_elements: int = DEFAULT_ELEMENT_BOUND) -> Ring:
    """Parse the ring spec mini-language into a ring handle."""
    s = spec.strip()
    if s.startswith("Z/"):
        body = s[2:].strip()
        if not body.lstrip("-").isdigit():
            raise RingSpecError(f"bad modulus {body!r} in {spec!r}", body)
        return Zmod(int(body), max_elements=max_elements)
    if s.startswith("GF(") and s.endswith(")"):
        body = s[3:-1]
        head, _, poly = body.partition(";")
        p, k = _parse_prime_power(head.strip())
        modulus = _parse_poly(poly, spec) if poly else None
        return GaloisField(p, k, modulus, max_elements=max_elements)
    if s.startswith("GR(") and s.endswith(")"):
        body = s[3:-1]
        head, _, poly = body.partition(";")
        parts = _split_top_commas(head)
        if len(parts) != 2:
            raise RingSpecError(f"GR spec needs two arguments in {spec!r}", head)
        p, e = _parse_prime_power(parts[0].strip())
        if not parts[1].strip().isdigit():
            raise RingSpecError(f"bad degree {parts[1]!r} in {spec!r}", parts[1])
        k = int(parts[1])
        modulus = _parse_poly(poly, spec) if poly else None
        return GaloisRing(p, e, k, modulus, max_elements=max_elements)
    if s.startswith("prod(") and s.endswith(")"):
        inner = s[5:-1]
        factors = [parse_ring_spec(part, max_elements=max_elements)
                   for part in _split_top_commas(inner)]
        return ProductRing(factors, max_elements=max_elements)
    raise RingSpecError(f"unrecognized ring spec {spec!r}", s)


def make_ring(spec) -> Ring:
    """Accept a ring handle or a spec string and return a ring handle."""
    if isinstance(spec, Ring):
        return spec
    if isinstance(spec, str):
        return parse_ring_spec(spec)
    raise RingError(f"cannot build a ring from {spec!r}")

"""Exact arithmetic in the four supported UFDs: Z, F_p[x], Z[x] and F_p[x,y].

Every element is a sparse map from exponent tuples to integer coefficients.
Integers are the zero-variable case, so ``Z`` elements carry the single key
``()``.  Coefficients of the ``F_p`` rings are kept in ``[0, p)`` and zero
coefficients are never stored.

Canonical associates (used by every gcd and factorization):

* Z: nonnegative;
* Z[x]: positive leading coefficient;
* F_p[x], F_p[x,y]: monic under graded-lexicographic order with x > y.
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass
from functools import reduce
from itertools import product

__all__ = [
    "Ring", "Poly", "PrimeFactorization",
    "RingMismatchError", "ExactDivisionError", "UnsupportedFactorizationError",
    "gcd_many", "lcm", "factor", "multiplicity", "divide_exact", "divides",
    "gcdex", "parse_poly", "is_prime_int",
]

TRIAL_DIVISION_BOUND = 10**6

_KINDS = {"Z": 0, "Fp_x": 1, "Zx": 1, "Fp_xy": 2}
_VARS = ("x", "y")


class RingMismatchError(ValueError):
    """Operands live in different rings."""


class ExactDivisionError(ArithmeticError):
    """Raised by :func:`divide_exact` when the divisor does not divide."""


class UnsupportedFactorizationError(ValueError):
    """The element lies outside the class this module can factor."""


def is_prime_int(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    i = 3
    while i * i <= n:
        if n % i == 0:
            return False
        i += 2
    return True


@dataclass(frozen=True)
class Ring:
    """One of Z, F_p[x], Z[x], F_p[x,y]."""

    kind: str
    p: int | None = None

    def __post_init__(self):
        if self.kind not in _KINDS:
            raise ValueError(f"unknown ring kind {self.kind!r}")
        if self.kind.startswith("Fp"):
            if self.p is None or not is_prime_int(self.p):
                raise ValueError(f"F_p rings need a prime p, got {self.p!r}")
        elif self.p is not None:
            raise ValueError(f"{self.kind} takes no characteristic")

    @classmethod
    def integers(cls):
        return cls("Z")

    @classmethod
    def fp_x(cls, p):
        return cls("Fp_x", p)

    @classmethod
    def z_x(cls):
        return cls("Zx")

    @classmethod
    def fp_xy(cls, p):
        return cls("Fp_xy", p)

    @property
    def nvars(self) -> int:
        return _KINDS[self.kind]

    @property
    def is_pid(self) -> bool:
        return self.kind in ("Z", "Fp_x")

    @property
    def modulus(self) -> int | None:
        return self.p

    def __str__(self):
        return {"Z": "Z", "Zx": "Z[x]", "Fp_x": f"F{self.p}[x]",
                "Fp_xy": f"F{self.p}[x,y]"}[self.kind]

    def __call__(self, value) -> "Poly":
        if isinstance(value, Poly):
            if value.ring != self:
                raise RingMismatchError(f"{value!r} is not in {self}")
            return value
        if isinstance(value, int):
            return Poly(self, {(0,) * self.nvars: value})
        if isinstance(value, str):
            return parse_poly(value, self)
        if isinstance(value, dict):
            return Poly(self, value)
        raise TypeError(f"cannot coerce {type(value).__name__} into {self}")

    @property
    def zero(self) -> "Poly":
        return Poly._make(self, {})

    @property
    def one(self) -> "Poly":
        return Poly._make(self, {(0,) * self.nvars: 1})

    def gen(self, name: str) -> "Poly":
        idx = _VARS.index(name)
        if idx >= self.nvars:
            raise ValueError(f"{self} has no variable {name}")
        e = [0] * self.nvars
        e[idx] = 1
        return Poly._make(self, {tuple(e): 1})

    def monomial(self, exps, coeff=1) -> "Poly":
        return Poly(self, {tuple(exps): coeff})

    def units(self):
        """Representatives of the unit group of the ring itself."""
        if self.p is None:
            return [self.one, -self.one]
        return [self(c) for c in range(1, self.p)]


def _grlex(e):
    return (sum(e), e)


class Poly:
    """Immutable element of a :class:`Ring`."""

    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring: Ring, terms):
        p = ring.p
        n = ring.nvars
        acc = {}
        for e, c in terms.items():
            e = tuple(e)
            if len(e) != n or any(x < 0 for x in e):
                raise ValueError(f"bad exponent {e} for {ring}")
            acc[e] = acc.get(e, 0) + c
        if p is not None:
            clean = {e: c % p for e, c in acc.items() if c % p}
        else:
            clean = {e: c for e, c in acc.items() if c}
        self.ring = ring
        self.terms = clean
        self._hash = None

    @classmethod
    def _make(cls, ring, terms):
        obj = object.__new__(cls)
        obj.ring = ring
        obj.terms = terms
        obj._hash = None
        return obj

    # -- inspection -------------------------------------------------------
    def __bool__(self):
        return bool(self.terms)

    def is_zero(self):
        return not self.terms

    def is_constant(self):
        return not self.terms or (len(self.terms) == 1 and not any(next(iter(self.terms))))

    def constant_coeff(self) -> int:
        return self.terms.get((0,) * self.ring.nvars, 0)

    def is_term(self):
        return len(self.terms) == 1

    def degree(self, var: int = 0) -> int:
        """Degree in one variable (-1 for zero); total degree for Z is 0."""
        if not self.terms:
            return -1
        if self.ring.nvars == 0:
            return 0
        return max(e[var] for e in self.terms)

    def total_degree(self) -> int:
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def leading_exp(self):
        return max(self.terms, key=_grlex)

    def leading_coeff(self) -> int:
        return self.terms[self.leading_exp()] if self.terms else 0

    def int_value(self) -> int:
        if self.ring.nvars:
            raise TypeError("int_value only for Z")
        return self.terms.get((), 0)

    def content(self) -> int:
        """gcd of the integer coefficients (Z and Z[x])."""
        return reduce(math.gcd, self.terms.values(), 0)

    def is_unit(self) -> bool:
        if not self.is_constant() or not self.terms:
            return False
        if self.ring.p is not None:
            return True
        return abs(self.constant_coeff()) == 1

    def unit_inverse(self) -> "Poly":
        if not self.is_unit():
            raise ArithmeticError(f"{self} is not a unit of {self.ring}")
        c = self.constant_coeff()
        if self.ring.p is not None:
            return self.ring(pow(c, -1, self.ring.p))
        return self

    # -- arithmetic -------------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, Poly):
            if other.ring != self.ring:
                raise RingMismatchError(f"{self.ring} vs {other.ring}")
            return other
        if isinstance(other, int):
            return self.ring(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        p = self.ring.p
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = out.get(e, 0) + c
            if p is not None:
                v %= p
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return Poly._make(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        p = self.ring.p
        if p is None:
            return Poly._make(self.ring, {e: -c for e, c in self.terms.items()})
        return Poly._make(self.ring, {e: (-c) % p for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        p = self.ring.p
        out = {}
        if self.ring.nvars == 0:
            if self.terms and other.terms:
                v = self.terms[()] * other.terms[()]
                if p is not None:
                    v %= p
                if v:
                    out[()] = v
            return Poly._make(self.ring, out)
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        if p is not None:
            out = {e: c % p for e, c in out.items() if c % p}
        else:
            out = {e: c for e, c in out.items() if c}
        return Poly._make(self.ring, out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        result = self.ring.one
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def scale(self, c: int) -> "Poly":
        return self * self.ring(c)

    def shift(self, exps) -> "Poly":
        """Multiply by the monomial with the given exponents."""
        return Poly._make(self.ring, {tuple(a + b for a, b in zip(e, exps)): c
                                      for e, c in self.terms.items()})

    def __eq__(self, other):
        if isinstance(other, int):
            other = self.ring(other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self.terms.items())))
        return self._hash

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda t: _grlex(t[0]), reverse=True)

    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return f"{self.ring}({format_poly(self)!r})"

    def evaluate_zero(self, var: int) -> "Poly":
        """Substitute 0 for one variable (keeps the ring)."""
        return Poly._make(self.ring, {e: c for e, c in self.terms.items() if e[var] == 0})


# -- text grammar ----------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(\d+)|([xy])|(\^)|(\*)|([+-]))")


def parse_poly(text: str, ring: Ring) -> Poly:
    """Parse ``expression := term (('+'|'-') term)*``.

    A term is an optional integer followed by variable powers, optionally
    separated by ``*``.  A leading sign is allowed.
    """
    pos = 0
    text = text.strip()
    tokens = []
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ValueError(f"unexpected character {text[pos]!r} at column {pos + 1}")
        kind = m.lastindex
        tokens.append((kind, m.group(kind), m.start(kind) + 1))
        pos = m.end()
    if not tokens:
        raise ValueError("empty polynomial")
    n = ring.nvars
    out = {}
    i = 0

    def expect_natural():
        nonlocal i
        if i >= len(tokens) or tokens[i][0] != 1:
            col = tokens[i][2] if i < len(tokens) else len(text) + 1
            raise ValueError(f"expected exponent at column {col}")
        val = int(tokens[i][1])
        i += 1
        return val

    sign = 1
    if tokens[0][0] == 5:
        sign = -1 if tokens[0][1] == "-" else 1
        i = 1
    while True:
        coeff = None
        exps = [0] * n
        seen_factor = False
        if i < len(tokens) and tokens[i][0] == 1:
            coeff = int(tokens[i][1])
            i += 1
            seen_factor = True
        while i < len(tokens) and tokens[i][0] in (2, 4):
            if tokens[i][0] == 4:
                if not seen_factor:
                    raise ValueError(f"dangling '*' at column {tokens[i][2]}")
                i += 1
                if i >= len(tokens) or tokens[i][0] != 2:
                    raise ValueError("expected variable after '*'")
            var, col = tokens[i][1], tokens[i][2]
            idx = _VARS.index(var)
            if idx >= n:
                raise ValueError(f"variable {var} at column {col} not in {ring}")
            i += 1
            power = 1
            if i < len(tokens) and tokens[i][0] == 3:
                i += 1
                power = expect_natural()
            exps[idx] += power
            seen_factor = True
        if not seen_factor:
            col = tokens[i][2] if i < len(tokens) else len(text) + 1
            raise ValueError(f"expected term at column {col}")
        c = sign * (1 if coeff is None else coeff)
        out[tuple(exps)] = out.get(tuple(exps), 0) + c
        if i == len(tokens):
            break
        if tokens[i][0] != 5:
            raise ValueError(f"expected '+' or '-' at column {tokens[i][2]}")
        sign = -1 if tokens[i][1] == "-" else 1
        i += 1
    return Poly(ring, out)


def format_poly(f: Poly) -> str:
    if not f.terms:
        return "0"
    parts = []
    for e, c in f.sorted_terms():
        mono = ""
        for name, k in zip(_VARS, e):
            if k == 1:
                mono += name
            elif k > 1:
                mono += f"{name}^{k}"
        if mono:
            body = mono if abs(c) == 1 else f"{abs(c)}{mono}"
        else:
            body = str(abs(c))
        parts.append(("-" if c < 0 else "+", body))
    s = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for sg, body in parts[1:]:
        s += sg + body
    return s


# -- dense univariate helpers over a coefficient domain ----------------------
# A dense polynomial is a list of coefficients, low degree first, trimmed.

class _IntDomain:
    zero = 0
    one = 1

    @staticmethod
    def is_zero(a):
        return a == 0

    @staticmethod
    def add(a, b):
        return a + b

    @staticmethod
    def sub(a, b):
        return a - b

    @staticmethod
    def mul(a, b):
        return a * b

    @staticmethod
    def neg(a):
        return -a

    @staticmethod
    def quo(a, b):
        q, r = divmod(a, b)
        if r:
            raise ExactDivisionError(f"{b} does not divide {a}")
        return q

    @staticmethod
    def gcd(a, b):
        return math.gcd(a, b)

    @staticmethod
    def pow(a, n):
        return a ** n


class _FpPolyDomain:
    """F_p[y] as a coefficient domain; elements are trimmed tuples."""

    def __init__(self, p):
        self.p = p
        self.zero = ()
        self.one = (1,)

    def is_zero(self, a):
        return not a

    def _trim(self, a):
        a = list(a)
        while a and a[-1] == 0:
            a.pop()
        return tuple(a)

    def add(self, a, b):
        n = max(len(a), len(b))
        return self._trim([((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)) % self.p
                           for i in range(n)])

    def neg(self, a):
        return tuple((-c) % self.p for c in a)

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        if not a or not b:
            return ()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] = (out[i + j] + x * y) % self.p
        return self._trim(out)

    def divmod(self, a, b):
        if not b:
            raise ZeroDivisionError
        a = list(a)
        inv = pow(b[-1], -1, self.p)
        q = [0] * max(len(a) - len(b) + 1, 0)
        while len(a) >= len(b) and a:
            shift = len(a) - len(b)
            c = a[-1] * inv % self.p
            q[shift] = c
            for j, y in enumerate(b):
                a[shift + j] = (a[shift + j] - c * y) % self.p
            while a and a[-1] == 0:
                a.pop()
        return self._trim(q), tuple(a)

    def quo(self, a, b):
        q, r = self.divmod(a, b)
        if r:
            raise ExactDivisionError("inexact division in F_p[y]")
        return q

    def monic(self, a):
        if not a:
            return a
        inv = pow(a[-1], -1, self.p)
        return tuple(c * inv % self.p for c in a)

    def gcd(self, a, b):
        while b:
            a, b = b, self.divmod(a, b)[1]
        return self.monic(a)

    def pow(self, a, n):
        out = self.one
        for _ in range(n):
            out = self.mul(out, a)
        return out


def _dup_trim(f, D):
    f = list(f)
    while f and D.is_zero(f[-1]):
        f.pop()
    return f


def _dup_prem(f, g, D):
    """Pseudo-remainder of f by g."""
    df, dg = len(f) - 1, len(g) - 1
    if df < dg:
        return list(f)
    lc = g[-1]
    r = list(f)
    n = df - dg + 1
    while len(r) - 1 >= dg and r:
        shift = len(r) - 1 - dg
        c = r[-1]
        r = [D.mul(lc, a) for a in r]
        for j, b in enumerate(g):
            r[shift + j] = D.sub(r[shift + j], D.mul(c, b))
        r = _dup_trim(r, D)
        n -= 1
    if n > 0:
        m = D.pow(lc, n)
        r = [D.mul(m, a) for a in r]
    return r


def _dup_quo_ground(f, c, D):
    return [D.quo(a, c) for a in f]


def _dup_content(f, D):
    return reduce(D.gcd, f, D.zero)


def _dup_subresultant_prs(f, g, D):
    """Subresultant polynomial remainder sequence (Brown-Collins)."""
    if len(f) < len(g):
        f, g = g, f
    if not g:
        return [f]
    seq = [f, g]
    d = len(f) - len(g)
    b = D.one if (d + 1) % 2 == 0 else D.neg(D.one)
    h = [D.mul(b, a) for a in _dup_prem(f, g, D)]
    lc = g[-1]
    c = D.pow(lc, d)
    c = D.neg(c)
    while h:
        k = len(h) - 1
        seq.append(h)
        m = len(g) - 1
        f, g, d = g, h, m - k
        b = D.neg(D.mul(lc, D.pow(c, d)))
        h = _dup_quo_ground(_dup_prem(f, g, D), b, D)
        lc = g[-1]
        if d > 1:
            q = D.pow(c, d - 1)
            c = D.quo(D.pow(D.neg(lc), d), q)
        else:
            c = D.neg(lc)
    return seq


def _dup_primitive_gcd(f, g, D):
    """gcd of two primitive dense polynomials via the subresultant PRS."""
    last = _dup_subresultant_prs(f, g, D)[-1]
    cont = _dup_content(last, D)
    return _dup_quo_ground(last, cont, D)


# -- conversions between sparse Poly and dense forms -------------------------

def _zx_to_dense(f: Poly):
    if not f.terms:
        return []
    out = [0] * (f.degree() + 1)
    for (d,), c in f.terms.items():
        out[d] = c
    return out


def _dense_to_zx(ring, dense):
    return Poly._make(ring, {(d,): c for d, c in enumerate(dense) if c})


def _xy_to_dense(f: Poly, D: _FpPolyDomain):
    """F_p[x,y] -> dense in x with F_p[y] coefficients."""
    if not f.terms:
        return []
    cols = {}
    for (a, b), c in f.terms.items():
        cols.setdefault(a, {})[b] = c
    out = []
    for a in range(max(cols) + 1):
        col = cols.get(a, {})
        out.append(D._trim([col.get(b, 0) for b in range(max(col) + 1)]) if col else ())
    return out


def _dense_to_xy(ring, dense):
    out = {}
    for a, col in enumerate(dense):
        for b, c in enumerate(col):
            if c:
                out[(a, b)] = c
    return Poly._make(ring, out)


# -- gcd, canonical associates ------------------------------------------------

def canonical(f: Poly) -> Poly:
    """Canonical associate of f."""
    if not f.terms:
        return f
    r = f.ring
    lc = f.leading_coeff()
    if r.p is None:
        return -f if lc < 0 else f
    if lc == 1:
        return f
    return f * r(pow(lc, -1, r.p))


def unit_part(f: Poly) -> Poly:
    """The unit u with f = u * canonical(f)."""
    if not f.terms:
        return f.ring.one
    lc = f.leading_coeff()
    if f.ring.p is None:
        return f.ring(-1 if lc < 0 else 1)
    return f.ring(lc)


def _check_same(elements):
    rings = {e.ring for e in elements}
    if len(rings) > 1:
        raise RingMismatchError(f"mixed rings: {sorted(map(str, rings))}")
    return rings.pop()


def _gcd2(a: Poly, b: Poly) -> Poly:
    R = a.ring
    if not a.terms:
        return canonical(b)
    if not b.terms:
        return canonical(a)
    if R.kind == "Z":
        return R(math.gcd(a.int_value(), b.int_value()))
    if a.is_term() and b.is_term():
        (ea, ca), = a.terms.items()
        (eb, cb), = b.terms.items()
        c = math.gcd(ca, cb) if R.p is None else 1
        return Poly._make(R, {tuple(map(min, ea, eb)): c})
    if R.kind == "Fp_x":
        D = _FpPolyDomain(R.p)
        g = D.gcd(_fpx_to_tuple(a), _fpx_to_tuple(b))
        return _tuple_to_fpx(R, g)
    if R.kind == "Zx":
        fa, fb = _zx_to_dense(a), _zx_to_dense(b)
        ca, cb = _dup_content(fa, _IntDomain), _dup_content(fb, _IntDomain)
        pa = _dup_quo_ground(fa, ca, _IntDomain)
        pb = _dup_quo_ground(fb, cb, _IntDomain)
        g = _dup_primitive_gcd(pa, pb, _IntDomain)
        return canonical(_dense_to_zx(R, g) * R(math.gcd(ca, cb)))
    # F_p[x,y]: recursive over F_p[y]
    D = _FpPolyDomain(R.p)
    fa, fb = _xy_to_dense(a, D), _xy_to_dense(b, D)
    ca, cb = _dup_content(fa, D), _dup_content(fb, D)
    pa = _dup_quo_ground(fa, ca, D)
    pb = _dup_quo_ground(fb, cb, D)
    g = _dup_primitive_gcd(pa, pb, D)
    cont = D.gcd(ca, cb)
    return canonical(_dense_to_xy(R, [D.mul(cont, c) for c in g]))


def _fpx_to_tuple(f: Poly):
    if not f.terms:
        return ()
    out = [0] * (f.degree() + 1)
    for (d,), c in f.terms.items():
        out[d] = c
    return tuple(out)


def _tuple_to_fpx(ring, t):
    return Poly._make(ring, {(d,): c for d, c in enumerate(t) if c})


def gcd_many(elements) -> Poly:
    """Canonical greatest common divisor of a list (gcd of all zeros is 0)."""
    elements = list(elements)
    if not elements:
        raise ValueError("gcd of an empty list")
    R = _check_same(elements)
    g = R.zero
    for e in elements:
        g = _gcd2(g, e)
        if g.is_unit():
            return R.one
    return canonical(g)


def lcm(a: Poly, b: Poly) -> Poly:
    if not a.terms or not b.terms:
        return a.ring.zero
    return canonical(divide_exact(a * b, gcd_many([a, b])))


def gcdex(a: Poly, b: Poly):
    """Extended Euclid in a PID: returns (s, t, g) with s*a + t*b = g canonical."""
    R = _check_same([a, b])
    if R.kind == "Z":
        x, y = a.int_value(), b.int_value()
        s0, s1, t0, t1 = 1, 0, 0, 1
        while y:
            q = x // y
            x, y = y, x - q * y
            s0, s1 = s1, s0 - q * s1
            t0, t1 = t1, t0 - q * t1
        if x < 0:
            x, s0, t0 = -x, -s0, -t0
        return R(s0), R(t0), R(x)
    if R.kind == "Fp_x":
        D = _FpPolyDomain(R.p)
        x, y = _fpx_to_tuple(a), _fpx_to_tuple(b)
        s0, s1, t0, t1 = D.one, D.zero, D.zero, D.one
        while y:
            q, r = D.divmod(x, y)
            x, y = y, r
            s0, s1 = s1, D.sub(s0, D.mul(q, s1))
            t0, t1 = t1, D.sub(t0, D.mul(q, t1))
        if x:
            inv = (pow(x[-1], -1, R.p),)
            x, s0, t0 = D.mul(x, inv), D.mul(s0, inv), D.mul(t0, inv)
        return _tuple_to_fpx(R, s0), _tuple_to_fpx(R, t0), _tuple_to_fpx(R, x)
    raise ValueError(f"{R} is not a Euclidean domain here")


def fpx_divmod(a: Poly, b: Poly):
    D = _FpPolyDomain(a.ring.p)
    q, r = D.divmod(_fpx_to_tuple(a), _fpx_to_tuple(b))
    return _tuple_to_fpx(a.ring, q), _tuple_to_fpx(a.ring, r)


# -- exact division -------------------------------------------------------------

def _try_divide(a: Poly, b: Poly):
    """Exact quotient a/b or None. Greedy leading-term division (valid in a domain)."""
    if not b.terms:
        raise ZeroDivisionError("division by zero")
    R = a.ring
    if R.kind == "Z":
        q, r = divmod(a.int_value(), b.int_value())
        return None if r else R(q)
    if b.is_term():
        (eb, cb), = b.terms.items()
        out = {}
        for e, c in a.terms.items():
            if any(x < y for x, y in zip(e, eb)):
                return None
            if R.p is None:
                q, r = divmod(c, cb)
                if r:
                    return None
            else:
                q = c * pow(cb, -1, R.p) % R.p
            out[tuple(x - y for x, y in zip(e, eb))] = q
        return Poly._make(R, out)
    eb = b.leading_exp()
    cb = b.terms[eb]
    inv = pow(cb, -1, R.p) if R.p is not None else None
    rem = a
    quo = {}
    while rem.terms:
        ea = rem.leading_exp()
        ca = rem.terms[ea]
        if any(x < y for x, y in zip(ea, eb)):
            return None
        if inv is None:
            q, r = divmod(ca, cb)
            if r:
                return None
        else:
            q = ca * inv % R.p
        shift = tuple(x - y for x, y in zip(ea, eb))
        quo[shift] = q
        rem = rem - b.shift(shift).scale(q)
    return Poly(R, quo)


def divides(b: Poly, a: Poly) -> bool:
    """True iff b | a."""
    if not b.terms:
        return not a.terms
    return _try_divide(a, b) is not None


def divide_exact(a: Poly, b: Poly) -> Poly:
    _check_same([a, b])
    if not b.terms:
        raise ExactDivisionError("division by zero")
    q = _try_divide(a, b)
    if q is None:
        raise ExactDivisionError(f"{b} does not divide {a} in {a.ring}")
    return q


# -- factorization ------------------------------------------------------------------

@dataclass(frozen=True)
class PrimeFactorization:
    unit: Poly
    factors: tuple  # of (prime, exponent)

    def expand(self) -> Poly:
        out = self.unit
        for p, m in self.factors:
            out = out * p ** m
        return out

    def exponent(self, prime: Poly) -> int:
        for p, m in self.factors:
            if p == prime:
                return m
        return 0


def _factor_int(n: int, bound: int = TRIAL_DIVISION_BOUND):
    n = abs(n)
    out = {}
    d = 2
    while d * d <= n and d <= bound:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        if d * d > n:
            out[n] = out.get(n, 0) + 1
        else:
            from sympy import factorint
            for q, m in factorint(n).items():
                out[q] = out.get(q, 0) + m
    return sorted(out.items())


def _factor_fpx(f: Poly, max_candidates=200_000):
    R = f.ring
    p = R.p
    deg = f.degree()
    if deg > 8:
        raise UnsupportedFactorizationError(f"degree {deg} > 8 over F_{p}")
    if p ** (deg // 2) > max_candidates:
        raise UnsupportedFactorizationError(f"search space too large for {f}")
    D = _FpPolyDomain(p)
    rest = D.monic(_fpx_to_tuple(f))
    out = []
    for d in range(1, deg // 2 + 1):
        if len(rest) - 1 < 2 * d:
            break
        for tail in product(range(p), repeat=d):
            cand = tuple(tail) + (1,)
            m = 0
            while len(rest) - 1 >= d:
                q, r = D.divmod(rest, cand)
                if r:
                    break
                rest, m = q, m + 1
            if m:
                out.append((_tuple_to_fpx(R, cand), m))
    if len(rest) > 1:
        out.append((_tuple_to_fpx(R, rest), 1))
    return out


def factor(e: Poly) -> PrimeFactorization:
    """Factor a nonzero element within the supported class."""
    if not e.terms:
        raise ValueError("cannot factor zero")
    R = e.ring
    if R.kind == "Z":
        v = e.int_value()
        return PrimeFactorization(R(1 if v > 0 else -1),
                                  tuple((R(q), m) for q, m in _factor_int(v)))
    if e.is_term():
        (exps, c), = e.terms.items()
        if R.p is None:
            unit = R(1 if c > 0 else -1)
            fs = [(R(q), m) for q, m in _factor_int(c)]
        else:
            unit = R(c)
            fs = []
        for i, k in enumerate(exps):
            if k:
                fs.append((R.gen(_VARS[i]), k))
        return PrimeFactorization(unit, tuple(fs))
    if R.kind == "Fp_x":
        fs = _factor_fpx(e)
        return PrimeFactorization(R(e.leading_coeff()), tuple(fs))
    raise UnsupportedFactorizationError(f"cannot factor non-term {e} in {R}")


def multiplicity(p: Poly, e: Poly) -> int:
    """Largest n with p^n | e, by repeated exact division."""
    if not e.terms:
        raise ValueError("multiplicity in zero is unbounded")
    if p.is_unit() or not p.terms:
        raise ValueError(f"{p} is not a prime")
    if p.is_constant() and p.ring.p is None and not is_prime_int(abs(p.constant_coeff())):
        raise ValueError(f"{p} is not a prime")
    n = 0
    while True:
        q = _try_divide(e, p)
        if q is None:
            return n
        e, n = q, n + 1

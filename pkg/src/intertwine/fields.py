"""Exact arithmetic in finite fields GF(p^e).

Field elements are plain integers in [0, q): the element with coefficient
vector (c_0, ..., c_{e-1}) over GF(p), ascending powers of the generator, is
encoded as c_0 + c_1*p + ... + c_{e-1}*p^(e-1).  Encodings 0 and 1 are the
additive and multiplicative identities, 0..p-1 is the prime subfield, and
enumerating by encoding gives the canonical element order used wherever a
construction has to pick "the first" scalars deterministically.
"""

from __future__ import annotations

from .errors import BadModulusError, DivisionByZeroError, NotPrimeError

# Extension fields up to this order get dense q x q lookup tables.
_TABLE_LIMIT = 256
# Supported sizes: p < 2^31 and q <= 2^31.
_ORDER_LIMIT = 1 << 31


def is_prime(n: int) -> bool:
    """Trial-division primality test, adequate for the supported range."""
    if n < 2:
        return False
    for d in (2, 3):
        if n % d == 0:
            return n == d
    d = 5
    while d * d <= n:
        if n % d == 0 or n % (d + 2) == 0:
            return False
        d += 6
    return True


def prime_divisors(n: int) -> list[int]:
    """Distinct prime divisors of n, ascending."""
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


# ---------------------------------------------------------------------------
# Polynomial arithmetic over GF(p) on raw coefficient lists.  Just enough to
# select and validate extension moduli; the general machinery lives in polys.

def _pp_trim(c):
    while c and c[-1] == 0:
        c.pop()
    return c


def _pp_mulmod(a, b, f, p):
    if not a or not b:
        return []
    prod = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                if bj:
                    prod[i + j] = (prod[i + j] + ai * bj) % p
    deg_f = len(f) - 1
    for i in range(len(prod) - 1, deg_f - 1, -1):
        c = prod[i]
        if c:
            prod[i] = 0
            off = i - deg_f
            for j in range(deg_f):
                if f[j]:
                    prod[off + j] = (prod[off + j] - c * f[j]) % p
    del prod[deg_f:]
    return _pp_trim(prod)


def _pp_powmod(a, n, f, p):
    result = [1]
    base = _pp_mulmod(a, [1], f, p)
    while n:
        if n & 1:
            result = _pp_mulmod(result, base, f, p)
        n >>= 1
        if n:
            base = _pp_mulmod(base, base, f, p)
    return result


def _pp_sub(a, b, p):
    out = [0] * max(len(a), len(b))
    for i, v in enumerate(a):
        out[i] = v
    for i, v in enumerate(b):
        out[i] = (out[i] - v) % p
    return _pp_trim(out)


def _pp_gcd(a, b, p):
    a, b = _pp_trim(list(a)), _pp_trim(list(b))
    while b:
        inv_lead = pow(b[-1], -1, p)
        deg_b = len(b) - 1
        r = list(a)
        while r and len(r) - 1 >= deg_b:
            c = (r[-1] * inv_lead) % p
            off = len(r) - 1 - deg_b
            for j in range(deg_b + 1):
                r[off + j] = (r[off + j] - c * b[j]) % p
            _pp_trim(r)
        a, b = b, r
    return a


def _pp_is_irreducible(f, p):
    # Rabin's test for monic f of degree m >= 1 over GF(p).
    m = len(f) - 1
    if m == 1:
        return True
    x = [0, 1]
    powers = {}
    h = x
    for i in range(1, m + 1):
        h = _pp_powmod(h, p, f, p)
        powers[i] = h
    if powers[m] != x:
        return False
    for ell in prime_divisors(m):
        g = _pp_gcd(_pp_sub(powers[m // ell], x, p), f, p)
        if len(g) - 1 != 0:
            return False
    return True


def _least_irreducible(p, e):
    # Least monic irreducible of degree e, ordered by the encoding of the
    # non-leading coefficients as ascending base-p digits.
    for c in range(p**e):
        digits = []
        x = c
        for _ in range(e):
            digits.append(x % p)
            x //= p
        f = digits + [1]
        if _pp_is_irreducible(f, p):
            return tuple(f)
    raise BadModulusError(f"no irreducible polynomial of degree {e} over GF({p})")


class FiniteField:
    """The finite field GF(p^e) operating on integer-encoded elements.

    Parameters
    ----------
    p : int
        Prime characteristic.
    e : int
        Extension degree; 1 gives the prime field.
    modulus : sequence of int, optional
        Ascending coefficients (length e+1, canonical in [0, p), monic) of an
        irreducible degree-e polynomial over GF(p).  Ignored when e == 1 and
        chosen automatically (least by encoding) when omitted.

    The arithmetic callables ``add``, ``sub``, ``neg``, ``mul``, ``inv`` and
    ``div`` are bound per instance; for small extension fields they read
    precomputed tables, exposed as ``add_table``/``mul_table`` for hot loops.
    Element encodings are not range-checked by the arithmetic itself; the
    containers (polynomials, matrices) validate at construction time.
    """

    __slots__ = ("p", "e", "q", "modulus", "add", "sub", "neg", "mul", "inv",
                 "div", "add_table", "mul_table")

    def __init__(self, p, e=1, modulus=None):
        if not isinstance(p, int) or not is_prime(p):
            raise NotPrimeError(p)
        if not isinstance(e, int) or e < 1:
            raise ValueError(f"extension degree must be a positive integer, got {e!r}")
        if p >= _ORDER_LIMIT:
            raise ValueError(f"characteristic {p} exceeds the supported bound 2^31")
        q = p**e
        if q > _ORDER_LIMIT:
            raise ValueError(f"field order {q} exceeds the supported bound 2^31")
        self.p = p
        self.e = e
        self.q = q
        if e == 1:
            self.modulus = None  # prime field: any supplied modulus is ignored
        elif modulus is None:
            self.modulus = _least_irreducible(p, e)
        else:
            mod = tuple(modulus)
            if len(mod) != e + 1:
                raise BadModulusError(
                    f"modulus must have degree {e}: expected {e + 1} coefficients, got {len(mod)}"
                )
            if any(not isinstance(c, int) or not 0 <= c < p for c in mod):
                raise BadModulusError(f"modulus coefficients must be integers in [0, {p})")
            if mod[-1] != 1:
                raise BadModulusError("modulus must be monic")
            if not _pp_is_irreducible(list(mod), p):
                raise BadModulusError(f"modulus {list(mod)} is reducible over GF({p})")
            self.modulus = mod
        self._install_ops()

    # -- arithmetic -------------------------------------------------------

    def _install_ops(self):
        p, e, q = self.p, self.e, self.q
        self.add_table = None
        self.mul_table = None

        if e == 1:
            def add(a, b):
                return (a + b) % p

            def sub(a, b):
                return (a - b) % p

            def neg(a):
                return (-a) % p

            def mul(a, b):
                return (a * b) % p

            def inv(a):
                if a % p == 0:
                    raise DivisionByZeroError("inverse of zero")
                return pow(a, -1, p)

            def div(a, b):
                return mul(a, inv(b))

            self.add, self.sub, self.neg = add, sub, neg
            self.mul, self.inv, self.div = mul, inv, div
            return

        if p == 2:
            mod_mask = 0
            for i, c in enumerate(self.modulus):
                if c:
                    mod_mask |= 1 << i
            top = 1 << e

            def add(a, b):
                return a ^ b

            sub = add

            def neg(a):
                return a

            def mul(a, b, _mod=mod_mask, _top=top):
                r = 0
                while b:
                    if b & 1:
                        r ^= a
                    b >>= 1
                    a <<= 1
                    if a & _top:
                        a ^= _mod
                return r
        else:
            mod = self.modulus

            def _digits(x, _p=p, _e=e):
                out = []
                for _ in range(_e):
                    out.append(x % _p)
                    x //= _p
                return out

            def _enc(ds, _p=p):
                v = 0
                for d in reversed(ds):
                    v = v * _p + d
                return v

            def add(a, b):
                return _enc([(x + y) % p for x, y in zip(_digits(a), _digits(b))])

            def sub(a, b):
                return _enc([(x - y) % p for x, y in zip(_digits(a), _digits(b))])

            def neg(a):
                return _enc([(-x) % p for x in _digits(a)])

            def mul(a, b, _e=e):
                if a == 0 or b == 0:
                    return 0
                da, db = _digits(a), _digits(b)
                prod = [0] * (2 * _e - 1)
                for i, x in enumerate(da):
                    if x:
                        for j, y in enumerate(db):
                            if y:
                                prod[i + j] = (prod[i + j] + x * y) % p
                for i in range(2 * _e - 2, _e - 1, -1):
                    c = prod[i]
                    if c:
                        prod[i] = 0
                        off = i - _e
                        for j in range(_e):
                            if mod[j]:
                                prod[off + j] = (prod[off + j] - c * mod[j]) % p
                return _enc(prod[:_e])

        def inv(a):
            if a == 0:
                raise DivisionByZeroError("inverse of zero")
            return self.pow(a, q - 2)

        def div(a, b):
            return mul(a, inv(b))

        self.add, self.sub, self.neg = add, sub, neg
        self.mul, self.inv, self.div = mul, inv, div

        if q <= _TABLE_LIMIT:
            add_t = [[add(a, b) for b in range(q)] for a in range(q)]
            mul_t = [[mul(a, b) for b in range(q)] for a in range(q)]
            neg_t = [neg(a) for a in range(q)]
            inv_t = [0] + [inv(a) for a in range(1, q)]

            def addt(a, b):
                return add_t[a][b]

            def subt(a, b):
                return add_t[a][neg_t[b]]

            def negt(a):
                return neg_t[a]

            def mult(a, b):
                return mul_t[a][b]

            def invt(a):
                if a == 0:
                    raise DivisionByZeroError("inverse of zero")
                return inv_t[a]

            def divt(a, b):
                return mul_t[a][invt(b)]

            self.add, self.sub, self.neg = addt, subt, negt
            self.mul, self.inv, self.div = mult, invt, divt
            self.add_table = add_t
            self.mul_table = mul_t

    def pow(self, a, n):
        """a raised to an integer power; negative exponents invert first."""
        if n < 0:
            a = self.inv(a)
            n = -n
        result = 1
        mul = self.mul
        while n:
            if n & 1:
                result = mul(result, a)
            a = mul(a, a)
            n >>= 1
        return result

    # -- encoding ---------------------------------------------------------

    def coeffs(self, x):
        """Ascending coefficient vector of an encoded element."""
        if not isinstance(x, int) or not 0 <= x < self.q:
            raise ValueError(f"{x!r} is not an element encoding of {self}")
        out = []
        for _ in range(self.e):
            out.append(x % self.p)
            x //= self.p
        return tuple(out)

    def from_coeffs(self, cs):
        """Encode a coefficient vector (length e, entries in [0, p))."""
        cs = tuple(cs)
        if len(cs) != self.e:
            raise ValueError(f"expected {self.e} coefficients, got {len(cs)}")
        if any(not isinstance(c, int) or not 0 <= c < self.p for c in cs):
            raise ValueError(f"coefficients must be integers in [0, {self.p})")
        v = 0
        for c in reversed(cs):
            v = v * self.p + c
        return v

    def from_int(self, n):
        """Image of an integer under Z -> GF(q); lands in the prime subfield."""
        return n % self.p

    def pth_root(self, x):
        """The unique p-th root of x (inverse of the Frobenius map)."""
        return self.pow(x, self.q // self.p)

    def elements(self):
        """All q elements, ascending by canonical encoding (0 first, then 1)."""
        return range(self.q)

    def check_element(self, x):
        """Validate that x is an element encoding; returns x."""
        if not isinstance(x, int) or not 0 <= x < self.q:
            raise ValueError(f"{x!r} is not an element encoding of {self}")
        return x

    # -- identity ---------------------------------------------------------

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, FiniteField):
            return NotImplemented
        return (self.p, self.e, self.modulus) == (other.p, other.e, other.modulus)

    def __hash__(self):
        return hash((self.p, self.e, self.modulus))

    def __repr__(self):
        if self.e == 1:
            return f"FiniteField({self.p})"
        return f"FiniteField({self.p}, {self.e})"

    def __str__(self):
        return f"GF({self.q})"

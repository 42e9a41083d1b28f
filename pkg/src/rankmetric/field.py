"""Finite-field contexts for F_q (q = p^e) and its degree-n extension F_{q^n}.

Field elements are plain Python ints.  An element of F_{q^n} is packed as an
integer in [0, q^n) whose base-q digits, least significant first, are the
coefficients of its residue polynomial modulo the defining polynomial of the
extension.  Elements of the base field F_q use the same packing one level
down (base-p digits), so for prime q they are ordinary residues mod p.  The
copy of F_q inside F_{q^n} is exactly the ints below q, which means base
field scalars can be fed to extension arithmetic unchanged.

Defining polynomials are picked deterministically: the lexicographically
smallest monic irreducible of the required degree, comparing coefficient
tuples constant term first.  A caller-supplied modulus is verified instead.

For q^n up to 2^20 the context builds exp/log tables over a fixed
multiplicative generator, so multiplication, inversion and Frobenius powers
become table lookups.  Larger fields fall back to polynomial arithmetic.
"""

from __future__ import annotations

from typing import Iterable, Sequence

TABLE_LIMIT = 1 << 20


def _is_prime(m: int) -> bool:
    if m < 2:
        return False
    if m % 2 == 0:
        return m == 2
    f = 3
    while f * f <= m:
        if m % f == 0:
            return False
        f += 2
    return True


def _prime_power(q: int) -> tuple[int, int]:
    """Split q into (p, e) with p prime and q = p^e, or raise ValueError."""
    if q < 2:
        raise ValueError(f"q={q} is not a prime power")
    p = 2
    while p * p <= q and q % p != 0:
        p += 1
    if q % p != 0:
        p = q  # q itself is prime
    e = 0
    m = q
    while m % p == 0:
        m //= p
        e += 1
    if m != 1:
        raise ValueError(f"q={q} is not a prime power")
    return p, e


def _factor(m: int) -> list[int]:
    """Distinct prime factors of m, ascending."""
    out = []
    f = 2
    while f * f <= m:
        if m % f == 0:
            out.append(f)
            while m % f == 0:
                m //= f
        f += 1 if f == 2 else 2
    if m > 1:
        out.append(m)
    return out


class _ScalarOps:
    """Arithmetic for a coefficient field, used by the polynomial helpers."""

    __slots__ = ("q", "add", "sub", "mul", "inv", "neg")

    def __init__(self, q, add, sub, mul, inv, neg):
        self.q = q
        self.add = add
        self.sub = sub
        self.mul = mul
        self.inv = inv
        self.neg = neg


def _prime_ops(p: int) -> _ScalarOps:
    if p == 2:
        return _ScalarOps(2, lambda a, b: a ^ b, lambda a, b: a ^ b,
                          lambda a, b: a & b, lambda a: 1, lambda a: a)
    return _ScalarOps(
        p,
        lambda a, b: (a + b) % p,
        lambda a, b: (a - b) % p,
        lambda a, b: (a * b) % p,
        lambda a: pow(a, p - 2, p),
        lambda a: (-a) % p,
    )


# ---------------------------------------------------------------------------
# Polynomials over a scalar field: tuples of coefficients, constant term
# first, no trailing zeros (the zero polynomial is the empty tuple).
# ---------------------------------------------------------------------------

def _ptrim(f: Sequence[int]) -> tuple[int, ...]:
    d = len(f)
    while d > 0 and f[d - 1] == 0:
        d -= 1
    return tuple(f[:d])


def _psub(fo: _ScalarOps, f, g):
    m = max(len(f), len(g))
    out = []
    for i in range(m):
        a = f[i] if i < len(f) else 0
        b = g[i] if i < len(g) else 0
        out.append(fo.sub(a, b))
    return _ptrim(out)


def _pmul(fo: _ScalarOps, f, g):
    if not f or not g:
        return ()
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a == 0:
            continue
        for j, b in enumerate(g):
            if b:
                out[i + j] = fo.add(out[i + j], fo.mul(a, b))
    return _ptrim(out)


def _pmod(fo: _ScalarOps, f, g):
    """Remainder of f divided by g (g nonzero)."""
    f = list(f)
    dg = len(g) - 1
    lead_inv = fo.inv(g[-1])
    while len(f) - 1 >= dg and any(f):
        df = len(f) - 1
        if f[df] == 0:
            f.pop()
            continue
        c = fo.mul(f[df], lead_inv)
        shift = df - dg
        for i, gc in enumerate(g):
            if gc:
                f[shift + i] = fo.sub(f[shift + i], fo.mul(c, gc))
        f.pop()
    return _ptrim(f)


def _pgcd(fo: _ScalarOps, f, g):
    while g:
        f, g = g, _pmod(fo, f, g)
    if f:
        c = fo.inv(f[-1])
        f = tuple(fo.mul(c, a) for a in f)
    return f


def _ppowmod(fo: _ScalarOps, base, exponent: int, mod):
    result = (1,)
    base = _pmod(fo, base, mod)
    while exponent:
        if exponent & 1:
            result = _pmod(fo, _pmul(fo, result, base), mod)
        base = _pmod(fo, _pmul(fo, base, base), mod)
        exponent >>= 1
    return result


def _is_irreducible(fo: _ScalarOps, f) -> bool:
    """Test irreducibility of monic f over F_q via x^{q^i} iterates."""
    d = len(f) - 1
    if d < 1:
        return False
    x = (0, 1)
    q = fo.q
    # frobenius iterates r_i = x^{q^i} mod f
    r = x
    iterates = {}
    for i in range(1, d + 1):
        r = _ppowmod(fo, r, q, f)
        iterates[i] = r
    if _psub(fo, iterates[d], x):
        return False
    for dd in _factor(d):
        g = _pgcd(fo, _psub(fo, iterates[d // dd], x), f)
        if len(g) - 1 > 0:
            return False
    return True


def _smallest_irreducible(fo: _ScalarOps, d: int) -> tuple[int, ...]:
    """Lexicographically smallest monic irreducible of degree d over F_q.

    Coefficient tuples are compared constant term first.  For d >= 2 a zero
    constant term forces the root 0, so the scan starts at c0 = 1.
    """
    import itertools

    q = fo.q
    if d == 1:
        return (0, 1)
    start = 1
    for c0 in range(start, q):
        for rest in itertools.product(range(q), repeat=d - 1):
            f = (c0,) + rest + (1,)
            if _is_irreducible(fo, f):
                return f
    raise ValueError(f"no irreducible polynomial of degree {d} found")  # pragma: no cover


class FieldCtx:
    """Immutable description of F_q and F_{q^n} with packed-int arithmetic.

    Attributes:
        p, e, q: base field characteristic, extension exponent, order (q = p^e)
        n: extension degree
        order: q^n
        modulus: defining polynomial of F_{q^n} over F_q, constant term first,
            length n+1, monic
    """

    def __init__(self, q: int, n: int, modulus=None):
        p, e = _prime_power(q)
        if n < 1:
            raise ValueError(f"extension degree n={n} must be >= 1")
        self.p = p
        self.e = e
        self.q = q
        self.n = n
        self.order = q ** n

        self._init_base()
        fo = self._fq_ops

        if modulus is None:
            modulus = _smallest_irreducible(fo, n)
        else:
            modulus = tuple(int(c) for c in modulus)
            if len(modulus) != n + 1 or modulus[-1] != 1:
                raise ValueError(
                    f"modulus must be monic of degree {n}, got {modulus}")
            if any(not 0 <= c < q for c in modulus):
                raise ValueError("modulus coefficients out of range")
            if not _is_irreducible(fo, modulus):
                raise ValueError(f"modulus {modulus} is reducible over F_{q}")
        self.modulus = modulus

        self._init_extension()

    # -- base field -------------------------------------------------------

    def _init_base(self):
        p, e, q = self.p, self.e, self.q
        pops = _prime_ops(p)
        if e == 1:
            self.base_modulus = None
            self._fq_ops = pops
        else:
            base_mod = _smallest_irreducible(pops, e)
            self.base_modulus = base_mod
            exp, log = self._build_tables(
                q, lambda a, b: self._mul_digits(pops, base_mod, p, e, a, b))
            L = q - 1
            if p == 2:
                badd = lambda a, b: a ^ b
                bsub = badd
                bneg = lambda a: a
            else:
                badd = lambda a, b: self._add_digits(p, e, a, b, 1)
                bsub = lambda a, b: self._add_digits(p, e, a, b, -1)
                bneg = lambda a: self._add_digits(p, e, 0, a, -1)

            def bmul(a, b, _exp=exp, _log=log):
                if a == 0 or b == 0:
                    return 0
                return _exp[_log[a] + _log[b]]

            def binv(a, _exp=exp, _log=log, _L=L):
                if a == 0:
                    raise ZeroDivisionError("inverse of zero in F_q")
                return _exp[_L - _log[a]]

            self._fq_ops = _ScalarOps(q, badd, bsub, bmul, binv, bneg)
        fo = self._fq_ops
        self.base_add = fo.add
        self.base_sub = fo.sub
        self.base_mul = fo.mul
        self.base_neg = fo.neg

        def base_inv(a, _inv=fo.inv):
            if a == 0:
                raise ZeroDivisionError("inverse of zero in F_q")
            return _inv(a)

        self.base_inv = base_inv

    @staticmethod
    def _add_digits(p: int, ndigits: int, a: int, b: int, sign: int) -> int:
        out = 0
        mult = 1
        for _ in range(ndigits):
            d = (a % p + sign * (b % p)) % p
            out += d * mult
            mult *= p
            a //= p
            b //= p
        return out

    @staticmethod
    def _mul_digits(fo: _ScalarOps, mod, base: int, ndigits: int,
                    a: int, b: int) -> int:
        da = []
        while a:
            da.append(a % base)
            a //= base
        db = []
        while b:
            db.append(b % base)
            b //= base
        prod = _pmod(fo, _pmul(fo, tuple(da), tuple(db)), mod)
        out = 0
        for c in reversed(prod):
            out = out * base + c
        return out

    @staticmethod
    def _build_tables(order: int, mul_raw):
        """exp/log tables over a deterministic generator (smallest packed int)."""
        L = order - 1
        prime_parts = _factor(L)

        def raw_pow(g, m):
            r = 1
            while m:
                if m & 1:
                    r = mul_raw(r, g)
                g = mul_raw(g, g)
                m >>= 1
            return r

        gen = None
        for g in range(2, order):
            if all(raw_pow(g, L // r) != 1 for r in prime_parts):
                gen = g
                break
        if gen is None:  # pragma: no cover - L = 1 edge (order 2)
            gen = 1
        exp = [0] * (2 * L)
        log = [-1] * order
        v = 1
        for i in range(L):
            exp[i] = v
            exp[i + L] = v
            log[v] = i
            v = mul_raw(v, gen)
        return exp, log

    # -- extension field ---------------------------------------------------

    def _mul_raw(self, a: int, b: int) -> int:
        if self.p == 2 and self.e == 1:
            n = self.n
            modbits = self._modulus_bits
            r = 0
            while b:
                if b & 1:
                    r ^= a
                b >>= 1
                a <<= 1
                if (a >> n) & 1:
                    a ^= modbits
            return r
        return self._mul_digits(self._fq_ops, self.modulus, self.q, self.n, a, b)

    def _init_extension(self):
        q, n, order = self.q, self.n, self.order
        p = self.p
        if p == 2 and self.e == 1:
            bits = 0
            for i, c in enumerate(self.modulus):
                if c:
                    bits |= 1 << i
            self._modulus_bits = bits

        if p == 2:
            self.add = lambda a, b: a ^ b
            self.sub = self.add
            self.neg = lambda a: a
        else:
            e_total = self.e * n
            self.add = lambda a, b: self._add_digits(p, e_total, a, b, 1)
            self.sub = lambda a, b: self._add_digits(p, e_total, a, b, -1)
            self.neg = lambda a: self._add_digits(p, e_total, 0, a, -1)

        L = order - 1
        self._mult_order = L
        self._qpow = [pow(q, i, L) if L > 1 else 0 for i in range(n)]

        if order <= TABLE_LIMIT:
            exp, log = self._build_tables(order, self._mul_raw)
            self._exp, self._log = exp, log
            qpow = self._qpow

            def mul(a, b, _exp=exp, _log=log):
                if a == 0 or b == 0:
                    return 0
                return _exp[_log[a] + _log[b]]

            def inv(a, _exp=exp, _log=log, _L=L):
                if a == 0:
                    raise ZeroDivisionError("inverse of zero")
                return _exp[_L - _log[a]]

            def frob(x, i, _exp=exp, _log=log, _L=L, _qpow=qpow, _n=n):
                if x == 0:
                    return 0
                return _exp[_log[x] * _qpow[i % _n] % _L]

            def power(a, m, _exp=exp, _log=log, _L=L):
                if a == 0:
                    if m == 0:
                        return 1
                    if m < 0:
                        raise ZeroDivisionError("inverse of zero")
                    return 0
                return _exp[_log[a] * (m % _L) % _L]

            self.mul, self.inv, self.frob, self.power = mul, inv, frob, power
        else:
            self._exp = self._log = None
            self.mul = self._mul_raw
            self.inv = self._inv_generic
            self.frob = self._frob_generic
            self.power = self._power_generic

        add = self.add
        frob = self.frob

        def trace(x, _n=n, _add=add, _frob=frob):
            acc = x
            for i in range(1, _n):
                acc = _add(acc, _frob(x, i))
            return acc

        self.trace = trace

    def _power_generic(self, a: int, m: int) -> int:
        if a == 0:
            if m == 0:
                return 1
            if m < 0:
                raise ZeroDivisionError("inverse of zero")
            return 0
        m %= self._mult_order
        r = 1
        while m:
            if m & 1:
                r = self._mul_raw(r, a)
            a = self._mul_raw(a, a)
            m >>= 1
        return r

    def _inv_generic(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return self._power_generic(a, self._mult_order - 1)

    def _frob_generic(self, x: int, i: int) -> int:
        return self._power_generic(x, self.q ** (i % self.n)) if x else 0

    # -- conversions and formatting ----------------------------------------

    def coeffs(self, x: int) -> tuple[int, ...]:
        """Base-q coefficient tuple of x, constant term first, length n."""
        q = self.q
        out = []
        for _ in range(self.n):
            out.append(x % q)
            x //= q
        return tuple(out)

    def from_coeffs(self, cs: Iterable[int]) -> int:
        cs = list(cs)
        if len(cs) != self.n:
            raise ValueError(f"expected {self.n} coefficients, got {len(cs)}")
        x = 0
        for c in reversed(cs):
            if not 0 <= c < self.q:
                raise ValueError(f"coefficient {c} out of range for F_{self.q}")
            x = x * self.q + c
        return x

    def elem_str(self, x: int) -> str:
        return ":".join(str(c) for c in self.coeffs(x))

    def parse_elem(self, s: str) -> int:
        return self.from_coeffs(int(part) for part in s.strip().split(":"))

    def modulus_str(self) -> str:
        return ":".join(str(c) for c in self.modulus)

    def rand_elem(self, rng) -> int:
        return rng.randrange(self.order)

    def __repr__(self):
        return f"FieldCtx(q={self.q}, n={self.n}, modulus={self.modulus})"


def make_field(q: int, n: int, modulus=None) -> FieldCtx:
    """Build a field context for F_{q^n} over F_q.

    When modulus is omitted the deterministic default (lexicographically
    smallest monic irreducible, constant term first) is selected, so two
    calls with the same (q, n) produce identical contexts.
    """
    if isinstance(modulus, str):
        modulus = [int(c) for c in modulus.split(":")]
    return FieldCtx(q, n, modulus)

"""Exact integer and finite-field arithmetic.

Primes and factorization (trial division plus Pollard-Brent rho for word-sized
inputs), GF(p^n) with a deterministic modulus choice, Frobenius maps, discrete
logs via baby-step/giant-step, primitive prime divisors, and the admissible
minimal-order search over (p, n, d) triples.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import gcd, isqrt
from typing import Iterator, Optional

import gmpy2

# Fields larger than this have no dlog support (table sizes blow up).
DLOG_FIELD_CAP = 2**20

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Miller-Rabin primality test.

    Deterministic for n < 3.3e24 with the fixed witness set; above that the
    same witnesses give a heuristic test with negligible error.
    """
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n % p == 0:
            return n == p
    if n >> 81:
        # beyond the deterministic witness range; gmpy2 runs BPSW + extra
        # Miller-Rabin rounds at C speed
        return bool(gmpy2.is_prime(n, 30))
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _SMALL_PRIMES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def next_prime(n: int) -> int:
    """Smallest prime strictly greater than n."""
    k = n + 1
    if k <= 2:
        return 2
    if k % 2 == 0:
        k += 1
    while not is_prime(k):
        k += 2
    return k


def _pollard_brent(n: int, seed: int = 1) -> int:
    """Return a nontrivial factor of composite odd n (Brent's cycle variant)."""
    if n % 2 == 0:
        return 2
    c = seed
    while True:
        x = y = 2
        d = 1
        q = 1
        m = 128
        while d == 1:
            ys = y
            x = y
            for _ in range(m):
                y = (y * y + c) % n
            k = 0
            while k < m and d == 1:
                ys = y
                for _ in range(min(m, 128)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                d = gcd(q, n)
                k += 128
            m *= 2
            if d == n:
                # backtrack
                d = 1
                while d == 1:
                    ys = (ys * ys + c) % n
                    d = gcd(abs(x - ys), n)
                break
        if d != n:
            return d
        c += 1


def _factor_into(n: int, out: dict) -> None:
    if n == 1:
        return
    if is_prime(n):
        out[n] = out.get(n, 0) + 1
        return
    d = _pollard_brent(n)
    _factor_into(d, out)
    _factor_into(n // d, out)


def factorize(n: int) -> list[tuple[int, int]]:
    """Prime factorization of n >= 1 as a sorted list of (prime, exponent).

    Trial division by small primes, then Pollard-Brent rho on the cofactor.
    """
    if n < 1:
        raise ValueError(f"factorize requires n >= 1, got {n}")
    out: dict[int, int] = {}
    for p in (2, 3, 5):
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    f = 7
    # wheel over 7, 11, 13, ... up to 2**16; rho handles the rest
    while f * f <= n and f < 65536:
        while n % f == 0:
            out[f] = out.get(f, 0) + 1
            n //= f
        f += 2
    if n > 1:
        _factor_into(n, out)
    return sorted(out.items())


def prime_divisors(n: int) -> list[int]:
    """Sorted list of primes dividing n (pi(n) in the usual notation)."""
    return [p for p, _ in factorize(n)]


def multiplicative_order(a: int, m: int, m_order_factors=None) -> int:
    """Order of a modulo m (gcd(a, m) must be 1)."""
    if gcd(a, m) != 1:
        raise ValueError("element not invertible")
    # order divides lambda(m); cheap scan over divisors of a known multiple
    if m_order_factors is None:
        # use Carmichael-style multiple: for our uses m is small or prime
        e = 1
        x = a % m
        while x != 1:
            x = x * a % m
            e += 1
        return e
    order = 1
    for p, k in m_order_factors:
        order *= p**k
    for p, k in m_order_factors:
        for _ in range(k):
            if pow(a, order // p, m) == 1:
                order //= p
            else:
                break
    return order


# ---------------------------------------------------------------------------
# Zsigmondy primitive prime divisors
# ---------------------------------------------------------------------------

def _mobius(n: int) -> int:
    mu = 1
    for _, k in factorize(n):
        if k > 1:
            return 0
        mu = -mu
    return mu


def cyclotomic_value(n: int, a: int) -> int:
    """Phi_n(a) for integers n >= 1, a >= 2, via the Mobius product."""
    num = 1
    den = 1
    for d in range(1, n + 1):
        if n % d:
            continue
        mu = _mobius(n // d)
        if mu == 1:
            num *= a**d - 1
        elif mu == -1:
            den *= a**d - 1
    return num // den


_PPD_SCAN_LIMIT = 200000


@lru_cache(maxsize=4)
def _sieve_primes(limit: int) -> tuple:
    bs = bytearray([1]) * limit
    bs[0:2] = b"\x00\x00"
    for i in range(2, isqrt(limit) + 1):
        if bs[i]:
            bs[i * i :: i] = b"\x00" * len(bs[i * i :: i])
    return tuple(i for i in range(limit) if bs[i])


def _small_prime_list() -> tuple:
    return _sieve_primes(_PPD_SCAN_LIMIT)


@lru_cache(maxsize=64)
def _ppd_candidates(n: int) -> tuple:
    """Primes t = 1 (mod n) below the scan limit (ppds for n lie there)."""
    return tuple(t for t in _small_prime_list() if t % n == 1)


def zsigmondy_ppd(a: int, n: int) -> Optional[int]:
    """Smallest primitive prime divisor of a^n - 1, or None.

    A prime t is primitive for (a, n) if t | a^n - 1 but t does not divide
    a^j - 1 for any 1 <= j < n.  None is returned exactly in the classical
    exception cases: (a, n) = (2, 6); n = 2 with a + 1 a power of two; and
    n = 1 with a = 2 (where a - 1 = 1 has no prime divisor at all).
    """
    if a < 2 or n < 1:
        raise ValueError("require a >= 2 and n >= 1")
    if n == 1:
        if a == 2:
            return None
        return min(prime_divisors(a - 1))
    if n == 2:
        s = a + 1
        if s & (s - 1) == 0:
            return None
    if n == 6 and a == 2:
        return None
    # Any ppd t satisfies ord_t(a) = n, hence t = 1 (mod n).  Scan small
    # candidates by testing the order condition directly (word-size powmods).
    nfac = prime_divisors(n)
    for t in _ppd_candidates(n):
        if pow(a, n, t) == 1 and all(pow(a, n // q, t) != 1 for q in nfac):
            return t
    # No small ppd: the ppds are exactly the prime factors of Phi_n(a) with
    # the intrinsic prime (largest prime factor of n) stripped out, and all
    # of them now exceed the scan limit.
    c = cyclotomic_value(n, a)
    s = max(nfac)
    while c % s == 0:
        c //= s
    if c == 1:
        return None  # does not occur outside the exception cases
    return _smallest_prime_factor_large(c)


@lru_cache(maxsize=2)
def _pm1_exponent(b1: int):
    """lcm-style stage-1 exponent: product of p^floor(log_p b1), p <= b1."""
    chunks = []
    acc = gmpy2.mpz(1)
    for p in _sieve_primes(b1 + 1):
        pk = p
        while pk * p <= b1:
            pk *= p
        acc *= pk
        if acc.bit_length() > 1 << 14:
            chunks.append(acc)
            acc = gmpy2.mpz(1)
    chunks.append(acc)
    while len(chunks) > 1:  # balanced product
        chunks = [a * b for a, b in zip(chunks[::2], chunks[1::2])] + (
            [chunks[-1]] if len(chunks) % 2 else []
        )
    return chunks[0]


def _pm1_stage1(n: int, b1: int) -> Optional[int]:
    """Pollard p-1 (stage 1, base 2) via a single gmpy2 powmod."""
    nz = gmpy2.mpz(n)
    a = gmpy2.powmod(2, _pm1_exponent(b1), nz)
    d = int(gmpy2.gcd(a - 1, nz))
    if 1 < d < n:
        return d
    return None


def _brent_capped(n: int, cap: int) -> Optional[int]:
    """Brent rho on gmpy2 integers, giving up after ~cap squarings."""
    nz = gmpy2.mpz(n)
    for c in (1, 3):
        x = y = gmpy2.mpz(2)
        d = gmpy2.mpz(1)
        q = gmpy2.mpz(1)
        m = 256
        count = 0
        while d == 1 and count < cap:
            x = y
            for _ in range(m):
                y = (y * y + c) % nz
            k = 0
            ys = y
            while k < m and d == 1:
                ys = y
                for _ in range(min(m, 256)):
                    y = (y * y + c) % nz
                    q = q * (x - y) % nz
                d = gmpy2.gcd(q, nz)
                k += 256
            count += 2 * m
            m *= 2
            if d == nz:
                d = gmpy2.mpz(1)
                while d == 1:
                    ys = (ys * ys + c) % nz
                    d = gmpy2.gcd(x - ys, nz)
                break
        if 1 < d < nz:
            return int(d)
    return None


def _pp1_williams(n: int, b1: int, seeds=(6, 9, 13)) -> Optional[int]:
    """Williams p+1 (stage 1): Lucas ladder V_e(A) mod n, gcd(V - 2, n)."""
    nz = gmpy2.mpz(n)
    e = _pm1_exponent(b1)
    bits = e.bit_length()
    for a0 in seeds:
        v = gmpy2.mpz(a0)
        w = (v * v - 2) % nz  # V_2
        # left-to-right ladder maintaining (V_k, V_{k+1})
        for i in range(bits - 2, -1, -1):
            if (e >> i) & 1:
                v = (v * w - a0) % nz
                w = (w * w - 2) % nz
            else:
                w = (v * w - a0) % nz
                v = (v * v - 2) % nz
        d = int(gmpy2.gcd(v - 2, nz))
        if 1 < d < n:
            return d
    return None


def _ecm_stage1(n: int, b1: int, curves: int, seed: int = 1) -> Optional[int]:
    """ECM stage 1 on Montgomery curves with Suyama parametrization.

    Deterministic curve sequence.  Finds p | n when the curve group order
    at p is b1-smooth; good for factors well below the rho cap's reach.
    """
    nz = gmpy2.mpz(n)
    e = int(_pm1_exponent(b1))
    bits = e.bit_length()
    for idx in range(curves):
        sigma = gmpy2.mpz(6 + seed + idx)
        u = (sigma * sigma - 5) % nz
        v = (4 * sigma) % nz
        x0 = u * u * u % nz
        z0 = v * v * v % nz
        # A24 = (A+2)/4 with A from Suyama's formula; inversions can
        # themselves reveal a factor
        num = (v - u) ** 3 % nz * ((3 * u + v) % nz) % nz
        den = (4 * x0 * v) % nz
        g = gmpy2.gcd(den, nz)
        if g == nz:
            continue
        if g > 1:
            return int(g)
        a24 = num * gmpy2.invert(den, nz) % nz  # (A+2)/4 folded in
        # Montgomery ladder for e * P with x-only arithmetic
        xq, zq = x0, z0
        xp, zp = gmpy2.mpz(1), gmpy2.mpz(0)  # point at infinity
        for i in range(bits - 1, -1, -1):
            bit = (e >> i) & 1
            if bit:
                xp, zp, xq, zq = xq, zq, xp, zp
            # differential add: P+Q with difference (x0, z0)
            t1 = (xp - zp) * (xq + zq) % nz
            t2 = (xp + zp) * (xq - zq) % nz
            xs = z0 * (t1 + t2) ** 2 % nz
            zs = x0 * (t1 - t2) ** 2 % nz
            # double P
            s1 = (xp + zp) ** 2 % nz
            s2 = (xp - zp) ** 2 % nz
            xd = s1 * s2 % nz
            zd = (s1 - s2) * (s2 + a24 * (s1 - s2)) % nz
            if bit:
                xq, zq, xp, zp = xd, zd, xs, zs
            else:
                xp, zp, xq, zq = xd, zd, xs, zs
        g = int(gmpy2.gcd(zp, nz))
        if 1 < g < n:
            return g
    return None


def _smallest_prime_factor_large(c: int) -> int:
    """Smallest prime factor of c, where c has no factor below ~2**16.

    Tiered: primality test, capped Brent rho, Pollard p-1, Williams p+1,
    then ECM (own stage 1, then sympy).  Splits recurse so the smallest
    prime factor is exact.
    """
    if is_prime(c):
        return c
    d = _brent_capped(c, 3 * 10**4)
    if d is None:
        d = _pm1_stage1(c, 3 * 10**5)
    if d is None:
        d = _pp1_williams(c, 16384, seeds=(6, 9))
    if d is None:
        d = _ecm_stage1(c, 2000, 16)
    if d is None:
        d = _brent_capped(c, 4 * 10**5)
    if d is None:
        d = _ecm_stage1(c, 10000, 16, seed=100)
    if d is None:
        import sympy  # last resort for stubborn balanced cofactors

        d = min(sympy.factorint(c))
    parts = []
    for piece in (d, c // d):
        if is_prime(piece):
            parts.append(piece)
        else:
            parts.append(_smallest_prime_factor_large(piece))
    return min(parts)


def _zsig_worker(pair):
    a, n = pair
    return a, n, zsigmondy_ppd(a, n)


def zsigmondy_sweep(a_max: int, n_max: int, jobs: int = 0) -> dict:
    """zsigmondy_ppd over all 2 <= a <= a_max, 1 <= n <= n_max.

    Pure per-pair computation, so the sweep parallelizes across processes;
    pairs are scheduled large-n first (the occasional hard factorizations
    live there).  Returns {(a, n): smallest ppd or None}.
    """
    pairs = [(a, n) for a in range(2, a_max + 1) for n in range(1, n_max + 1)]
    pairs.sort(key=lambda p: (-p[1], -p[0]))
    if jobs == 0:
        import os

        jobs = os.cpu_count() or 1
    if jobs > 1 and len(pairs) > 64:
        import multiprocessing as mp

        _pm1_exponent(10**6)  # warm shared caches before fork
        _small_prime_list()
        with mp.Pool(jobs) as pool:
            results = pool.map(_zsig_worker, pairs, chunksize=8)
    else:
        results = [_zsig_worker(p) for p in pairs]
    return {(a, n): t for a, n, t in results}


# ---------------------------------------------------------------------------
# Minimal order search
# ---------------------------------------------------------------------------

def minimal_order_search(bound_on_pn: int) -> Optional[tuple[int, int, int, int]]:
    """Minimize (p^n)^3 * (p^n-1)/(p^(n/d)-1) * d over admissible triples.

    Admissible: p prime, d | n with d > 1, gcd(d, p^n - 1) = 1, d divisible
    by at least two distinct odd primes, and p^n <= bound_on_pn.  Returns
    (p, n, d, order) for the minimizing triple, or None when no triple fits
    under the bound.
    """
    best: Optional[tuple[int, int, int, int]] = None
    p = 2
    while p**15 <= bound_on_pn:
        n = 15  # d | n needs two distinct odd primes, so n >= 3*5
        while p**n <= bound_on_pn:
            q = p**n
            for d in range(2, n + 1):
                if n % d:
                    continue
                odd = [r for r in prime_divisors(d) if r != 2]
                if len(odd) < 2:
                    continue
                if gcd(d, q - 1) != 1:
                    continue
                order = q**3 * ((q - 1) // (p ** (n // d) - 1)) * d
                if best is None or order < best[3]:
                    best = (p, n, d, order)
            n += 1
        p = next_prime(p)
    return best


# ---------------------------------------------------------------------------
# GF(p^n)
# ---------------------------------------------------------------------------

def _poly_mul_mod(u: tuple, v: tuple, modulus: tuple, p: int) -> tuple:
    n = len(modulus) - 1
    prod = [0] * (len(u) + len(v) - 1)
    for i, ui in enumerate(u):
        if ui:
            for j, vj in enumerate(v):
                prod[i + j] = (prod[i + j] + ui * vj) % p
    # reduce by the monic modulus
    for i in range(len(prod) - 1, n - 1, -1):
        c = prod[i]
        if c:
            prod[i] = 0
            for j in range(n):
                prod[i - n + j] = (prod[i - n + j] - c * modulus[j]) % p
    out = prod[:n]
    while len(out) < n:
        out.append(0)
    return tuple(out)


def _poly_is_irreducible(coeffs: tuple, p: int) -> bool:
    """Irreducibility of a monic degree-n polynomial over GF(p).

    Uses x^(p^n) = x together with gcd-free powers at the maximal proper
    divisors, all computed in the quotient ring.
    """
    n = len(coeffs) - 1
    if n == 1:
        return True

    def xpow(e: int) -> tuple:
        # x^e in the quotient ring by repeated squaring
        result = tuple([1] + [0] * (n - 1))
        base = tuple([0, 1] + [0] * (n - 2)) if n >= 2 else (0,)
        while e:
            if e & 1:
                result = _poly_mul_mod(result, base, coeffs, p)
            base = _poly_mul_mod(base, base, coeffs, p)
            e >>= 1
        return result

    x = tuple([0, 1] + [0] * (n - 2))
    if xpow(p**n) != x:
        return False
    for q in prime_divisors(n):
        w = xpow(p ** (n // q))
        # gcd(w - x, modulus) must be 1; since modulus is irreducible iff
        # w != x in the ring for every maximal subfield power
        if w == x:
            return False
    return True


@lru_cache(maxsize=None)
def default_modulus(p: int, n: int) -> tuple:
    """Lexicographically least monic irreducible of degree n over GF(p).

    Coefficients low-to-high, length n + 1, last entry 1.  A fixed
    deterministic choice so field constructions are reproducible.
    """
    if n == 1:
        return (0, 1)
    # enumerate constant-first tuples in lex order
    total = p**n
    for code in range(total):
        coeffs = []
        c = code
        for _ in range(n):
            coeffs.append(c % p)
            c //= p
        cand = tuple(coeffs) + (1,)
        if cand[0] == 0:
            continue  # reducible: divisible by x
        if _poly_is_irreducible(cand, p):
            return cand
    raise RuntimeError("no irreducible polynomial found")  # unreachable


@dataclass(frozen=True)
class FieldSpec:
    """GF(p^n) with an explicit monic irreducible modulus (low-to-high)."""

    p: int
    n: int
    modulus: tuple

    def __post_init__(self):
        if not is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")
        if self.n < 1:
            raise ValueError("n must be positive")
        if len(self.modulus) != self.n + 1 or self.modulus[-1] != 1:
            raise ValueError("modulus must be monic of degree n")
        if not _poly_is_irreducible(tuple(self.modulus), self.p):
            raise ValueError("modulus is not irreducible")

    @staticmethod
    def make(p: int, n: int) -> "FieldSpec":
        return FieldSpec(p, n, default_modulus(p, n))

    @property
    def order(self) -> int:
        return self.p**self.n

    def zero(self) -> "FieldElement":
        return FieldElement(self, (0,) * self.n)

    def one(self) -> "FieldElement":
        return FieldElement(self, (1,) + (0,) * (self.n - 1))

    def x(self) -> "FieldElement":
        if self.n == 1:
            return self.one()
        return FieldElement(self, (0, 1) + (0,) * (self.n - 2))

    def element(self, coeffs) -> "FieldElement":
        return FieldElement(self, tuple(c % self.p for c in coeffs))

    def from_int(self, code: int) -> "FieldElement":
        """Element whose coefficient vector is code written base p."""
        coeffs = []
        for _ in range(self.n):
            coeffs.append(code % self.p)
            code //= self.p
        return FieldElement(self, tuple(coeffs))

    def elements(self) -> Iterator["FieldElement"]:
        for code in range(self.order):
            yield self.from_int(code)

    @property
    def generator(self) -> "FieldElement":
        return _field_generator(self)


@dataclass(frozen=True)
class FieldElement:
    spec: FieldSpec
    coeffs: tuple

    def __post_init__(self):
        if len(self.coeffs) != self.spec.n:
            raise ValueError("coefficient vector has wrong length")
        if any(not (0 <= c < self.spec.p) for c in self.coeffs):
            raise ValueError("coefficients out of range")

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def to_int(self) -> int:
        code = 0
        for c in reversed(self.coeffs):
            code = code * self.spec.p + c
        return code

    def __add__(self, other: "FieldElement") -> "FieldElement":
        p = self.spec.p
        return FieldElement(self.spec, tuple((a + b) % p for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "FieldElement") -> "FieldElement":
        p = self.spec.p
        return FieldElement(self.spec, tuple((a - b) % p for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "FieldElement":
        p = self.spec.p
        return FieldElement(self.spec, tuple((-a) % p for a in self.coeffs))

    def __mul__(self, other: "FieldElement") -> "FieldElement":
        return FieldElement(
            self.spec, _poly_mul_mod(self.coeffs, other.coeffs, self.spec.modulus, self.spec.p)
        )

    def __pow__(self, e: int) -> "FieldElement":
        if e < 0:
            return self.inverse() ** (-e)
        result = self.spec.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def inverse(self) -> "FieldElement":
        if self.is_zero():
            raise ZeroDivisionError("zero has no inverse")
        return self ** (self.spec.order - 2)

    def frobenius(self, k: int = 1) -> "FieldElement":
        """x ** (p**k)."""
        return self ** (self.spec.p ** (k % self.spec.n))

    def order(self) -> int:
        if self.is_zero():
            raise ValueError("zero has no multiplicative order")
        m = self.spec.order - 1
        order = m
        for q, _ in factorize(m):
            while order % q == 0 and (self ** (order // q)) == self.spec.one():
                order //= q
        return order


@lru_cache(maxsize=None)
def _field_generator(spec: FieldSpec) -> FieldElement:
    """A fixed generator of GF(p^n)^*: first element (in from_int order)
    of full multiplicative order."""
    m = spec.order - 1
    if m == 1:
        return spec.one()
    fac = factorize(m)
    for code in range(1, spec.order):
        g = spec.from_int(code)
        if g.is_zero():
            continue
        if all((g ** (m // q)) != spec.one() for q, _ in fac):
            return g
    raise RuntimeError("multiplicative group has no generator")  # unreachable


@dataclass(frozen=True)
class GaloisAuto:
    """Field automorphism x -> x^(p^power) of a fixed GF(p^n)."""

    spec: FieldSpec
    power: int

    def __post_init__(self):
        if not (0 <= self.power < self.spec.n):
            raise ValueError("power out of range")

    def __call__(self, x: FieldElement) -> FieldElement:
        return x.frobenius(self.power)

    def compose(self, other: "GaloisAuto") -> "GaloisAuto":
        return GaloisAuto(self.spec, (self.power + other.power) % self.spec.n)


def frobenius_orbit(x: FieldElement) -> list[FieldElement]:
    """Galois conjugates {x^(p^k)} of a nonzero element, orbit order."""
    if x.is_zero():
        raise ValueError("zero rejected: orbit is trivial and never needed")
    orbit = [x]
    y = x.frobenius()
    while y != x:
        orbit.append(y)
        y = y.frobenius()
    return orbit


@lru_cache(maxsize=None)
def _dlog_table(spec: FieldSpec) -> dict:
    """Baby-step table for the fixed generator (fields up to DLOG_FIELD_CAP)."""
    if spec.order > DLOG_FIELD_CAP:
        raise ValueError(
            f"dlog only supported for field order <= {DLOG_FIELD_CAP}, got {spec.order}"
        )
    m = spec.order - 1
    s = isqrt(m) + 1
    g = _field_generator(spec)
    table = {}
    cur = spec.one()
    for j in range(s):
        table.setdefault(cur.coeffs, j)
        cur = cur * g
    return table


def discrete_log(x: FieldElement) -> int:
    """dlog of nonzero x base the field's fixed generator (BSGS)."""
    if x.is_zero():
        raise ValueError("zero has no discrete log")
    spec = x.spec
    m = spec.order - 1
    if m == 1:
        return 0
    table = _dlog_table(spec)
    s = isqrt(m) + 1
    g = _field_generator(spec)
    giant = (g ** s).inverse()
    cur = x
    for i in range(s + 1):
        j = table.get(cur.coeffs)
        if j is not None:
            return (i * s + j) % m
        cur = cur * giant
    raise RuntimeError("discrete log not found")  # unreachable for nonzero x

"""Exact linear algebra over cyclotomic fields, plus mod-p certificates.

The exact routines work on any element type supporting +, -, *, / and
truthiness (CycNumber and Fraction both qualify).  The mod-p routines map
Q(zeta_n) into F_p[t]/(Phi_n) for a prime p chosen so that Phi_n stays
irreducible; they are used as rank certificates, never as approximations:
a mod-p nullity of zero proves the exact nullity is zero, and candidate
kernel vectors are lifted by rational reconstruction and re-verified
exactly by the caller.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, isqrt

from .field import CycField, CycNumber, cyclotomic_polynomial


def _complexity(x) -> int:
    if isinstance(x, CycNumber):
        return sum(
            c.numerator.bit_length() + c.denominator.bit_length() for c in x.coeffs
        )
    if isinstance(x, Fraction):
        return x.numerator.bit_length() + x.denominator.bit_length()
    return 1


def echelon(rows: list[list], ncols: int) -> tuple[list[list], list[int]]:
    """Row reduce in place over the exact field.

    Returns the reduced rows and the list of pivot columns.  Pivots are
    chosen by smallest coefficient size to limit expression growth.
    """
    rows = [list(r) for r in rows]
    pivots: list[int] = []
    head = 0
    for col in range(ncols):
        best = None
        best_size = None
        for i in range(head, len(rows)):
            x = rows[i][col]
            if x:
                size = _complexity(x)
                if best is None or size < best_size:
                    best, best_size = i, size
        if best is None:
            continue
        rows[head], rows[best] = rows[best], rows[head]
        piv_row = rows[head]
        piv = piv_row[col]
        for i in range(len(rows)):
            if i == head:
                continue
            x = rows[i][col]
            if x:
                factor = x / piv
                row = rows[i]
                for j in range(col, ncols):
                    v = piv_row[j]
                    if v:
                        row[j] = row[j] - factor * v
        pivots.append(col)
        head += 1
        if head == len(rows):
            break
    return rows, pivots


def rank(rows: list[list], ncols: int) -> int:
    return len(echelon(rows, ncols)[1])


def nullity(rows: list[list], ncols: int) -> int:
    if not rows:
        return ncols
    return ncols - rank(rows, ncols)


def kernel_basis(rows: list[list], ncols: int, one, zero) -> list[list]:
    """Basis of the right kernel, exact.

    echelon() fully reduces, so each pivot column is nonzero in its own row
    only and the kernel reads off directly from the free columns.
    """
    if not rows:
        return [
            [one if j == i else zero for j in range(ncols)] for i in range(ncols)
        ]
    red, pivots = echelon(rows, ncols)
    pivot_set = set(pivots)
    free_cols = [c for c in range(ncols) if c not in pivot_set]
    basis = []
    for fc in free_cols:
        vec = [zero] * ncols
        vec[fc] = one
        for r, pc in enumerate(pivots):
            v = red[r][fc]
            if v:
                vec[pc] = -v / red[r][pc]
        basis.append(vec)
    return basis


def kernel_vector(rows: list[list], ncols: int, one, zero):
    """One nonzero kernel vector, or None if the kernel is trivial."""
    basis = kernel_basis(rows, ncols, one, zero)
    return basis[0] if basis else None


# --- mod-p support -----------------------------------------------------

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def good_prime(n: int, start: int = (1 << 30) + 3, skip: int = 0) -> int:
    """A prime p with Phi_n irreducible mod p: ord(p mod n) = phi(n).

    Exists precisely when (Z/n)* is cyclic; raises otherwise.
    """
    phi = len(cyclotomic_polynomial(n)) - 1
    found = 0
    p = start if start % 2 else start + 1
    for _ in range(200000):
        if _is_prime(p) and n % p:
            r = p % n
            if gcd(r, n) == 1:
                e, acc = 1, r % n
                while acc != 1 % n:
                    acc = acc * r % n
                    e += 1
                if e == phi:
                    if found == skip:
                        return p
                    found += 1
        p += 2
    raise ArithmeticError(f"no suitable prime found for n={n}")


class FpCyc:
    """Element of F_p[t]/(Phi_n), Phi_n irreducible mod p (a field)."""

    __slots__ = ("ctx", "coeffs")

    def __init__(self, ctx, coeffs):
        self.ctx = ctx
        self.coeffs = coeffs

    def __bool__(self):
        return any(self.coeffs)

    def __eq__(self, other):
        return isinstance(other, FpCyc) and self.coeffs == other.coeffs

    def __add__(self, other):
        p = self.ctx.p
        return FpCyc(
            self.ctx,
            tuple((a + b) % p for a, b in zip(self.coeffs, other.coeffs)),
        )

    def __sub__(self, other):
        p = self.ctx.p
        return FpCyc(
            self.ctx,
            tuple((a - b) % p for a, b in zip(self.coeffs, other.coeffs)),
        )

    def __neg__(self):
        p = self.ctx.p
        return FpCyc(self.ctx, tuple(-a % p for a in self.coeffs))

    def __mul__(self, other):
        ctx = self.ctx
        p, deg, mod = ctx.p, ctx.degree, ctx.modulus
        if deg == 1:
            return FpCyc(ctx, (self.coeffs[0] * other.coeffs[0] % p,))
        conv = [0] * (2 * deg - 1)
        a, b = self.coeffs, other.coeffs
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        conv[i + j] += x * y
        for k in range(2 * deg - 2, deg - 1, -1):
            c = conv[k] % p
            if c:
                base = k - deg
                for i in range(deg):
                    m = mod[i]
                    if m:
                        conv[base + i] -= c * m
        return FpCyc(ctx, tuple(c % p for c in conv[:deg]))

    def __truediv__(self, other):
        return self * other.inverse()

    def inverse(self):
        ctx = self.ctx
        if not self:
            raise ZeroDivisionError
        if ctx.degree == 1:
            return FpCyc(ctx, (pow(self.coeffs[0], -1, ctx.p),))
        # extended Euclid in F_p[t]
        p = ctx.p
        r0 = list(ctx.full_modulus)
        r1 = list(self.coeffs)
        s0, s1 = [0], [1]

        def deg_of(v):
            for i in range(len(v) - 1, -1, -1):
                if v[i]:
                    return i
            return -1

        while True:
            d1 = deg_of(r1)
            if d1 < 0:
                raise ZeroDivisionError("zero divisor in mod-p field")
            if d1 == 0:
                inv = pow(r1[0], -1, p)
                out = [(x * inv) % p for x in s1]
                out = out[: ctx.degree] + [0] * max(0, ctx.degree - len(out))
                return FpCyc(ctx, tuple(out[: ctx.degree]))
            d0 = deg_of(r0)
            if d0 < d1:
                r0, r1, s0, s1 = r1, r0, s1, s0
                continue
            c = r0[d0] * pow(r1[d1], -1, p) % p
            shift = d0 - d1
            for i in range(d1 + 1):
                if r1[i]:
                    r0[i + shift] = (r0[i + shift] - c * r1[i]) % p
            need = len(s1) + shift
            if len(s0) < need:
                s0 = s0 + [0] * (need - len(s0))
            for i in range(len(s1)):
                if s1[i]:
                    s0[i + shift] = (s0[i + shift] - c * s1[i]) % p


class FpCycContext:
    """Arithmetic context for F_p[t]/(Phi_n)."""

    def __init__(self, n: int, p: int):
        self.n = n
        self.p = p
        mod = cyclotomic_polynomial(n)
        self.degree = len(mod) - 1
        self.full_modulus = tuple(m % p for m in mod)
        self.modulus = tuple(m % p for m in mod[:-1])
        self.zero = FpCyc(self, (0,) * self.degree)
        self.one = FpCyc(self, tuple(1 if i == 0 else 0 for i in range(self.degree)))

    def reduce(self, x: CycNumber) -> FpCyc:
        p = self.p
        out = []
        for c in x.coeffs:
            den = c.denominator % p
            if den == 0:
                raise ZeroDivisionError("denominator vanishes mod p")
            out.append(c.numerator % p * pow(den, -1, p) % p)
        return FpCyc(self, tuple(out))


def modp_echelon(rows, ncols):
    """Row reduction over the FpCyc field; returns rows and pivot columns."""
    rows = [list(r) for r in rows]
    pivots = []
    head = 0
    for col in range(ncols):
        sel = None
        for i in range(head, len(rows)):
            if rows[i][col]:
                sel = i
                break
        if sel is None:
            continue
        rows[head], rows[sel] = rows[sel], rows[head]
        piv_row = rows[head]
        inv = piv_row[col].inverse()
        for i in range(head + 1, len(rows)):
            x = rows[i][col]
            if x:
                factor = x * inv
                row = rows[i]
                for j in range(col, ncols):
                    v = piv_row[j]
                    if v:
                        row[j] = row[j] - factor * v
        pivots.append(col)
        head += 1
        if head == len(rows):
            break
    return rows, pivots


def modp_nullity(rows, ncols) -> int:
    if not rows:
        return ncols
    return ncols - len(modp_echelon(rows, ncols)[1])


def modp_kernel_vector(rows, ncols, ctx: FpCycContext):
    """One kernel vector mod p, or None."""
    if not rows:
        vec = [ctx.zero] * ncols
        if ncols == 0:
            return None
        vec[0] = ctx.one
        return vec
    red, pivots = modp_echelon(rows, ncols)
    pivot_set = set(pivots)
    free_cols = [c for c in range(ncols) if c not in pivot_set]
    if not free_cols:
        return None
    fc = free_cols[0]
    vec = [ctx.zero] * ncols
    vec[fc] = ctx.one
    for r in range(len(pivots) - 1, -1, -1):
        pc = pivots[r]
        row = red[r]
        total = row[fc]
        for pc2 in pivots[r + 1 :]:
            v = row[pc2]
            if v:
                total = total + v * vec[pc2]
        vec[pc] = -(total * row[pc].inverse())
    return vec


def rational_reconstruct(a: int, p: int) -> Fraction | None:
    """Find r/s = a mod p with |r|, s <= sqrt(p/2), or None."""
    if a == 0:
        return Fraction(0)
    bound = isqrt(p // 2)
    r0, r1 = p, a % p
    s0, s1 = 0, 1
    while r1 > bound:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        s0, s1 = s1, s0 - q * s1
    if abs(s1) > bound or s1 == 0:
        return None
    if gcd(r1, abs(s1)) != 1:
        return None
    return Fraction(r1, s1) if s1 > 0 else Fraction(-r1, -s1)


def lift_fpcyc(x: FpCyc, F: CycField) -> CycNumber | None:
    """Lift an FpCyc element to Q(zeta_n) by rational reconstruction."""
    out = []
    for c in x.coeffs:
        q = rational_reconstruct(c, x.ctx.p)
        if q is None:
            return None
        out.append(q)
    return F.element(out)


class FlatContext:
    """Reduction of a Q(zeta_n) matrix to a plain integer matrix mod p.

    Each field entry becomes a phi x phi multiplication block over F_p, so
    the flat nullity is exactly phi times the nullity over F_p[t]/(Phi_n).
    Plain-int rows make the elimination loop much faster than object
    arithmetic; this is the workhorse for the big derivation systems.
    """

    __slots__ = ("F", "p", "phi", "mod")

    def __init__(self, F: CycField, p: int):
        self.F = F
        self.p = p
        self.phi = F.degree
        self.mod = [c % p for c in F.modulus[:-1]]

    def entry_coeffs(self, x: CycNumber) -> list[int]:
        p = self.p
        out = []
        for c in x.coeffs:
            den = c.denominator % p
            if den == 0:
                raise ZeroDivisionError("denominator vanishes mod p")
            out.append(c.numerator % p * pow(den, -1, p) % p)
        return out

    def block_columns(self, coeffs: list[int]) -> list[list[int]]:
        """Column j holds the coefficients of x * t^j mod Phi_n."""
        p, phi, mod = self.p, self.phi, self.mod
        cols = [list(coeffs)]
        cur = coeffs
        for _ in range(phi - 1):
            lead = cur[-1]
            nxt = [0] + list(cur[:-1])
            if lead:
                for i in range(phi):
                    nxt[i] = (nxt[i] - lead * mod[i]) % p
            cols.append(nxt)
            cur = nxt
        return cols


def flatten_rows(rows, F: CycField, p: int) -> list[list[int]]:
    """Expand field-entry rows into phi times as many plain F_p rows.

    Unknown j splits into phi flat unknowns (its coefficient vector); a
    flat kernel vector regrouped phi at a time is a kernel vector of the
    original system.  Raises ZeroDivisionError on a bad prime.
    """
    ctx = FlatContext(F, p)
    phi = ctx.phi
    flat = []
    cache: dict[CycNumber, list[list[int]]] = {}
    zero_cols = [[0] * phi for _ in range(phi)]
    for row in rows:
        blocks = []
        for x in row:
            if not x:
                blocks.append(zero_cols)
                continue
            b = cache.get(x)
            if b is None:
                b = ctx.block_columns(ctx.entry_coeffs(x))
                cache[x] = b
            blocks.append(b)
        for s in range(phi):
            flat.append([cols[j][s] for cols in blocks for j in range(phi)])
    return flat


def fp_echelon(rows: list[list[int]], p: int) -> list[int]:
    """In-place forward elimination mod p; returns the pivot columns.
    Pivot rows end up normalized (pivot entry 1)."""
    pivots = []
    nrows = len(rows)
    if nrows == 0:
        return pivots
    ncols = len(rows[0])
    head = 0
    for col in range(ncols):
        sel = None
        for i in range(head, nrows):
            if rows[i][col]:
                sel = i
                break
        if sel is None:
            continue
        rows[head], rows[sel] = rows[sel], rows[head]
        piv = rows[head]
        inv = pow(piv[col], -1, p)
        if inv != 1:
            piv = rows[head] = [v * inv % p for v in piv]
        for i in range(head + 1, nrows):
            f = rows[i][col]
            if f:
                ri = rows[i]
                rows[i] = [(a - f * b) % p for a, b in zip(ri, piv)]
        pivots.append(col)
        head += 1
        if head == nrows:
            break
    return pivots


def fp_nullity(rows: list[list[int]], ncols: int, p: int) -> int:
    if not rows:
        return ncols
    return ncols - len(fp_echelon(rows, p))


def fp_kernel_vector(rows: list[list[int]], ncols: int, p: int):
    """One kernel vector mod p with the first free variable set to 1,
    or None when the matrix has full column rank.  Deterministic given
    the matrix, so vectors from different primes are CRT-compatible."""
    if not rows:
        if ncols == 0:
            return None, []
        vec = [0] * ncols
        vec[0] = 1
        return vec, []
    pivots = fp_echelon(rows, p)
    pivot_set = set(pivots)
    fc = next((c for c in range(ncols) if c not in pivot_set), None)
    if fc is None:
        return None, pivots
    vec = [0] * ncols
    vec[fc] = 1
    for r in range(len(pivots) - 1, -1, -1):
        pc = pivots[r]
        row = rows[r]
        total = row[fc]
        for pc2 in pivots[r + 1 :]:
            v = row[pc2]
            if v:
                total += v * vec[pc2]
        vec[pc] = -total % p
    return vec, pivots


def crt_pair(a1: int, p1: int, a2: int, p2: int) -> int:
    """Combine residues into one mod p1*p2."""
    inv = pow(p1 % p2, -1, p2)
    t = (a2 - a1) * inv % p2
    return (a1 + p1 * t) % (p1 * p2)


def lift_flat_vector(vec: list[int], F: CycField, modulus: int):
    """Regroup a flat kernel vector into field elements by rational
    reconstruction; None when any coordinate fails to reconstruct."""
    phi = F.degree
    out = []
    for j in range(0, len(vec), phi):
        coeffs = []
        for c in vec[j : j + phi]:
            q = rational_reconstruct(c, modulus)
            if q is None:
                return None
            coeffs.append(q)
        out.append(F.element(coeffs))
    return out

"""Parameter classes for two-modular-point arrangements.

A class is a set of k distinct exponents mod n, taken modulo translation
(adding a constant), inversion (negating), and reordering.  The canonical
representative is the lexicographically smallest sorted image.  Recovery
reads the class back off an arrangement using only its modular structure,
so it is invariant under projective transforms.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .classify import modular_points
from .field import exponent_in_mu
from .projgeo import Arrangement, build_lattice, line_intersect, line_through


@dataclass(frozen=True, order=True)
class WClass:
    n: int
    k: int
    exponents: tuple[int, ...]

    def to_json(self) -> dict:
        return {"n": self.n, "k": self.k, "exponents": list(self.exponents)}


def canonicalize(n: int, exponents) -> WClass:
    exps = tuple(int(e) % n for e in exponents)
    if len(set(exps)) != len(exps):
        raise ValueError("repeated exponents")
    if len(exps) > n:
        raise ValueError("at most n exponents")
    if not exps:
        return WClass(n, 0, ())
    best = None
    for base in (exps, tuple(-e % n for e in exps)):
        for a in range(n):
            img = tuple(sorted((e + a) % n for e in base))
            if best is None or img < best:
                best = img
    return WClass(n, len(exps), best)


def enumerate_classes(n: int, k: int) -> list[WClass]:
    if not 0 <= k <= n:
        raise ValueError("need 0 <= k <= n")
    return sorted({canonicalize(n, c) for c in combinations(range(n), k)})


def predicted_modular_count(n: int, k: int) -> int:
    if not 0 <= k <= n:
        raise ValueError("need 0 <= k <= n")
    if k < n:
        return 2
    return 3 if n >= 2 else 4


@dataclass(frozen=True)
class Recovery:
    wclass: WClass
    full_monomial: bool

    @property
    def k(self) -> int:
        return self.wclass.k

    def to_json(self) -> dict:
        out = self.wclass.to_json()
        out["full_monomial"] = self.full_monomial
        return out


def recover_class(arr: Arrangement) -> Recovery:
    """Read the class off a homogeneous arrangement with >= 2 modular points.

    The lines missing both chosen modular pencils are concurrent; their
    coefficients decompose in the pencil spanned by the two lines joining
    that common point to the modular points, and the coefficient ratios,
    normalized to make one of them 1, are the roots of unity defining the
    class.  Ratios survive projective transforms, so recovery round-trips.
    """
    lat = build_lattice(arr)
    mods = modular_points(arr, lat)
    if len(mods) < 2:
        raise ValueError("need at least two modular points")
    mults = {m for _, m in mods}
    if len(mults) != 1:
        raise ValueError("modular points of unequal multiplicity")
    m = mults.pop()
    if m < 3:
        raise ValueError("modular multiplicity below 3")
    n = m - 2
    pts = sorted((p for p, _ in mods), key=lambda p: p.sort_key())
    p1, p2 = pts[0], pts[1]
    rest = [
        l for l in arr.lines if not l.contains(p1) and not l.contains(p2)
    ]
    k = len(rest)
    if k != len(arr.lines) - 2 * m + 1:
        raise AssertionError("modular pencil sizes inconsistent")
    if k == 0:
        return Recovery(WClass(n, 0, ()), False)
    if k == 1:
        return Recovery(canonicalize(n, (0,)), k == n)
    q = line_intersect(rest[0], rest[1])
    for l in rest[2:]:
        if not l.contains(q):
            raise AssertionError("extra lines are not concurrent")
    u = line_through(p1, q)
    v = line_through(p2, q)
    if u not in arr.line_set or v not in arr.line_set:
        raise AssertionError("joining lines missing from the arrangement")
    lambdas = [_pencil_ratio(l, u, v) for l in rest]
    ref = lambdas[0]
    exps = []
    for lam in lambdas:
        t = lam / ref
        try:
            exps.append(exponent_in_mu(t, n))
        except ValueError as exc:
            raise AssertionError(
                f"ratio is not an n-th root of unity: {exc}"
            ) from exc
    return Recovery(canonicalize(n, exps), k == n)


def _pencil_ratio(l, u, v):
    """alpha/beta in the decomposition l = alpha u + beta v."""
    uc, vc, lc = u.coords, v.coords, l.coords
    for i in range(3):
        for j in range(i + 1, 3):
            det = uc[i] * vc[j] - uc[j] * vc[i]
            if det:
                alpha = lc[i] * vc[j] - lc[j] * vc[i]
                beta = uc[i] * lc[j] - uc[j] * lc[i]
                return alpha / beta
    raise AssertionError("pencil basis is degenerate")

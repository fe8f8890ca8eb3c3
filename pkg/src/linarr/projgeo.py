"""Exact projective geometry in P^2 over a cyclotomic field.

Points and lines are coefficient triples, normalized so the first nonzero
coordinate is 1; that makes exact grouping by hashing possible.  The
intersection lattice of an arrangement records every pairwise intersection
point with its multiplicity and incident lines.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from .field import CycField, CycNumber, cyc_field, cyc_from_strings, cyc_to_strings


def _normalize(field: CycField, triple) -> tuple[CycNumber, ...]:
    coords = []
    for c in triple:
        if isinstance(c, CycNumber):
            if c.field.order != field.order:
                raise ValueError("coordinate from a different field")
            coords.append(c)
        else:
            coords.append(field.scalar(c))
    lead = None
    for c in coords:
        if c:
            lead = c
            break
    if lead is None:
        raise ValueError("zero triple is not projective")
    if lead == field.one:
        return tuple(coords)
    return tuple(c / lead for c in coords)


class _ProjTriple:
    __slots__ = ("field", "coords", "_hash")

    def __init__(self, field: CycField, triple):
        self.field = field
        self.coords = _normalize(field, triple)
        self._hash = None

    def __eq__(self, other):
        return (
            type(other) is type(self)
            and self.field.order == other.field.order
            and self.coords == other.coords
        )

    def __hash__(self):
        h = self._hash
        if h is None:
            h = hash((type(self).__name__, self.field.order, self.coords))
            self._hash = h
        return h

    def sort_key(self):
        return tuple(c.coeffs for c in self.coords)

    def __repr__(self):
        inner = " : ".join(repr(c) for c in self.coords)
        return f"{type(self).__name__}({inner})"


class ProjPoint(_ProjTriple):
    """Point of P^2, normalized homogeneous coordinates."""


class ProjLine(_ProjTriple):
    """Line of P^2, normalized coefficient triple of its linear form."""

    def contains(self, point: ProjPoint) -> bool:
        acc = self.field.zero
        for a, b in zip(self.coords, point.coords):
            acc = acc + a * b
        return not acc


def _cross(field: CycField, a, b) -> tuple[CycNumber, CycNumber, CycNumber]:
    return (
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    )


def line_intersect(l1: ProjLine, l2: ProjLine) -> ProjPoint:
    if l1.field.order != l2.field.order:
        raise ValueError("lines from different fields")
    if l1 == l2:
        raise ValueError("coincident lines have no unique intersection")
    return ProjPoint(l1.field, _cross(l1.field, l1.coords, l2.coords))


def line_through(p1: ProjPoint, p2: ProjPoint) -> ProjLine:
    if p1.field.order != p2.field.order:
        raise ValueError("points from different fields")
    if p1 == p2:
        raise ValueError("coincident points have no unique connecting line")
    return ProjLine(p1.field, _cross(p1.field, p1.coords, p2.coords))


class Arrangement:
    """Finite set of distinct lines in P^2 over one cyclotomic field."""

    __slots__ = ("field", "lines", "line_set", "_hash")

    def __init__(self, field: CycField, lines):
        self.field = field
        lines = tuple(
            l if isinstance(l, ProjLine) else ProjLine(field, l) for l in lines
        )
        if not lines:
            raise ValueError("arrangement needs at least one line")
        for l in lines:
            if l.field.order != field.order:
                raise ValueError("line from a different field")
        self.line_set = frozenset(lines)
        if len(self.line_set) != len(lines):
            raise ValueError("duplicate lines in arrangement")
        self.lines = lines
        self._hash = None

    def __len__(self):
        return len(self.lines)

    def __eq__(self, other):
        return (
            isinstance(other, Arrangement)
            and self.field.order == other.field.order
            and self.line_set == other.line_set
        )

    def __hash__(self):
        h = self._hash
        if h is None:
            h = hash((self.field.order, self.line_set))
            self._hash = h
        return h

    def __repr__(self):
        return f"Arrangement(n={self.field.order}, d={len(self.lines)})"

    def to_json(self) -> dict:
        return {
            "cyclotomic_order": self.field.order,
            "lines": [[cyc_to_strings(c) for c in l.coords] for l in self.lines],
        }

    @classmethod
    def from_json(cls, data: dict) -> "Arrangement":
        try:
            n = int(data["cyclotomic_order"])
            raw_lines = data["lines"]
        except (KeyError, TypeError) as exc:
            raise ValueError(f"malformed arrangement JSON: {exc}") from exc
        F = cyc_field(n)
        lines = []
        for raw in raw_lines:
            if len(raw) != 3:
                raise ValueError("each line needs three coefficients")
            lines.append(ProjLine(F, [cyc_from_strings(F, c) for c in raw]))
        return cls(F, lines)

    def save(self, path) -> None:
        with open(path, "w") as fh:
            json.dump(self.to_json(), fh, indent=1)
            fh.write("\n")

    @classmethod
    def load(cls, path) -> "Arrangement":
        with open(path) as fh:
            return cls.from_json(json.load(fh))


@dataclass(frozen=True)
class Lattice:
    """Intersection lattice in rank 2: points, multiplicities, incidences."""

    d: int
    points: tuple[ProjPoint, ...]
    mult: tuple[int, ...]
    incidence: tuple[tuple[int, ...], ...]

    def census(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for m in self.mult:
            out[m] = out.get(m, 0) + 1
        total = sum(n_k * k * (k - 1) // 2 for k, n_k in out.items())
        if total != self.d * (self.d - 1) // 2:
            raise AssertionError("pair count identity violated")
        return dict(sorted(out.items()))

    def point_index(self) -> dict[ProjPoint, int]:
        return {p: i for i, p in enumerate(self.points)}

    def to_json(self) -> dict:
        return {
            "points": [
                [cyc_to_strings(c) for c in p.coords] for p in self.points
            ],
            "multiplicities": list(self.mult),
            "incidence": [list(inc) for inc in self.incidence],
            "census": {str(k): v for k, v in self.census().items()},
        }


_LATTICE_CACHE: dict[Arrangement, Lattice] = {}


def build_lattice(arr: Arrangement) -> Lattice:
    """All pairwise intersection points, grouped exactly."""
    cached = _LATTICE_CACHE.get(arr)
    if cached is not None:
        return cached
    d = len(arr.lines)
    if d < 2:
        raise ValueError("need at least two lines to intersect")
    seen: dict[ProjPoint, set[int]] = {}
    lines = arr.lines
    for i in range(d):
        for j in range(i + 1, d):
            p = line_intersect(lines[i], lines[j])
            grp = seen.get(p)
            if grp is None:
                seen[p] = {i, j}
            else:
                grp.add(i)
                grp.add(j)
    items = sorted(
        seen.items(), key=lambda kv: (-len(kv[1]), kv[0].sort_key())
    )
    lattice = Lattice(
        d=d,
        points=tuple(p for p, _ in items),
        mult=tuple(len(inc) for _, inc in items),
        incidence=tuple(tuple(sorted(inc)) for _, inc in items),
    )
    lattice.census()  # asserts the pair count identity
    _LATTICE_CACHE[arr] = lattice
    return lattice


def census(arr_or_lattice) -> dict[int, int]:
    if isinstance(arr_or_lattice, Arrangement):
        return build_lattice(arr_or_lattice).census()
    return arr_or_lattice.census()


def _line_tables(lat: Lattice):
    # for each line: the lattice points on it; for each pair: its point
    on_line: list[list[int]] = [[] for _ in range(lat.d)]
    for pi, inc in enumerate(lat.incidence):
        for li in inc:
            on_line[li].append(pi)
    pair_point: dict[tuple[int, int], int] = {}
    for pi, inc in enumerate(lat.incidence):
        for a in range(len(inc)):
            for b in range(a + 1, len(inc)):
                pair_point[(inc[a], inc[b])] = pi
    return on_line, pair_point


def _line_colors(lat: Lattice, rounds: int = 2):
    """Refined line invariants: start from the multiplicity profile and
    fold in neighbour colors through shared points."""
    on_line, _ = _line_tables(lat)
    colors = [
        tuple(sorted(lat.mult[pi] for pi in on_line[li])) for li in range(lat.d)
    ]
    for _ in range(rounds):
        canon = {}
        new_colors = []
        for li in range(lat.d):
            env = []
            for pi in on_line[li]:
                others = tuple(
                    sorted(colors[lj] for lj in lat.incidence[pi] if lj != li)
                )
                env.append((lat.mult[pi], others))
            key = (colors[li], tuple(sorted(env)))
            new_colors.append(canon.setdefault(key, key))
        colors = new_colors
    return colors


def lattice_isomorphic(lat1: Lattice, lat2: Lattice) -> list[int] | None:
    """Search for a line bijection inducing a lattice isomorphism.

    Returns the image list (line i of lat1 maps to sigma[i] of lat2) or
    None.  Exhaustive backtracking with invariant pruning, meant for the
    desk scale (d <= 30).
    """
    if lat1.d != lat2.d:
        return None
    if lat1.census() != lat2.census():
        return None
    colors1 = _line_colors(lat1)
    colors2 = _line_colors(lat2)
    if sorted(map(hash, colors1)) != sorted(map(hash, colors2)):
        return None
    on_line1, pair1 = _line_tables(lat1)
    on_line2, pair2 = _line_tables(lat2)
    d = lat1.d

    candidates = [
        [j for j in range(d) if colors2[j] == colors1[i]] for i in range(d)
    ]

    sigma: list[int | None] = [None] * d
    used = [False] * d
    point_map: dict[int, int] = {}
    point_used: set[int] = set()

    def get_point(table, a, b):
        return table[(a, b)] if a < b else table[(b, a)]

    def order_next():
        best, best_score = None, None
        for i in range(d):
            if sigma[i] is not None:
                continue
            links = sum(
                1
                for pi in on_line1[i]
                if any(sigma[lj] is not None for lj in lat1.incidence[pi])
            )
            score = (-links, len(candidates[i]))
            if best is None or score < best_score:
                best, best_score = i, score
        return best

    def consistent(i, j):
        # every point shared with an assigned line must map coherently
        new_pairs = []
        for pi in on_line1[i]:
            inc = lat1.incidence[pi]
            assigned = [lj for lj in inc if lj != i and sigma[lj] is not None]
            if not assigned:
                continue
            q = get_point(pair2, j, sigma[assigned[0]])
            for lj in assigned[1:]:
                if get_point(pair2, j, sigma[lj]) != q:
                    return None
            if lat2.mult[q] != lat1.mult[pi]:
                return None
            prev = point_map.get(pi)
            if prev is not None:
                if prev != q:
                    return None
            else:
                if q in point_used:
                    return None
                new_pairs.append((pi, q))
        # no two distinct points of line i may collapse to one target
        targets = [q for _, q in new_pairs]
        if len(set(targets)) != len(targets):
            return None
        return new_pairs

    def backtrack():
        i = order_next()
        if i is None:
            return True
        for j in candidates[i]:
            if used[j]:
                continue
            new_pairs = consistent(i, j)
            if new_pairs is None:
                continue
            sigma[i] = j
            used[j] = True
            for pi, q in new_pairs:
                point_map[pi] = q
                point_used.add(q)
            if backtrack():
                return True
            sigma[i] = None
            used[j] = False
            for pi, q in new_pairs:
                del point_map[pi]
                point_used.discard(q)
        return False

    if backtrack():
        return [int(x) for x in sigma]  # fully assigned
    return None


def det3(rows) -> "CycNumber | Fraction":
    (a, b, c), (d_, e, f), (g, h, i) = rows
    return a * (e * i - f * h) - b * (d_ * i - f * g) + c * (d_ * h - e * g)


def adjugate3(rows):
    (a, b, c), (d_, e, f), (g, h, i) = rows
    return (
        (e * i - f * h, c * h - b * i, b * f - c * e),
        (f * g - d_ * i, a * i - c * g, c * d_ - a * f),
        (d_ * h - e * g, b * g - a * h, a * e - b * d_),
    )


def apply_transform(arr: Arrangement, matrix) -> Arrangement:
    """Image arrangement under the projective map x -> M x.

    Lines transform contragradiently; the adjugate stands in for the
    inverse since scalar factors do not matter projectively.
    """
    F = arr.field
    rows = tuple(
        tuple(c if isinstance(c, CycNumber) else F.scalar(c) for c in row)
        for row in matrix
    )
    if len(rows) != 3 or any(len(r) != 3 for r in rows):
        raise ValueError("expected a 3x3 matrix")
    if not det3(rows):
        raise ValueError("singular transform")
    adj = adjugate3(rows)
    new_lines = []
    for l in arr.lines:
        c = l.coords
        new_lines.append(
            ProjLine(
                F,
                tuple(
                    c[0] * adj[0][k] + c[1] * adj[1][k] + c[2] * adj[2][k]
                    for k in range(3)
                ),
            )
        )
    return Arrangement(F, new_lines)


def random_invertible_matrix(rng, lo: int = -5, hi: int = 5):
    """Small integer 3x3 matrix with nonzero determinant."""
    while True:
        rows = tuple(
            tuple(Fraction(rng.randint(lo, hi)) for _ in range(3))
            for _ in range(3)
        )
        if det3(rows):
            return rows

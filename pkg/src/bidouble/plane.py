"""The quadrilateral configuration in P^2 and exact fat-point interpolation.

Coordinates are fixed once and for all so that golden outputs are stable:
P1=(1:0:0), P2=(0:1:0), P3=(0:0:1), P4=(1:1:1), then P5 = P1P2 ^ P3P4 =
(1:1:0), P6 = P1P4 ^ P2P3 = (0:1:1), and P7 = (1:2:1) is the intersection
of the diagonals P2P4 and P5P6.  An optional general point is drawn with
small random rational coordinates (seeded) and redrawn until it misses
every catalogued line.

The module also catalogues the named negative curves living on the blowups
(sides S1..S4, diagonals, exceptional classes, the three conic pencils) and
provides:

* ``h0_fat_points`` -- dimension of the space of degree-d forms with
  prescribed multiplicities, by exact rank of the interpolation matrix
  over the rationals;
* ``h0_class`` -- h^0 of a divisor class, removing fixed parts against the
  catalogue first;
* ``effective_decompositions`` -- a brute-force oracle listing every way to
  write a class as a non-negative combination of catalogued classes.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction

from .lattice import BlowupLattice, DivisorClass

__all__ = [
    "CatalogueGapError",
    "CurveEntry",
    "PointConfiguration",
    "FatPointSystem",
    "standard_quadrilateral",
    "collinear",
    "interpolation_dimension",
    "h0_fat_points",
    "class_to_system",
    "h0_class",
    "effective_decompositions",
]

Point = tuple[Fraction, Fraction, Fraction]


class CatalogueGapError(RuntimeError):
    """Fixed-part removal ran out of budget; the curve catalogue is missing
    a negative curve for the class being evaluated."""


def _pt(x, y, z) -> Point:
    return (Fraction(x), Fraction(y), Fraction(z))


def det3(p: Point, q: Point, r: Point) -> Fraction:
    return (p[0] * (q[1] * r[2] - q[2] * r[1])
            - p[1] * (q[0] * r[2] - q[2] * r[0])
            + p[2] * (q[0] * r[1] - q[1] * r[0]))


def collinear(p: Point, q: Point, r: Point) -> bool:
    return det3(p, q, r) == 0


def _on_line(line, p: Point) -> bool:
    a, b, c = line
    return a * p[0] + b * p[1] + c * p[2] == 0


@dataclass(frozen=True)
class CurveEntry:
    """A catalogued curve (or pencil class) on a blowup of the plane.

    ``kind`` is one of "exceptional", "line", "conic" (a rigid conic, the
    pencil member through the general point) or "pencil".  ``line`` holds
    the coefficients (a, b, c) of a*x+b*y+c*z for plane lines.
    """

    name: str
    cls: DivisorClass
    kind: str
    line: tuple[int, int, int] | None = None

    @property
    def self_intersection(self) -> int:
        return self.cls.dot(self.cls)


# plane lines of the configuration: name -> coefficients of a*x+b*y+c*z
_LINE_COEFFS = {
    "S1": (0, 0, 1),        # P1 P2 P5
    "S2": (1, 0, 0),        # P2 P3 P6
    "S3": (1, -1, 0),       # P3 P4 P5
    "S4": (0, 1, -1),       # P4 P1 P6
    "Delta1": (0, 1, 0),    # P1 P3
    "Delta2": (1, 0, -1),   # P2 P4 (P7)
    "Delta3": (1, -1, 1),   # P5 P6 (P7)
}

# conic pencil classes on the 6-point blowup (four base points each)
_PENCIL_BASE = {
    "f1": (2, 4, 5, 6),
    "f2": (1, 3, 5, 6),
    "f3": (1, 2, 3, 4),
}


@dataclass(frozen=True)
class PointConfiguration:
    """Rational coordinates for the blown-up points plus the curve catalogue.

    ``collinear_triples`` records the 1-based incident triples; construction
    verifies each by an exact determinant and verifies that no other triple
    of catalogued points is collinear.
    """

    points: tuple[Point, ...]
    collinear_triples: frozenset[frozenset[int]]
    lattice: BlowupLattice
    entries: tuple[CurveEntry, ...]
    has_p7: bool = False
    has_general_point: bool = False
    seed: int | None = None

    def __post_init__(self):
        if len(self.points) != self.lattice.n:
            raise ValueError("one blown-up point per exceptional class required")
        for triple in self.collinear_triples:
            i, j, k = sorted(triple)
            if not collinear(self.points[i - 1], self.points[j - 1], self.points[k - 1]):
                raise ValueError(f"recorded triple {{{i},{j},{k}}} is not collinear")
        for i, j, k in itertools.combinations(range(1, len(self.points) + 1), 3):
            if frozenset((i, j, k)) in self.collinear_triples:
                continue
            if collinear(self.points[i - 1], self.points[j - 1], self.points[k - 1]):
                raise ValueError(f"unrecorded collinearity {{{i},{j},{k}}}")

    def point(self, i: int) -> Point:
        """1-based access, matching e_i."""
        return self.points[i - 1]

    def entry(self, name: str) -> CurveEntry:
        for e in self.entries:
            if e.name == name:
                return e
        raise KeyError(f"no catalogued curve named {name!r}")

    def cls(self, name: str) -> DivisorClass:
        return self.entry(name).cls

    @property
    def negative_entries(self) -> tuple[CurveEntry, ...]:
        """Catalogued rigid curves of negative self-intersection."""
        return tuple(e for e in self.entries
                     if e.kind != "pencil" and e.self_intersection < 0)


def _draw_general_point(rng: random.Random, lines) -> Point:
    while True:
        p = _pt(Fraction(rng.randint(-12, 12), rng.randint(1, 9)),
                Fraction(rng.randint(-12, 12), rng.randint(1, 9)), 1)
        if not any(_on_line(line, p) for line in lines):
            return p


def standard_quadrilateral(with_p7: bool = False,
                           with_general_point: bool = False,
                           seed: int = 0) -> PointConfiguration:
    """The quadrilateral P1P2P3P4 with its derived points, blown up.

    ``with_p7`` adds the diagonal intersection P7 = (1:2:1) as a seventh
    centre (the diagonals then become the strict transforms Delta2bar,
    Delta3bar).  ``with_general_point`` instead adds a seeded random point
    lying on none of the seven catalogued lines; the members of the conic
    pencils through it join the catalogue as rigid (-1)-conics.
    """
    if with_p7 and with_general_point:
        raise ValueError("choose at most one extra point")

    points = [_pt(1, 0, 0), _pt(0, 1, 0), _pt(0, 0, 1),
              _pt(1, 1, 1), _pt(1, 1, 0), _pt(0, 1, 1)]
    triples = {frozenset(t) for t in ((1, 2, 5), (3, 4, 5), (2, 3, 6), (1, 4, 6))}
    if with_p7:
        points.append(_pt(1, 2, 1))
        triples |= {frozenset((5, 6, 7)), frozenset((2, 4, 7))}
    if with_general_point:
        rng = random.Random(seed)
        points.append(_draw_general_point(rng, _LINE_COEFFS.values()))

    n = len(points)
    lat = BlowupLattice(n)
    entries: list[CurveEntry] = [
        CurveEntry(f"e{i}", lat.exceptional(i), "exceptional") for i in range(1, n + 1)
    ]
    for name, coeffs in _LINE_COEFFS.items():
        through = tuple(i for i in range(1, n + 1) if _on_line(coeffs, points[i - 1]))
        mults = tuple(1 if i in through else 0 for i in range(1, n + 1))
        label = name + "bar" if (with_p7 and 7 in through) else name
        entries.append(CurveEntry(label, DivisorClass(1, mults), "line", coeffs))
    for name, base in _PENCIL_BASE.items():
        mults = tuple(1 if i in base else 0 for i in range(1, n + 1))
        entries.append(CurveEntry(name, DivisorClass(2, mults), "pencil"))
        if with_general_point:
            strict = tuple(1 if i in base else 0 for i in range(1, 7)) + (1,)
            entries.append(CurveEntry(name + "_strict", DivisorClass(2, strict), "conic"))
    if with_p7:
        f2 = next(e for e in entries if e.name == "f2").cls
        f3 = next(e for e in entries if e.name == "f3").cls
        e7 = lat.exceptional(7)
        entries.append(CurveEntry("C", f2 + f3 - 2 * e7, "pencil"))

    return PointConfiguration(tuple(points), frozenset(triples), lat, tuple(entries),
                              has_p7=with_p7, has_general_point=with_general_point,
                              seed=seed if with_general_point else None)


# ---------------------------------------------------------------------------
# exact interpolation


def _monomials(degree: int) -> list[tuple[int, int, int]]:
    return [(a, b, degree - a - b)
            for a in range(degree, -1, -1)
            for b in range(degree - a, -1, -1)]


def _falling(k: int, j: int) -> int:
    out = 1
    for t in range(j):
        out *= k - t
    return out


def _derivative_value(exp, alpha, p: Point) -> Fraction:
    """d^alpha of x^a y^b z^c evaluated at p."""
    val = Fraction(1)
    for e, a, coord in zip(exp, alpha, p):
        if a > e:
            return Fraction(0)
        val *= _falling(e, a) * coord ** (e - a)
    return val


def rank_rational(rows) -> int:
    """Exact rank of a matrix given as an iterable of rational rows."""
    mat = [list(map(Fraction, r)) for r in rows]
    if not mat:
        return 0
    ncols = len(mat[0])
    rank = 0
    for col in range(ncols):
        piv = next((r for r in range(rank, len(mat)) if mat[r][col] != 0), None)
        if piv is None:
            continue
        mat[rank], mat[piv] = mat[piv], mat[rank]
        inv = 1 / mat[rank][col]
        mat[rank] = [v * inv for v in mat[rank]]
        for r in range(len(mat)):
            if r != rank and mat[r][col] != 0:
                f = mat[r][col]
                mat[r] = [v - f * w for v, w in zip(mat[r], mat[rank])]
        rank += 1
        if rank == len(mat):
            break
    return rank


def interpolation_dimension(points, degree: int, assignments) -> int:
    """h^0 of degree-``degree`` forms with multiplicity m_j at points[j].

    ``assignments`` is an iterable of (point index, multiplicity>=1); the
    multiplicity-m condition is imposed through the m(m+1)/2 partial
    derivatives of order m-1 (equivalent to all lower orders by Euler's
    relation).  A requested multiplicity above the degree forces h^0 = 0.
    """
    if degree < 0:
        raise ValueError("degree must be >= 0")
    assignments = list(assignments)
    if any(m > degree for _, m in assignments):
        return 0
    monos = _monomials(degree)
    rows = []
    for idx, m in assignments:
        if m < 1:
            raise ValueError("multiplicities must be >= 1")
        p = points[idx]
        for alpha in _monomials(m - 1):
            rows.append([_derivative_value(exp, alpha, p) for exp in monos])
    return len(monos) - rank_rational(rows)


@dataclass(frozen=True)
class FatPointSystem:
    """Plane curves of fixed degree with assigned point multiplicities."""

    degree: int
    assignments: tuple[tuple[int, int], ...]  # (0-based point index, mult>=1)

    def __post_init__(self):
        if self.degree < 0:
            raise ValueError("degree must be >= 0")
        idxs = [i for i, _ in self.assignments]
        if len(set(idxs)) != len(idxs):
            raise ValueError("duplicate point in assignments")
        if any(m < 1 for _, m in self.assignments):
            raise ValueError("multiplicities must be >= 1")

    @property
    def conditions(self) -> int:
        return sum(m * (m + 1) // 2 for _, m in self.assignments)

    @property
    def expected_dimension(self) -> int:
        full = (self.degree + 1) * (self.degree + 2) // 2
        return max(0, full - self.conditions)


def h0_fat_points(cfg: PointConfiguration, system: FatPointSystem) -> int:
    """Exact dimension of the system over the configuration's points."""
    for idx, _ in system.assignments:
        if not 0 <= idx < len(cfg.points):
            raise ValueError(f"point index {idx} out of range")
    return interpolation_dimension(cfg.points, system.degree, system.assignments)


def class_to_system(cfg: PointConfiguration, d: DivisorClass) -> FatPointSystem:
    """Translate a lattice class into the matching interpolation problem."""
    if d.n != cfg.lattice.n:
        raise ValueError("class does not live on the configuration's lattice")
    if any(m < 0 for m in d.mults):
        raise ValueError(
            "negative multiplicity; remove fixed parts before interpolating")
    return FatPointSystem(d.degree,
                          tuple((i, m) for i, m in enumerate(d.mults) if m >= 1))


def h0_class(cfg: PointConfiguration, d: DivisorClass,
             max_steps: int | None = None) -> int:
    """h^0 of a divisor class on the blowup.

    While some catalogued curve G with G^2 < 0 meets the class negatively,
    G is split off as a fixed part; the residue is then evaluated by exact
    interpolation.  Returns 0 as soon as the degree drops below zero.  The
    iteration is budgeted; exhausting the budget signals a catalogue gap.
    """
    if d.n != cfg.lattice.n:
        raise ValueError("class does not live on the configuration's lattice")
    budget = max_steps if max_steps is not None else (
        3 * max(d.degree, 0) + sum(abs(m) for m in d.mults) + 12)
    cur = d
    steps = 0
    while True:
        if cur.degree < 0:
            return 0
        fixed = next((e for e in cfg.negative_entries if e.cls.dot(cur) < 0), None)
        if fixed is None:
            break
        cur = cur - fixed.cls
        steps += 1
        if steps > budget:
            raise CatalogueGapError(
                f"fixed-part removal did not terminate for {d} within {budget} steps")
    return h0_fat_points(cfg, class_to_system(cfg, cur))


# ---------------------------------------------------------------------------
# effective decompositions


def _bounded_decompositions(pos_atoms, exc_atoms, target: DivisorClass,
                            cap: int | None):
    """All ways to write ``target`` as a non-negative combination of atoms.

    ``pos_atoms`` are (name, class) pairs of positive degree, ``exc_atoms``
    maps a 0-based point index to the name of the pure exceptional class
    available for it.  ``cap`` bounds the number of positive-degree
    components counted with multiplicity.  Returns (decompositions, capped)
    where ``capped`` reports whether the bound cut off any branch.
    """
    results = []
    capped = False

    def finish(rem: DivisorClass, chosen):
        if rem.degree != 0 or any(m > 0 for m in rem.mults):
            return
        tail = []
        for j, m in enumerate(rem.mults):
            if m < 0:
                name = exc_atoms.get(j)
                if name is None:
                    return
                tail.append((name, -m))
        results.append(tuple(sorted(chosen + tail)))

    def search(i: int, rem: DivisorClass, used: int, chosen):
        nonlocal capped
        if rem.degree == 0:
            finish(rem, chosen)
            return
        if i == len(pos_atoms):
            return
        name, cls = pos_atoms[i]
        top = rem.degree // cls.degree
        if cap is not None and used + top > cap:
            if top > cap - used:
                capped = True
            top = cap - used
        for c in range(top + 1):
            search(i + 1, rem - c * cls, used + c,
                   chosen + [(name, c)] if c else chosen)

    search(0, target, 0, [])
    return sorted(set(results)), capped


def effective_decompositions(cfg: PointConfiguration, d: DivisorClass,
                             max_components: int | None = None):
    """Every way to write ``d`` as a non-negative sum of catalogued classes.

    Returns a sorted list of multisets, each a tuple of (name, coefficient)
    pairs.  ``max_components`` bounds the number of positive-degree
    components used (default: the degree of ``d``, which is already
    exhaustive since every positive-degree atom has degree >= 1).
    """
    if d.n != cfg.lattice.n:
        raise ValueError("class does not live on the configuration's lattice")
    if max_components is not None and max_components < 1:
        raise ValueError("component bound must be >= 1")
    decs, _ = _decompositions_with_flag(cfg, d, max_components)
    return decs


def _decompositions_with_flag(cfg, d, max_components):
    pos = [(e.name, e.cls) for e in cfg.entries if e.cls.degree >= 1]
    pos.sort(key=lambda t: (-t[1].degree, t[0]))
    exc = {}
    for e in cfg.entries:
        if e.kind == "exceptional":
            # e_i has m_i = -1 at exactly one position
            j = next(k for k, m in enumerate(e.cls.mults) if m == -1)
            exc[j] = e.name
    cap = max_components if max_components is not None else max(d.degree, 0)
    return _bounded_decompositions(pos, exc, d, cap)


def sum_of_decomposition(cfg: PointConfiguration, decomposition) -> DivisorClass:
    """Re-sum a decomposition; used as the exactness oracle in tests."""
    total = cfg.lattice.zero
    for name, coeff in decomposition:
        total = total + coeff * cfg.cls(name)
    return total

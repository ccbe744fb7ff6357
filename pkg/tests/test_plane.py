import itertools
import random
from fractions import Fraction

import pytest

from bidouble.lattice import DivisorClass
from bidouble.plane import (CatalogueGapError, FatPointSystem, class_to_system,
                            collinear, det3, effective_decompositions,
                            h0_class, h0_fat_points, interpolation_dimension,
                            standard_quadrilateral, sum_of_decomposition)


def _cross(a, b):
    return (a[1] * b[2] - a[2] * b[1],
            a[2] * b[0] - a[0] * b[2],
            a[0] * b[1] - a[1] * b[0])


def _proportional(p, q):
    return _cross(p, q) == (0, 0, 0)


def test_standard_points():
    cfg = standard_quadrilateral(with_p7=True)
    # oracle: intersect the lines by cross products of their coefficients
    line = lambda p, q: _cross(p, q)
    p = cfg.points
    p5 = _cross(line(p[0], p[1]), line(p[2], p[3]))
    assert _proportional(p5, p[4])
    p6 = _cross(line(p[0], p[3]), line(p[1], p[2]))
    assert _proportional(p6, p[5])
    p7 = _cross(line(p[1], p[3]), line(p[4], p[5]))
    assert _proportional(p7, p[6])
    assert p[6] == (1, 2, 1)


def test_recorded_collinearities():
    cfg = standard_quadrilateral(with_p7=True)
    assert cfg.collinear_triples == {
        frozenset(t) for t in ((1, 2, 5), (3, 4, 5), (2, 3, 6), (1, 4, 6),
                               (5, 6, 7), (2, 4, 7))}
    for triple in cfg.collinear_triples:
        i, j, k = sorted(triple)
        assert collinear(cfg.point(i), cfg.point(j), cfg.point(k))
    # no unrecorded collinearity; in particular {1,3,7} is not collinear
    assert not collinear(cfg.point(1), cfg.point(3), cfg.point(7))
    for tri in itertools.combinations(range(1, 8), 3):
        if frozenset(tri) not in cfg.collinear_triples:
            assert det3(*(cfg.point(i) for i in tri)) != 0


def test_catalogue_classes():
    cfg = standard_quadrilateral()
    assert cfg.cls("S1") == DivisorClass(1, (1, 1, 0, 0, 1, 0))
    assert cfg.cls("Delta3") == DivisorClass(1, (0, 0, 0, 0, 1, 1))
    assert cfg.cls("f1") == DivisorClass(2, (0, 1, 0, 1, 1, 1))
    for name in ("S1", "S2", "S3", "S4"):
        s = cfg.cls(name)
        assert s.dot(s) == -2 and s.dot(cfg.lattice.canonical) == 0
    cfg7 = standard_quadrilateral(with_p7=True)
    assert cfg7.cls("Delta2bar") == DivisorClass(1, (0, 1, 0, 1, 0, 0, 1))
    assert cfg7.cls("C") == DivisorClass(4, (2, 1, 2, 1, 1, 1, 2))


def test_general_point_misses_catalogued_lines():
    for seed in (0, 1, 2, 34):
        cfg = standard_quadrilateral(with_general_point=True, seed=seed)
        p = cfg.points[-1]
        for e in cfg.entries:
            if e.line is not None:
                a, b, c = e.line
                assert a * p[0] + b * p[1] + c * p[2] != 0


def test_p7_and_general_point_exclusive():
    with pytest.raises(ValueError):
        standard_quadrilateral(with_p7=True, with_general_point=True)


def test_h0_no_assignments():
    cfg = standard_quadrilateral()
    for d in range(7):
        assert h0_fat_points(cfg, FatPointSystem(d, ())) == \
            (d + 1) * (d + 2) // 2


def test_h0_pinned_systems():
    cfg = standard_quadrilateral(with_p7=True)
    # a line through the three non-collinear points P1, P2, P3
    assert h0_fat_points(cfg, FatPointSystem(1, ((0, 1), (1, 1), (2, 1)))) == 0
    # conic through P2, double at P4, through P5, P6
    assert h0_fat_points(
        cfg, FatPointSystem(2, ((1, 1), (3, 2), (4, 1), (5, 1)))) == 0
    # quartic through P1, P3, P7 with double points at P2, P4, P5, P6
    assert h0_fat_points(
        cfg, FatPointSystem(4, ((0, 1), (2, 1), (6, 1), (1, 2), (3, 2),
                                (4, 2), (5, 2)))) == 0
    # quintics: simple at P1, P3, P7, double at P2, P4, P5, P6
    assert h0_fat_points(
        cfg, FatPointSystem(5, ((0, 1), (2, 1), (6, 1), (1, 2), (3, 2),
                                (4, 2), (5, 2)))) == 6


def test_h0_cubic_adjoint_vanishes():
    # cubic through P1..P4 with double points at P5, P6 (K+L2 of example 1)
    cfg = standard_quadrilateral()
    assert h0_fat_points(
        cfg, FatPointSystem(3, ((0, 1), (1, 1), (2, 1), (3, 1), (4, 2),
                                (5, 2)))) == 0


def test_h0_lower_bound_and_monotonicity():
    cfg = standard_quadrilateral(with_p7=True)
    rng = random.Random(5)
    for _ in range(40):
        d = rng.randint(0, 5)
        k = rng.randint(0, min(7, d + 2))
        pts = rng.sample(range(7), k)
        mults = [rng.randint(1, 2) for _ in pts]
        sys_ = FatPointSystem(d, tuple(zip(pts, mults)))
        h = h0_fat_points(cfg, sys_)
        assert h >= sys_.expected_dimension
        # adding one more condition never increases h0
        free = [i for i in range(7) if i not in pts]
        if free:
            bigger = FatPointSystem(d, sys_.assignments + ((free[0], 1),))
            assert h0_fat_points(cfg, bigger) <= h


def test_h0_multiplicity_exceeding_degree():
    cfg = standard_quadrilateral()
    assert h0_fat_points(cfg, FatPointSystem(1, ((0, 2),))) == 0
    assert h0_fat_points(cfg, FatPointSystem(0, ((0, 2),))) == 0
    # degree = multiplicity is fine: conics singular at a point = line pairs
    assert h0_fat_points(cfg, FatPointSystem(2, ((0, 2),))) == 3


def test_general_position_stability():
    # the same systems over independently drawn general points
    values = []
    for seed in (3, 14, 15):
        cfg = standard_quadrilateral(with_general_point=True, seed=seed)
        vals = (
            h0_fat_points(cfg, FatPointSystem(3, ((6, 1), (0, 1), (1, 1)))),
            h0_fat_points(cfg, FatPointSystem(4, ((6, 2), (1, 2), (3, 1)))),
            h0_fat_points(cfg, FatPointSystem(5, tuple((i, 2) for i in range(5)))),
        )
        values.append(vals)
    assert values[0] == values[1] == values[2]


def test_class_to_system():
    cfg = standard_quadrilateral()
    sys_ = class_to_system(cfg, DivisorClass(2, (1, 0, 1, 0, 1, 1)))
    assert sys_.degree == 2
    assert sys_.assignments == ((0, 1), (2, 1), (4, 1), (5, 1))
    minus_k = -1 * cfg.lattice.canonical
    assert class_to_system(cfg, minus_k).assignments == \
        tuple((i, 1) for i in range(6))
    with pytest.raises(ValueError):
        class_to_system(cfg, DivisorClass(2, (0, 0, 0, -1, 0, 0)))


def test_h0_class_fixed_parts():
    cfg = standard_quadrilateral(with_p7=True)
    k = cfg.lattice.canonical
    # the rigid class e4 + Delta2bar + S1 + S2 + S3 + S4
    rigid = DivisorClass(5, (2, 3, 2, 2, 2, 2, 1))
    assert h0_class(cfg, rigid) == 1
    assert h0_class(cfg, -1 * k + cfg.cls("f1")) == 6
    m = 2 * k + DivisorClass(16, (5, 7, 5, 7, 6, 6, 4))  # 2K + D of example 2
    assert m == DivisorClass(10, (3, 5, 3, 5, 4, 4, 2))
    l2 = DivisorClass(7, (2, 3, 2, 3, 3, 3, 2))
    l3 = DivisorClass(4, (2, 2, 2, 1, 1, 1, 1))
    assert h0_class(cfg, m - l2) == 0
    assert h0_class(cfg, m - l3) == 0
    # negative degree after removal
    assert h0_class(cfg, DivisorClass(-1, (0,) * 7)) == 0


def test_h0_class_negative_multiplicity_cleanup():
    # m7 = -1 forces subtracting e7 before interpolating
    cfg = standard_quadrilateral(with_p7=True)
    d = DivisorClass(2, (1, 1, 1, 1, 1, 1, -1))
    assert h0_class(cfg, d) == 0


def test_h0_class_budget_guard():
    cfg = standard_quadrilateral()
    with pytest.raises(CatalogueGapError):
        h0_class(cfg, DivisorClass(9, (4, 4, 4, 4, 4, 4)), max_steps=1)


def test_effective_decompositions_f1():
    cfg = standard_quadrilateral()
    decs = effective_decompositions(cfg, cfg.cls("f1"))
    assert decs == [
        (("Delta2", 1), ("Delta3", 1)),
        (("S1", 1), ("S4", 1), ("e1", 2)),
        (("S2", 1), ("S3", 1), ("e3", 2)),
        (("f1", 1),),
    ]
    for dec in decs:
        assert sum_of_decomposition(cfg, dec) == cfg.cls("f1")


def test_effective_decompositions_p7():
    cfg = standard_quadrilateral(with_p7=True)
    decs = effective_decompositions(cfg, cfg.cls("f1"))
    assert (("Delta2bar", 1), ("Delta3bar", 1), ("e7", 2)) in decs
    assert len(decs) == 4
    for dec in decs:
        assert sum_of_decomposition(cfg, dec) == cfg.cls("f1")


def test_effective_decompositions_rigid():
    cfg = standard_quadrilateral(with_p7=True)
    rigid = DivisorClass(5, (2, 3, 2, 2, 2, 2, 1))
    decs = effective_decompositions(cfg, rigid)
    assert decs == [(("Delta2bar", 1), ("S1", 1), ("S2", 1), ("S3", 1),
                     ("S4", 1), ("e4", 1))]


def test_effective_decompositions_exceptional():
    cfg = standard_quadrilateral()
    decs = effective_decompositions(cfg, cfg.lattice.exceptional(1))
    assert decs == [(("e1", 1),)]


def test_interpolation_dimension_standalone():
    # raw-point interface used by the random suites
    pts = [(Fraction(1), Fraction(0), Fraction(0)),
           (Fraction(0), Fraction(1), Fraction(0)),
           (Fraction(0), Fraction(0), Fraction(1))]
    assert interpolation_dimension(pts, 1, [(0, 1), (1, 1), (2, 1)]) == 0
    assert interpolation_dimension(pts, 2, [(0, 1), (1, 1), (2, 1)]) == 3

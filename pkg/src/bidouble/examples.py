"""The three bidouble-cover constructions over the quadrilateral.

* ``example1`` lives on the 6-point blowup: the branch uses a diagonal, one
  general member of each conic pencil (two of |f1|) and the four sides;
  the minimal model has K^2 = 7 and a genus-3 pencil with 5 double fibres.
  With ``degenerating=True`` the three pencil members are marked to pass
  through a common general point, ready for :func:`covers.resolve_111`,
  after which K^2 drops to 6 and one double fibre is lost.

* ``example2`` and ``example3`` live on the 7-point blowup at the diagonal
  point P7; both minimal models have K^2 = 6 and 5 double fibres.  The
  L-classes of example 3 are not part of its classical description, so they
  are derived as the exact halves of D2+D3 and D1+D3 (unique, the lattice
  being torsion free).
"""

from __future__ import annotations

from .covers import BidoubleData, BranchComponent
from .lattice import DivisorClass
from .plane import PointConfiguration, standard_quadrilateral

__all__ = ["example1", "example2", "example3", "halve"]


def halve(cls: DivisorClass) -> DivisorClass:
    """The unique half of a 2-divisible class."""
    if cls.degree % 2 or any(m % 2 for m in cls.mults):
        raise ValueError(f"{cls} is not divisible by 2")
    return DivisorClass(cls.degree // 2, tuple(m // 2 for m in cls.mults))


def _component(cfg, name, branch, *, catalogue_name=None, through=False):
    return BranchComponent(name, cfg.cls(catalogue_name or name), branch,
                           through_point=through)


def example1(cfg: PointConfiguration | None = None,
             degenerating: bool = False) -> BidoubleData:
    """Branch data D1 = Delta1 + f2 + S1 + S2, D2 = Delta2 + f3,
    D3 = Delta3 + f1 + f1' + S3 + S4 on the 6-point blowup."""
    if cfg is None:
        cfg = standard_quadrilateral()
    if cfg.has_p7 or cfg.has_general_point:
        raise ValueError("example 1 lives on the plain 6-point configuration")
    comps = (
        _component(cfg, "Delta1", 1),
        _component(cfg, "f2", 1, through=degenerating),
        _component(cfg, "S1", 1),
        _component(cfg, "S2", 1),
        _component(cfg, "Delta2", 2),
        _component(cfg, "f3", 2, through=degenerating),
        _component(cfg, "Delta3", 3),
        _component(cfg, "f1", 3, through=degenerating),
        _component(cfg, "f1p", 3, catalogue_name="f1"),
        _component(cfg, "S3", 3),
        _component(cfg, "S4", 3),
    )
    return BidoubleData(
        cfg.lattice, comps,
        L1=DivisorClass(5, (1, 2, 1, 3, 2, 2)),
        L2=DivisorClass(6, (2, 2, 2, 2, 3, 3)),
    )


def example2(cfg: PointConfiguration | None = None) -> BidoubleData:
    """Branch data D1 = C + S1 + S2, D2 = f3,
    D3 = f1 + f1' + Delta2bar + Delta3bar + S3 + S4 on the 7-point blowup."""
    if cfg is None:
        cfg = standard_quadrilateral(with_p7=True)
    if not cfg.has_p7:
        raise ValueError("example 2 needs the P7 configuration")
    comps = (
        _component(cfg, "C", 1),
        _component(cfg, "S1", 1),
        _component(cfg, "S2", 1),
        _component(cfg, "f3", 2),
        _component(cfg, "f1", 3),
        _component(cfg, "f1p", 3, catalogue_name="f1"),
        _component(cfg, "Delta2bar", 3),
        _component(cfg, "Delta3bar", 3),
        _component(cfg, "S3", 3),
        _component(cfg, "S4", 3),
    )
    return BidoubleData(
        cfg.lattice, comps,
        L1=DivisorClass(5, (1, 2, 1, 3, 2, 2, 1)),
        L2=DivisorClass(7, (2, 3, 2, 3, 3, 3, 2)),
    )


def example3(cfg: PointConfiguration | None = None) -> BidoubleData:
    """Branch data D1 = C + Delta2bar + S1 + S2, D2 = Delta1 + e7,
    D3 = f1 + f1' + Delta3bar + S3 + S4; L1, L2 derived by exact halving."""
    if cfg is None:
        cfg = standard_quadrilateral(with_p7=True)
    if not cfg.has_p7:
        raise ValueError("example 3 needs the P7 configuration")
    comps = (
        _component(cfg, "C", 1),
        _component(cfg, "Delta2bar", 1),
        _component(cfg, "S1", 1),
        _component(cfg, "S2", 1),
        _component(cfg, "Delta1", 2),
        _component(cfg, "e7", 2),
        _component(cfg, "f1", 3),
        _component(cfg, "f1p", 3, catalogue_name="f1"),
        _component(cfg, "Delta3bar", 3),
        _component(cfg, "S3", 3),
        _component(cfg, "S4", 3),
    )
    d = {i: sum((c.cls for c in comps if c.branch == i), cfg.lattice.zero)
         for i in (1, 2, 3)}
    return BidoubleData(
        cfg.lattice, comps,
        L1=halve(d[2] + d[3]),
        L2=halve(d[1] + d[3]),
        l_provenance="derived",
    )

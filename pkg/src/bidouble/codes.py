"""Binary codes attached to disjoint nodal classes in a blowup lattice.

Given pairwise-orthogonal classes C_1, ..., C_k of self-intersection -2,
the code V is the kernel of the F_2-linear map sending (x_1, ..., x_k) to
sum x_i [C_i] in Pic/2Pic.  Since the mod-2 intersection form vanishes on
the image, that image is totally isotropic, which bounds its dimension by
half the lattice rank; on the geometric fixtures the weights of V are all
divisible by 4.

``de_code(s)`` builds the doubly-even code DE(s): the even-weight code of
length s pushed through the coordinate-doubling injection
(x_1, ..., x_s) -> (x_1, x_1, ..., x_s, x_s).
"""

from __future__ import annotations

import random
from collections import Counter

import numpy as np

from .lattice import BlowupLattice

__all__ = [
    "NodalInputError",
    "EnumerationCapError",
    "BinaryCode",
    "code_of_classes",
    "weights",
    "is_doubly_even",
    "de_code",
    "isotropy_bound",
    "isotropy_bound_holds",
]

ENUMERATION_CAP = 20  # 2^20 ~ 1e6 elements


class NodalInputError(ValueError):
    """The input classes are not pairwise disjoint (-2)-classes."""


class EnumerationCapError(ValueError):
    """The code is too large to enumerate exactly."""


def _rref2(rows: np.ndarray) -> np.ndarray:
    """Reduced row-echelon form over F_2, zero rows dropped."""
    mat = (np.array(rows, dtype=np.uint8) % 2).reshape(len(rows), -1).copy()
    nrows, ncols = mat.shape
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if mat[i, c]), None)
        if piv is None:
            continue
        mat[[r, piv]] = mat[[piv, r]]
        for i in range(nrows):
            if i != r and mat[i, c]:
                mat[i] ^= mat[r]
        r += 1
        if r == nrows:
            break
    return mat[:r]


def _kernel2(mat: np.ndarray) -> np.ndarray:
    """Basis of the right kernel of ``mat`` over F_2 (rows of length k)."""
    mat = np.array(mat, dtype=np.uint8) % 2
    nrows, ncols = mat.shape
    red = _rref2(mat) if nrows else np.zeros((0, ncols), dtype=np.uint8)
    pivots = []
    r = 0
    for c in range(ncols):
        if r < len(red) and red[r, c]:
            pivots.append(c)
            r += 1
    free = [c for c in range(ncols) if c not in pivots]
    basis = np.zeros((len(free), ncols), dtype=np.uint8)
    for row, f in enumerate(free):
        basis[row, f] = 1
        for i, p in enumerate(pivots):
            basis[row, p] = red[i, f]
    return basis


class BinaryCode:
    """A subspace of F_2^k, stored by a reduced row-echelon generator matrix.

    >>> BinaryCode(4, [[1, 1, 1, 1]]).dim
    1
    """

    def __init__(self, length: int, generators=()):
        self.length = int(length)
        rows = list(generators)
        if rows:
            gens = np.array(rows, dtype=np.uint8).reshape(len(rows), length) % 2
            self.generators = _rref2(gens)
        else:
            self.generators = np.zeros((0, length), dtype=np.uint8)

    @property
    def dim(self) -> int:
        return len(self.generators)

    @property
    def support(self) -> tuple[int, ...]:
        """Coordinates appearing in some codeword (0-based).

        A coordinate appears iff some generator is nonzero there, the code
        being closed under addition.
        """
        if self.dim == 0:
            return ()
        return tuple(int(j) for j in np.flatnonzero(self.generators.any(axis=0)))

    @property
    def appearing(self) -> int:
        """Number of coordinates appearing in the code."""
        return len(self.support)

    def elements(self):
        """Iterate over all 2^dim code words (no cap check here)."""
        for mask in range(1 << self.dim):
            v = np.zeros(self.length, dtype=np.uint8)
            for i in range(self.dim):
                if mask >> i & 1:
                    v ^= self.generators[i]
            yield v

    def contains(self, vec) -> bool:
        v = np.array(vec, dtype=np.uint8) % 2
        stacked = np.vstack([self.generators, v]) if self.dim else v.reshape(1, -1)
        return len(_rref2(stacked)) == self.dim

    def to_rows(self) -> list[list[int]]:
        return [[int(b) for b in row] for row in self.generators]

    def __eq__(self, other) -> bool:
        return (isinstance(other, BinaryCode) and self.length == other.length
                and np.array_equal(self.generators, other.generators))

    def __repr__(self) -> str:
        return f"BinaryCode(length={self.length}, dim={self.dim})"


def _check_nodal(classes, lat: BlowupLattice) -> None:
    for c in classes:
        if c.n != lat.n:
            raise NodalInputError("class does not live on the given lattice")
        if c.dot(c) != -2:
            raise NodalInputError(f"{c} has self-intersection {c.dot(c)}, not -2")
    for i, a in enumerate(classes):
        for b in classes[i + 1:]:
            if a.dot(b) != 0:
                raise NodalInputError(f"{a} and {b} are not disjoint")


def code_of_classes(classes, lat: BlowupLattice) -> BinaryCode:
    """Kernel of (x_1..x_k) -> sum x_i [C_i] in Pic/2Pic.

    Rejects inputs that are not pairwise-disjoint (-2)-classes.
    """
    classes = list(classes)
    _check_nodal(classes, lat)
    k = len(classes)
    if k == 0:
        return BinaryCode(0)
    mat = np.array([c.mod2() for c in classes], dtype=np.uint8).T  # (1+n) x k
    return BinaryCode(k, _kernel2(mat))


def weights(code: BinaryCode, cap: int = ENUMERATION_CAP,
            sample: int = 1024) -> Counter:
    """Multiset of codeword weights.

    Exhaustive for dim <= cap; beyond the cap a deterministic random sample
    of codewords is weighed instead (the result is then only indicative).
    """
    if code.dim <= cap:
        return Counter(int(v.sum()) for v in code.elements())
    rng = random.Random(0)
    out = Counter()
    for _ in range(sample):
        v = np.zeros(code.length, dtype=np.uint8)
        for g in code.generators:
            if rng.getrandbits(1):
                v ^= g
        out[int(v.sum())] += 1
    return out


def is_doubly_even(code: BinaryCode, cap: int = ENUMERATION_CAP) -> bool:
    """True iff every codeword weight is divisible by 4 (exhaustive check)."""
    if code.dim > cap:
        raise EnumerationCapError(
            f"dim {code.dim} exceeds the enumeration cap {cap}")
    return all(int(v.sum()) % 4 == 0 for v in code.elements())


def de_code(s: int) -> BinaryCode:
    """The doubly-even code DE(s) of length 2s and dimension s-1.

    >>> sorted(int(v.sum()) for v in de_code(2).elements())
    [0, 4]
    """
    if s < 1:
        raise ValueError("s must be >= 1")
    gens = []
    for i in range(s - 1):
        row = [0] * (2 * s)
        row[2 * i] = row[2 * i + 1] = 1
        row[2 * i + 2] = row[2 * i + 3] = 1
        gens.append(row)
    return BinaryCode(2 * s, gens)


def isotropy_bound(code: BinaryCode, picard_rank: int):
    """Two sides of 2*dim(image) <= picard_rank, plus whether it holds.

    For a code of length k, dim(image) = k - dim(kernel); this is the
    total-isotropy bound for the mod-2 intersection form.
    """
    lhs = 2 * (code.length - code.dim)
    return lhs, picard_rank, lhs <= picard_rank


def isotropy_bound_holds(classes, lat: BlowupLattice):
    """Isotropy bound for the code of the given nodal classes."""
    code = code_of_classes(classes, lat)
    return isotropy_bound(code, lat.rank)

import random

import numpy as np
import pytest

from bidouble.codes import (BinaryCode, EnumerationCapError, NodalInputError,
                            code_of_classes, de_code, is_doubly_even,
                            isotropy_bound, isotropy_bound_holds, weights)
from bidouble.lattice import BlowupLattice, DivisorClass
from bidouble.scenarios import data_path, load_document

LAT6 = BlowupLattice(6)
SIDES = [DivisorClass(1, (1, 1, 0, 0, 1, 0)),
         DivisorClass(1, (0, 1, 1, 0, 0, 1)),
         DivisorClass(1, (0, 0, 1, 1, 1, 0)),
         DivisorClass(1, (1, 0, 0, 1, 0, 1))]


def _load_fixture(name):
    doc = load_document(data_path(name))
    lat = BlowupLattice(doc["lattice_n"])
    return lat, [lat.from_vector(v) for v in doc["classes"]]


def test_sides_code():
    # S1+S2+S3+S4 = 4l - 2(e1+...+e6) is divisible by 2
    v = code_of_classes(SIDES, LAT6)
    assert v.to_rows() == [[1, 1, 1, 1]]
    assert sorted(weights(v).items()) == [(0, 1), (4, 1)]
    assert is_doubly_even(v)
    assert v.appearing == 4
    # in the rank-7 lattice the isotropy bound reads 2*3 <= 7
    assert isotropy_bound_holds(SIDES, LAT6) == (6, 7, True)
    assert isotropy_bound_holds([], LAT6) == (0, 7, True)


def test_single_and_empty():
    v = code_of_classes([SIDES[0]], LAT6)
    assert v.dim == 0
    v = code_of_classes([], LAT6)
    assert v.dim == 0 and v.length == 0


def test_nodal_validation():
    with pytest.raises(NodalInputError):
        code_of_classes([DivisorClass(1, (1, 1, 0, 0, 0, 0))], LAT6)  # square -1
    with pytest.raises(NodalInputError):
        code_of_classes([SIDES[0], DivisorClass(1, (1, 1, 0, 0, 0, 1))], LAT6)
    with pytest.raises(NodalInputError):
        code_of_classes([DivisorClass(1, (1, 1, 0, 0, 1, 0, 0))], LAT6)


def test_kernel_image_dimensions():
    lat, classes = _load_fixture("nodal10_rank14.json")
    rng = random.Random(23)
    for _ in range(30):
        k = rng.randint(1, len(classes))
        subset = rng.sample(classes, k)
        v = code_of_classes(subset, lat)
        mat = np.array([c.mod2() for c in subset], dtype=np.uint8).reshape(k, -1)
        # exact F2 rank oracle: brute enumeration of the row span
        span = {(0,) * lat.rank}
        for row in mat:
            span |= {tuple((np.array(s, dtype=np.uint8) ^ row).tolist())
                     for s in span}
        exact_im = len(span).bit_length() - 1
        assert v.dim + exact_im == k


def test_kernel_matches_brute_force():
    # independent oracle: enumerate all 2^10 subsets and keep those whose
    # class sum is divisible by 2
    lat, classes = _load_fixture("nodal10_rank14.json")
    v = code_of_classes(classes, lat)
    brute = []
    for mask in range(1 << len(classes)):
        total = lat.zero
        for i, c in enumerate(classes):
            if mask >> i & 1:
                total = total + c
        if all(x % 2 == 0 for x in total.to_vector()):
            brute.append(tuple(mask >> i & 1 for i in range(len(classes))))
    members = sorted(tuple(int(b) for b in w) for w in v.elements())
    assert sorted(brute) == members


def test_code_closed_under_addition():
    lat, classes = _load_fixture("nodal10_rank14.json")
    v = code_of_classes(classes, lat)
    members = [tuple(int(x) for x in w) for w in v.elements()]
    mset = set(members)
    for a in members:
        for b in members:
            assert tuple(x ^ y for x, y in zip(a, b)) in mset


def test_ten_nodal_fixture():
    lat, classes = _load_fixture("nodal10_rank14.json")
    assert lat.rank == 14 and len(classes) == 10
    v = code_of_classes(classes, lat)
    assert v.dim == 3
    assert sorted(weights(v).items()) == [(0, 1), (4, 6), (8, 1)]
    assert is_doubly_even(v)
    assert isotropy_bound_holds(classes, lat) == (14, 14, True)
    # two of the ten classes never appear in a kernel relation
    assert v.appearing == 8


def test_hamming_shaped_code_is_representable():
    # dim 3 with 7 appearing coordinates, all nonzero weights 4: the type
    # carries this configuration even though no geometry below produces it
    v = BinaryCode(10, [[1, 0, 0, 1, 0, 1, 1, 0, 0, 0],
                        [0, 1, 0, 1, 1, 0, 1, 0, 0, 0],
                        [0, 0, 1, 1, 1, 1, 0, 0, 0, 0]])
    assert v.dim == 3 and v.appearing == 7
    assert sorted(weights(v).items()) == [(0, 1), (4, 7)]
    assert is_doubly_even(v)


def test_geometric_fixtures_doubly_even():
    for name in ("nodal_sides.json", "nodal10_rank14.json"):
        lat, classes = _load_fixture(name)
        v = code_of_classes(classes, lat)
        assert is_doubly_even(v)
        assert isotropy_bound_holds(classes, lat)[2]


def test_synthetic_isotropy_violation():
    # ten independent mod-2 images cannot fit isotropically in rank 14
    code = BinaryCode(10)
    assert isotropy_bound(code, 14) == (20, 14, False)


def test_de_code():
    assert de_code(1).dim == 0 and de_code(1).length == 2
    v2 = de_code(2)
    assert sorted(tuple(int(b) for b in w) for w in v2.elements()) == \
        [(0, 0, 0, 0), (1, 1, 1, 1)]
    v5 = de_code(5)
    assert v5.dim == 4 and v5.length == 10
    assert set(weights(v5)) <= {0, 4, 8}
    with pytest.raises(ValueError):
        de_code(0)


def test_de_codes_doubly_even():
    for s in range(1, 9):
        v = de_code(s)
        assert v.dim == s - 1
        assert is_doubly_even(v)


def test_not_doubly_even():
    v = BinaryCode(4, [[1, 1, 0, 0]])
    assert not is_doubly_even(v)
    assert 2 in weights(v)


def test_enumeration_cap():
    big = BinaryCode(22, np.eye(21, 22, dtype=np.uint8))
    assert big.dim == 21
    with pytest.raises(EnumerationCapError):
        is_doubly_even(big)
    sampled = weights(big)  # indicative sample, still a Counter
    assert sum(sampled.values()) == 1024


def test_contains_and_eq():
    v = de_code(3)
    for w in v.elements():
        assert v.contains(w)
    assert not v.contains([1, 0, 0, 0, 0, 0])
    assert v == BinaryCode(6, [[1, 1, 1, 1, 0, 0], [1, 1, 0, 0, 1, 1]])

import random
from fractions import Fraction

import pytest

from dgquiver.elements import PathElement, Potential, basis_paths
from dgquiver.errors import GradingError, QuiverMismatchError, StructureError
from dgquiver.quiver import GradedQuiver, Quiver


@pytest.fixture
def ex23():
    Q = Quiver.build([1, 2], [("alpha", 1, 2), ("beta", 2, 1)])
    return GradedQuiver.zero_graded(Q)


def rand_element(gq, paths, rng, size=3):
    terms = {}
    for _ in range(size):
        terms[rng.choice(paths)] = Fraction(rng.randint(-4, 4), rng.randint(1, 3))
    return PathElement(gq, terms)


def test_add_examples(ex23):
    a = PathElement.of_path(ex23, ex23.word("alpha"), 2)
    b = PathElement.of_path(ex23, ex23.word("alpha"), 3)
    assert (a + b).coeff(ex23.word("alpha")) == 5
    x = rand_element(ex23, basis_paths(ex23, 3), random.Random(1))
    assert (x + x.scale(-1)).is_zero
    ab = PathElement.of_path(ex23, ex23.word("alpha")) + PathElement.of_path(
        ex23, ex23.word("beta"))
    assert len(ab.support()) == 2


def test_mul_examples(ex23):
    a = PathElement.of_path(ex23, ex23.word("alpha"))
    b = PathElement.of_path(ex23, ex23.word("beta"))
    assert (a * b).support() == [ex23.word("alpha", "beta")]
    assert (a * a).is_zero
    unit = PathElement.unit(ex23)
    x = rand_element(ex23, basis_paths(ex23, 3), random.Random(2))
    assert unit * x == x and x * unit == x


def test_ring_axioms_random(ex23):
    rng = random.Random(3)
    paths = basis_paths(ex23, 3)
    for _ in range(60):
        x, y, z = (rand_element(ex23, paths, rng) for _ in range(3))
        assert (x * y) * z == x * (y * z)
        assert x * (y + z) == x * y + x * z
        assert (x + y) * z == x * z + y * z


def test_quiver_mismatch(ex23):
    other = GradedQuiver.zero_graded(Quiver.build([1], [("a", 1, 1)]))
    with pytest.raises(QuiverMismatchError):
        PathElement.unit(ex23) + PathElement.unit(other)


def test_homogeneous_component():
    Q = Quiver.build([1, 2], [("alpha", 1, 2), ("beta", 2, 1), ("gamma", 2, 2)])
    gq = GradedQuiver.build(Q, {0: 0, 1: 0, 2: -1})
    x = (PathElement.of_path(gq, gq.word("alpha", "beta"))
         + PathElement.of_path(gq, gq.word("gamma")))
    assert x.homogeneous_component(0).support() == [gq.word("alpha", "beta")]
    assert x.homogeneous_component(-1).support() == [gq.word("gamma")]
    assert PathElement.zero(gq).homogeneous_component(5).is_zero
    h = PathElement.of_path(gq, gq.word("gamma"))
    assert h.homogeneous_component(-1) == h
    assert h.homogeneous_component(0).is_zero
    with pytest.raises(GradingError):
        x.homogeneous_component(0, weight=1)


def test_mul_degree_and_weight_additive():
    Q = Quiver.build([1], [("a", 1, 1), ("b", 1, 1)])
    gq = GradedQuiver.build(Q, {0: -1, 1: 0}, {0: 2, 1: 1})
    rng = random.Random(4)
    paths = basis_paths(gq, 3)
    for _ in range(40):
        p, q = rng.choice(paths), rng.choice(paths)
        x = PathElement.of_path(gq, p)
        y = PathElement.of_path(gq, q)
        xy = x * y
        if xy.is_zero:
            continue
        (r,) = xy.support()
        assert gq.path_degree(r) == gq.path_degree(p) + gq.path_degree(q)
        assert gq.path_weight(r) == gq.path_weight(p) + gq.path_weight(q)


def test_basis_paths_examples(ex23):
    got = basis_paths(ex23, 2)
    expect = [ex23.trivial(1), ex23.trivial(2), ex23.word("alpha"), ex23.word("beta"),
              ex23.word("alpha", "beta"), ex23.word("beta", "alpha")]
    assert got == expect
    assert basis_paths(ex23, 0) == [ex23.trivial(1), ex23.trivial(2)]

    loop = GradedQuiver.zero_graded(Quiver.build([1], [("a", 1, 1)]))
    assert len(basis_paths(loop, 3)) == 4


@pytest.mark.parametrize("n,L", [(2, 4), (3, 3)])
def test_basis_paths_count_n_loops(n, L):
    Q = Quiver.build([1], [(f"a{i}", 1, 1) for i in range(n)])
    gq = GradedQuiver.zero_graded(Q)
    assert len(basis_paths(gq, L)) == (n ** (L + 1) - 1) // (n - 1)


def test_basis_paths_filters():
    Q = Quiver.build([1, 2], [("alpha", 1, 2), ("beta", 2, 1)])
    gq = GradedQuiver.build(Q, {0: 0, 1: 0}, {0: 1, 1: 1})
    assert all(p.source == 1 for p in basis_paths(gq, 3, source=1))
    assert all(gq.path_weight(p) == 2 for p in basis_paths(gq, 3, weight=2))


def test_potential_validation(ex23):
    with pytest.raises(StructureError):
        Potential(ex23, {ex23.word("alpha"): Fraction(1)})  # not a cycle
    with pytest.raises(StructureError):
        Potential(ex23, {ex23.trivial(1): Fraction(1)})
    W = Potential(ex23, {ex23.word("alpha", "beta"): Fraction(1)})
    assert W.cycle_length() == 2

from fractions import Fraction
from math import factorial

import pytest

from schurkit import ConjugacyClass, YoungDiagram, character, dimension, partitions_of, z_order
from schurkit.characters import _character_rec

# Rows are shapes, columns are classes in the listed order.  Both tables are
# the classic ones; the entries can be rechecked by hand from fixed points
# and signs.
N3_CLASSES = [{1: 3}, {1: 1, 2: 1}, {3: 1}]
N3_TABLE = {
    (3,): [1, 1, 1],
    (2, 1): [2, 0, -1],
    (1, 1, 1): [1, -1, 1],
}

N4_CLASSES = [{1: 4}, {1: 2, 2: 1}, {2: 2}, {1: 1, 3: 1}, {4: 1}]
N4_TABLE = {
    (4,): [1, 1, 1, 1, 1],
    (3, 1): [3, 1, -1, 0, -1],
    (2, 2): [2, 0, 2, -1, 0],
    (2, 1, 1): [3, -1, -1, 0, 1],
    (1, 1, 1, 1): [1, -1, 1, 1, -1],
}


def classes_of(n):
    return [d.conjugacy_class() for d in partitions_of(n)]


class TestZOrder:
    def test_examples(self):
        assert z_order(ConjugacyClass({})) == 1
        assert z_order(ConjugacyClass({1: 3})) == 6
        assert z_order(ConjugacyClass({2: 2})) == 8
        assert z_order(ConjugacyClass({1: 1, 2: 1, 3: 1})) == 6

    def test_sums_to_group_order(self):
        for n in range(9):
            total = sum(
                Fraction(factorial(n), z_order(cc)) for cc in classes_of(n)
            )
            assert total == factorial(n)


class TestKnownTables:
    @pytest.mark.parametrize("shape,row", N3_TABLE.items())
    def test_n3(self, shape, row):
        lam = YoungDiagram(shape)
        got = [character(lam, ConjugacyClass(c)) for c in N3_CLASSES]
        assert got == row

    @pytest.mark.parametrize("shape,row", N4_TABLE.items())
    def test_n4(self, shape, row):
        lam = YoungDiagram(shape)
        got = [character(lam, ConjugacyClass(c)) for c in N4_CLASSES]
        assert got == row

    def test_empty_shape(self):
        assert character(YoungDiagram(()), ConjugacyClass({})) == 1

    def test_sign_of_a_transposition(self):
        assert character(YoungDiagram((1, 1)), ConjugacyClass({2: 1})) == -1

    def test_trivial_shape_is_constantly_one(self):
        for n in range(1, 7):
            lam = YoungDiagram((n,))
            assert all(character(lam, cc) == 1 for cc in classes_of(n))

    def test_sign_shape_is_parity(self):
        for n in range(1, 7):
            lam = YoungDiagram((1,) * n)
            for cc in classes_of(n):
                length = sum(cc.multiplicities.values())
                assert character(lam, cc) == (-1) ** (n - length)

    def test_weight_mismatch_rejected(self):
        with pytest.raises(ValueError):
            character(YoungDiagram((2, 1)), ConjugacyClass({2: 1}))


class TestOrthogonality:
    def test_rows(self):
        """Sum over classes of chi(lam) chi(rho) / z equals [lam == rho]."""
        for n in range(7):
            shapes = list(partitions_of(n))
            classes = classes_of(n)
            table = {
                s: [character(s, cc) for cc in classes] for s in shapes
            }
            for a in shapes:
                for b in shapes:
                    total = sum(
                        Fraction(x * y, z_order(cc))
                        for x, y, cc in zip(table[a], table[b], classes)
                    )
                    assert total == (1 if a == b else 0)

    def test_columns(self):
        """Sum over shapes of chi(mu) chi(nu) equals z(mu) [mu == nu]."""
        for n in range(7):
            shapes = list(partitions_of(n))
            classes = classes_of(n)
            table = {
                s: [character(s, cc) for cc in classes] for s in shapes
            }
            for i, mu in enumerate(classes):
                for j, nu in enumerate(classes):
                    total = sum(table[s][i] * table[s][j] for s in shapes)
                    assert total == (z_order(mu) if i == j else 0)


class TestStructure:
    def test_transpose_twist(self):
        """chi of the transpose is the sign twist, for n <= 8."""
        for n in range(9):
            for lam in partitions_of(n):
                flipped = lam.transpose()
                for cc in classes_of(n):
                    length = sum(cc.multiplicities.values())
                    sign = (-1) ** (n - length)
                    assert character(flipped, cc) == sign * character(lam, cc)

    def test_cycle_order_irrelevant(self):
        """The recursion gives one value no matter how cycles are fed in."""
        for n in range(8):
            for lam in partitions_of(n):
                for cc in classes_of(n):
                    descending = cc.cycles()
                    ascending = tuple(sorted(descending))
                    assert _character_rec(lam.parts, ascending) == _character_rec(
                        lam.parts, descending
                    )


class TestDimension:
    @pytest.mark.parametrize(
        "shape,expected",
        [((), 1), ((5,), 1), ((1, 1, 1, 1), 1), ((2, 1), 2), ((2, 2), 2), ((3, 1), 3), ((4, 2), 9), ((3, 2, 1), 16)],
    )
    def test_hook_values(self, shape, expected):
        assert dimension(YoungDiagram(shape)) == expected

    def test_matches_identity_character(self):
        for n in range(9):
            identity = ConjugacyClass({1: n} if n else {})
            for lam in partitions_of(n):
                assert dimension(lam) == character(lam, identity)

    def test_squares_sum_to_group_order(self):
        for n in range(9):
            assert sum(dimension(lam) ** 2 for lam in partitions_of(n)) == factorial(n)

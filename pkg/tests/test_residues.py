"""Iterated residues, special permutation orders, partition counts."""

import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from kostant.permutations import Permutation
from kostant.residues import (
    binomial,
    descent_sign,
    inversion_sign,
    iterated_residue,
    iterated_residue_by_substitution,
    kostant_partition,
    partition_total,
    special_permutations,
)
from kostant.vectors import ValidationError, deform, is_regular


class TestBinomial:
    def test_non_negative_exponent(self):
        assert binomial(5, 2) == 10
        assert binomial(5, 0) == 1
        assert binomial(5, 7) == 0

    def test_negative_exponent(self):
        # (1+z)^(-2) = 1 - 2z + 3z^2 - 4z^3 + ...
        assert [binomial(-2, m) for m in range(4)] == [1, -2, 3, -4]

    def test_large_exponent_stays_cheap(self):
        assert binomial(10**9, 2) == 10**9 * (10**9 - 1) // 2

    def test_matches_expansion_product(self):
        # (1+z)^e * (1+z)^(-e) = 1, checked through degree 6
        for e in (-3, -1, 2, 4):
            for degree in range(7):
                conv = sum(
                    binomial(e, m) * binomial(-e, degree - m)
                    for m in range(degree + 1)
                )
                assert conv == (1 if degree == 0 else 0)


class TestSpecialPermutations:
    def test_mixed_sign_rank_two(self):
        ws = special_permutations((3, -1, -2))
        assert [w.images for w in ws] == [(1, 2), (2, 1)]

    def test_identity_only_when_entries_non_negative(self):
        ws = special_permutations((1, 1, -2))
        assert [w.images for w in ws] == [(1, 2)]
        ws = special_permutations((2, 0, 1, -3))
        assert [w.images for w in ws] == [(1, 2, 3)]

    def test_empty_when_first_entry_negative(self):
        # no admissible first position: every order dies at depth one
        assert special_permutations(deform((-1, 2, -1))) == []

    def test_deformed_flat_vector(self):
        ws = special_permutations(deform((2, -1, -1, 0)))
        assert [w.images for w in ws] == [
            (1, 2, 3),
            (2, 1, 3),
            (3, 1, 2),
            (3, 2, 1),
        ]

    def test_prefix_rule_brute_force(self):
        # the pruned search must match the definition applied to all r!
        def by_definition(a):
            r = len(a) - 1
            out = []
            for images in itertools.permutations(range(1, r + 1)):
                ok = True
                s = 0
                for i in range(r - 1):
                    s += a[images[i] - 1]
                    if s >= 0:
                        if images[i] > images[i + 1]:
                            ok = False
                            break
                    else:
                        if images[i] < images[i + 1]:
                            ok = False
                            break
                if ok:
                    out.append(images)
            return out

        rng = random.Random(11)
        for _ in range(120):
            r = rng.randint(1, 4)
            head = [rng.randint(-4, 4) for _ in range(r)]
            a = tuple(head) + (-sum(head),)
            got = [w.images for w in special_permutations(a)]
            assert got == by_definition(a), a


class TestIteratedResidue:
    def test_rank_one_simple_pole(self):
        w = Permutation.identity(1)
        # integrand (1+z)^e / z has residue 1 at the origin for any e >= 0
        assert iterated_residue(w, (0,)) == 1
        assert iterated_residue(w, (5,)) == 1

    def test_rank_two_identity_order(self):
        w = Permutation.identity(2)
        # exponents from a=(1,0,-1): (1+z1)^2 (1+z2)^0 / (z1 z2 (z1-z2))
        assert iterated_residue(w, (2, 0)) == 2

    def test_hand_expanded_terms(self):
        # a = (2,-1,-1): exponent vector (a_1 + 1, a_2) = (3, -1); the two
        # orders contribute 3 and 1, and the signed total 3 - 1 = 2 is the
        # partition count
        assert iterated_residue(Permutation((1, 2)), (3, -1)) == 3
        assert iterated_residue(Permutation((2, 1)), (3, -1)) == 1

    @settings(max_examples=60, deadline=None)
    @given(st.integers(1, 4), st.data())
    def test_substitution_form_agrees(self, r, data):
        exps = tuple(
            data.draw(st.integers(-4, 7), label=f"e{k}") for k in range(r)
        )
        images = tuple(data.draw(st.permutations(list(range(1, r + 1)))))
        w = Permutation(images)
        assert iterated_residue(w, exps) == iterated_residue_by_substitution(w, exps)


class TestPartitionTotal:
    def test_regular_argument_needs_no_deformation(self):
        rng = random.Random(23)
        found = 0
        while found < 40:
            r = rng.randint(2, 4)
            head = [rng.randint(-5, 5) for _ in range(r)]
            a = tuple(head) + (-sum(head),)
            if not is_regular(a):
                continue
            found += 1
            assert partition_total(a, a) == partition_total(a, deform(a)), a

    def test_term_sign_override(self, sign_gates):
        a = deform((1, 0, -1, 0))
        base = partition_total((1, 0, -1, 0), a)
        assert base == partition_total((1, 0, -1, 0), a, term_sign=descent_sign)
        assert base != partition_total((1, 0, -1, 0), a, term_sign=inversion_sign)


class TestKostantPartition:
    def test_zero_vector(self):
        assert kostant_partition((0, 0, 0)) == 1

    def test_rank_one(self):
        assert kostant_partition((5, -5)) == 1
        assert kostant_partition((-5, 5)) == 0

    def test_rank_two_examples(self):
        assert kostant_partition((1, 0, -1)) == 2
        assert kostant_partition((1, 1, -2)) == 2
        assert kostant_partition((2, 0, -2)) == 3
        assert kostant_partition((2, -1, -1)) == 2

    def test_outside_cone_is_zero(self):
        assert kostant_partition((-1, 2, -1)) == 0
        assert kostant_partition((1, -2, 1)) == 0

    def test_non_regular_interior_point(self):
        assert kostant_partition((1, 0, -1, 0)) == 2
        assert kostant_partition((2, -1, -1, 0)) == 2

    def test_rejects_non_integral(self):
        from fractions import Fraction

        with pytest.raises(ValidationError) as err:
            kostant_partition((Fraction(1, 2), Fraction(-1, 2), 0))
        assert err.value.code == "non-integral"

    def test_rejects_nonzero_sum(self):
        with pytest.raises(ValidationError) as err:
            kostant_partition((1, 0, 0))
        assert err.value.code == "not-zero-sum"

    def test_partition_count_grows_polynomially_on_a_ray(self):
        # k(N*(1,0,-1)) counts pairs m+n=N: exactly N+1 values
        for n in (0, 1, 2, 7, 40):
            assert kostant_partition((n, 0, -n)) == n + 1

    def test_single_polynomial_along_regular_directions(self):
        # along a fixed regular direction, the first r(r-1)/2+3 counts lie on
        # one polynomial of degree at most r(r-1)/2: its order-(d+1) finite
        # differences vanish
        for direction in ((2, -1, -1), (4, 1, -2, -3)):
            r = len(direction) - 1
            assert is_regular(direction)
            d = r * (r - 1) // 2
            values = [
                kostant_partition(tuple(n * x for x in direction))
                for n in range(1, d + 4)
            ]
            diffs = values
            for _ in range(d + 1):
                diffs = [b - a for a, b in zip(diffs, diffs[1:])]
            assert all(x == 0 for x in diffs), (direction, values)

import random
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from eqcode.gfq import field_make
from eqcode.subspace import (AmbientMismatch, DimensionMismatch, Subspace,
                             TooLarge, enumerate_grassmannian,
                             enumerate_projective_space, full_space,
                             gaussian_binomial, intersect,
                             orthogonal_complement, projective_space_size,
                             span, subspace_distance, subspace_sum,
                             zero_subspace)


def rand_subspace(rng, field, n, max_gens=3):
    gens = [tuple(rng.randrange(field.q) for _ in range(n))
            for _ in range(rng.randint(0, max_gens))]
    return span(field, n, gens)


class TestSpan:
    def test_empty_span_is_zero(self, f2):
        s = span(f2, 3, [])
        assert s.dim == 0 and s.rows == ()
        assert s == zero_subspace(f2, 3)

    def test_hand_reduced_example(self, f2):
        s = span(f2, 3, [(0, 0, 1), (0, 1, 0), (0, 1, 1)])
        assert s.rows == ((0, 1, 0), (0, 0, 1))
        assert s.dim == 2

    def test_f8_closure_under_generator_sum(self):
        # span{a^0, a^1} = span{a^0, a^1, a^3} since a^0 + a^1 = a^3 in F_8
        f8 = field_make(8)
        f2 = field_make(2)
        powers = [1]
        for _ in range(3):
            powers.append(f8.mul(powers[-1], f8.alpha))
        v = f8.coords
        assert f8.add(powers[0], powers[1]) == powers[3]
        a = span(f2, 3, [v(powers[0]), v(powers[1])])
        b = span(f2, 3, [v(powers[0]), v(powers[1]), v(powers[3])])
        assert a == b and a.dim == 2

    def test_ragged_input_rejected(self, f2):
        with pytest.raises(DimensionMismatch):
            span(f2, 3, [(0, 1), (0, 1, 0)])

    def test_rref_canonical_shape(self, f3):
        s = span(f3, 4, [(2, 1, 0, 2), (1, 2, 1, 0), (0, 0, 2, 2)])
        pivots = s.pivots
        assert list(pivots) == sorted(pivots)
        for r, p in zip(s.rows, pivots):
            assert r[p] == 1
            for other in s.rows:
                if other is not r:
                    assert other[p] == 0

    @given(st.data())
    def test_span_invariant_under_shuffle(self, data):
        q = data.draw(st.sampled_from([2, 3, 4, 5]))
        n = data.draw(st.integers(min_value=1, max_value=4))
        f = field_make(q)
        gens = data.draw(st.lists(
            st.tuples(*[st.integers(0, q - 1) for _ in range(n)]),
            min_size=0, max_size=4))
        shuffled = data.draw(st.permutations(gens))
        assert span(f, n, gens) == span(f, n, list(shuffled))

    def test_many_random_generating_sets_canonical(self):
        rng = random.Random(20240817)
        fields = [field_make(q) for q in (2, 3, 4)]
        for _ in range(10000):
            f = rng.choice(fields)
            n = rng.randint(1, 4)
            gens = [tuple(rng.randrange(f.q) for _ in range(n))
                    for _ in range(rng.randint(0, 4))]
            s1 = span(f, n, gens)
            rng.shuffle(gens)
            assert span(f, n, gens) == s1


class TestSumIntersect:
    def test_sum_with_zero_is_identity(self, f2):
        x = span(f2, 3, [(1, 0, 1)])
        assert subspace_sum(x, zero_subspace(f2, 3)) == x

    def test_two_distinct_planes_span_everything(self, f2):
        planes = enumerate_grassmannian(f2, 3, 2)
        for x, y in combinations(planes, 2):
            assert subspace_sum(x, y) == full_space(f2, 3)
            assert intersect(x, y).dim == 1
            assert subspace_distance(x, y) == 2

    def test_modular_dimension_law_random(self):
        rng = random.Random(7)
        for _ in range(1000):
            q = rng.choice([2, 3, 5])
            f = field_make(q)
            n = rng.randint(1, 5)
            x = rand_subspace(rng, f, n, max_gens=3)
            y = rand_subspace(rng, f, n, max_gens=3)
            s = subspace_sum(x, y)
            m = intersect(x, y)
            assert s.dim + m.dim == x.dim + y.dim
            assert m.is_contained_in(x) and m.is_contained_in(y)
            assert x.is_contained_in(s) and y.is_contained_in(s)

    def test_intersect_self(self, f2):
        x = span(f2, 4, [(1, 0, 1, 0), (0, 1, 1, 1)])
        assert intersect(x, x) == x

    def test_fano_codeword_intersection(self):
        # B_0 = <a^0, a^1> and B_1 = <a^1, a^2> meet exactly in <a^1>
        f8 = field_make(8)
        f2 = field_make(2)
        powers = [1, f8.alpha, f8.mul(f8.alpha, f8.alpha)]
        v = f8.coords
        b0 = span(f2, 3, [v(powers[0]), v(powers[1])])
        b1 = span(f2, 3, [v(powers[1]), v(powers[2])])
        meet = intersect(b0, b1)
        assert meet == span(f2, 3, [v(powers[1])])
        assert meet.dim == 1

    def test_ambient_mismatch(self, f2, f3):
        x = span(f2, 3, [(1, 0, 0)])
        y = span(f2, 4, [(1, 0, 0, 0)])
        z = span(f3, 3, [(1, 0, 0)])
        for other in (y, z):
            with pytest.raises(AmbientMismatch):
                subspace_sum(x, other)
            with pytest.raises(AmbientMismatch):
                intersect(x, other)
            with pytest.raises(AmbientMismatch):
                subspace_distance(x, other)


class TestDistance:
    def test_identity_and_zero(self, f2):
        x = span(f2, 3, [(1, 0, 0), (0, 1, 0)])
        assert subspace_distance(x, x) == 0
        assert subspace_distance(x, zero_subspace(f2, 3)) == x.dim

    def test_metric_axioms_exhaustive_p23(self, f2):
        subs = enumerate_projective_space(f2, 3)
        assert len(subs) == projective_space_size(2, 3) == 16
        d = [[subspace_distance(x, y) for y in subs] for x in subs]
        for i in range(16):
            for j in range(16):
                assert d[i][j] == d[j][i]
                assert (d[i][j] == 0) == (i == j)
                for k in range(16):
                    assert d[i][k] <= d[i][j] + d[j][k]

    @given(st.data())
    @settings(max_examples=60)
    def test_triangle_inequality_random(self, data):
        q = data.draw(st.sampled_from([2, 3, 4]))
        n = data.draw(st.integers(2, 5))
        f = field_make(q)
        rng = random.Random(data.draw(st.integers(0, 10 ** 6)))
        x, y, z = (rand_subspace(rng, f, n) for _ in range(3))
        assert subspace_distance(x, z) <= \
            subspace_distance(x, y) + subspace_distance(y, z)


class TestComplement:
    def test_zero_and_full(self, f2):
        assert orthogonal_complement(zero_subspace(f2, 4)) == full_space(f2, 4)
        assert orthogonal_complement(full_space(f2, 4)) == zero_subspace(f2, 4)

    def test_dimension_and_involution(self):
        rng = random.Random(99)
        for q in (2, 3, 5):
            f = field_make(q)
            for _ in range(200):
                n = rng.randint(1, 5)
                x = rand_subspace(rng, f, n)
                xp = orthogonal_complement(x)
                assert xp.dim == n - x.dim
                assert orthogonal_complement(xp) == x

    def test_self_orthogonal_subspace_char2(self, f2):
        # over F_2 a subspace can equal its own complement
        x = span(f2, 4, [(1, 1, 0, 0), (0, 0, 1, 1)])
        xp = orthogonal_complement(x)
        assert xp == x
        assert intersect(x, xp) == x

    def test_2dim_complement_in_f2_4(self, f2):
        x = span(f2, 4, [(1, 0, 0, 0), (0, 1, 0, 0)])
        assert orthogonal_complement(x).dim == 2


class TestCounting:
    def test_gaussian_paper_and_derived_values(self):
        assert gaussian_binomial(2, 3, 2) == 7
        assert gaussian_binomial(3, 4, 1) == 40
        assert gaussian_binomial(2, 4, 2) == 35
        for q in (2, 3, 7):
            for n in range(6):
                assert gaussian_binomial(q, n, 0) == 1

    def test_gaussian_symmetry(self):
        for q in (2, 3, 4, 5):
            for n in range(9):
                for k in range(n + 1):
                    assert gaussian_binomial(q, n, k) == \
                        gaussian_binomial(q, n, n - k)

    def test_gaussian_recurrence_oracle(self):
        # independent route: [n k]_q = [n-1 k-1]_q + q^k [n-1 k]_q
        for q in (2, 3, 4, 5):
            for n in range(1, 9):
                for k in range(1, n):
                    assert gaussian_binomial(q, n, k) == \
                        gaussian_binomial(q, n - 1, k - 1) + \
                        q ** k * gaussian_binomial(q, n - 1, k)

    def test_projective_space_sizes(self):
        assert projective_space_size(3, 3) == 28
        assert projective_space_size(5, 0) == 1
        assert projective_space_size(3, 8) == 127902864
        assert projective_space_size(2, 3) == 16

    def test_gaussian_invalid(self):
        with pytest.raises(ValueError):
            gaussian_binomial(2, 3, 4)


class TestEnumeration:
    def test_counts_match_formula(self):
        for q in (2, 3, 4, 5):
            f = field_make(q)
            for n in range(7):
                for k in range(n + 1):
                    expected = gaussian_binomial(q, n, k)
                    if expected > 30000:
                        continue
                    subs = enumerate_grassmannian(f, n, k)
                    assert len(subs) == expected
                    assert len(set(subs)) == expected

    def test_lexicographic_and_canonical(self, f2):
        subs = enumerate_grassmannian(f2, 4, 2)
        assert len(subs) == 35
        flat = [sum(s.rows, ()) for s in subs]
        assert flat == sorted(flat)
        for s in subs:
            assert span(f2, 4, s.rows) == s

    def test_g232_explicit_order(self, f2):
        subs = enumerate_grassmannian(f2, 3, 2)
        assert subs[0].rows == ((0, 1, 0), (0, 0, 1))
        assert subs[-1].rows == ((1, 1, 0), (0, 0, 1))

    def test_guard(self, f2):
        with pytest.raises(TooLarge):
            enumerate_grassmannian(f2, 46, 23)

    def test_projective_enumeration(self, f3):
        subs = enumerate_projective_space(f3, 2)
        assert len(subs) == projective_space_size(3, 2)
        dims = [s.dim for s in subs]
        assert dims == sorted(dims)


class TestMembership:
    def test_contains(self, f3):
        x = span(f3, 3, [(1, 0, 2), (0, 1, 1)])
        for v in x.vectors():
            assert x.contains(v)
        assert not x.contains((0, 0, 1))

    def test_vectors_count(self, f3):
        x = span(f3, 3, [(1, 0, 2), (0, 1, 1)])
        vecs = x.vectors()
        assert len(set(vecs)) == 3 ** x.dim

    def test_contained_in(self, f2):
        small = span(f2, 3, [(1, 1, 0)])
        big = span(f2, 3, [(1, 0, 0), (0, 1, 0)])
        assert small.is_contained_in(big)
        assert not big.is_contained_in(small)

from itertools import permutations

import pytest

from eqcode.designs import (NoSuchSystem, design_params, is_projective_plane,
                            sts_boolean, sts_make, verify_sts)

FANO_CYCLIC = [tuple(sorted(((i) % 7, (i + 1) % 7, (i + 3) % 7)))
               for i in range(7)]


class TestStsMake:
    def test_trivial(self):
        sts = sts_make(3)
        assert sts.triples == ((0, 1, 2),)
        assert sts.b == 1 and sts.r == 1

    @pytest.mark.parametrize("v", [3, 7, 9, 13, 15, 19, 21, 25, 27, 31, 33])
    def test_valid_and_closed_forms(self, v):
        sts = sts_make(v)
        assert sts.b == v * (v - 1) // 6
        assert sts.r == (v - 1) // 2
        assert verify_sts(v, sts.triples).ok

    @pytest.mark.parametrize("v", [2, 4, 5, 6, 8, 11, 17, 20])
    def test_congruence_rejected(self, v):
        with pytest.raises(NoSuchSystem):
            sts_make(v)

    def test_deterministic(self):
        assert sts_make(15).triples == sts_make(15).triples

    def test_v7_is_fano_plane(self):
        # every triple system on 7 points is isomorphic to the cyclic one
        sts = sts_make(7)
        target = set(FANO_CYCLIC)
        found = None
        for perm in permutations(range(7)):
            mapped = {tuple(sorted((perm[a], perm[b], perm[c])))
                      for a, b, c in sts.triples}
            if mapped == target:
                found = perm
                break
        assert found is not None

    def test_v9_parameters(self):
        sts = sts_make(9)
        assert sts.b == 12 and sts.r == 4


class TestStsBoolean:
    def test_m2(self):
        sts = sts_boolean(2)
        assert sts.v == 3 and sts.triples == ((0, 1, 2),)

    def test_m3_isomorphic_to_cyclic_fano(self):
        sts = sts_boolean(3)
        assert sts.v == 7 and sts.b == 7
        assert verify_sts(7, sts.triples).ok
        target = set(FANO_CYCLIC)
        assert any({tuple(sorted((p[a], p[b], p[c]))) for a, b, c
                    in sts.triples} == target
                   for p in permutations(range(7)))

    def test_m4(self):
        sts = sts_boolean(4)
        assert sts.v == 15 and sts.b == 35
        assert verify_sts(15, sts.triples).ok

    def test_triples_are_xor_closed(self):
        sts = sts_boolean(4)
        for a, b, c in sts.triples:
            assert (a + 1) ^ (b + 1) == c + 1 or (a + 1) ^ (c + 1) == b + 1

    def test_bad_m(self):
        with pytest.raises(ValueError):
            sts_boolean(1)


class TestVerifySts:
    def test_cyclic_fano_passes(self):
        assert verify_sts(7, FANO_CYCLIC).ok

    def test_dropped_triple_reports_uncovered_pair(self):
        chk = verify_sts(7, FANO_CYCLIC[1:])
        assert not chk.ok
        pair, count = chk.violation
        assert count == 0 and set(pair) <= set(FANO_CYCLIC[0])

    def test_doubled_triple_reports_pair(self):
        chk = verify_sts(7, FANO_CYCLIC + [FANO_CYCLIC[0]])
        assert not chk.ok
        assert chk.violation[1] == 2

    def test_v6_never_valid(self):
        assert not verify_sts(6, [(0, 1, 2), (3, 4, 5)]).ok


class TestDesignParams:
    def test_fano_symmetric_design(self):
        params = design_params(FANO_CYCLIC, v=7)
        assert (params.v, params.b, params.k, params.r) == (7, 7, 3, 3)
        assert params.pair_coverage == 1
        assert params.block_intersection == 1
        assert params.symmetric
        assert params.relations_ok
        assert params.fisher_ok

    def test_single_block_degenerate(self):
        params = design_params([(0, 1, 2)], v=3)
        assert params.degenerate
        assert params.r == 1 and params.k == 3
        assert params.block_intersection is None

    def test_non_uniform_flagged(self):
        params = design_params([(0, 1), (0, 1, 2)], v=3)
        assert not params.uniform and params.k is None

    def test_duplicate_blocks_rejected(self):
        with pytest.raises(ValueError):
            design_params([(0, 1, 2), (2, 1, 0)])

    def test_fisher_flag_on_violation_free_family(self):
        # pairwise 1-intersecting family on 7 points: at most 7 blocks
        params = design_params(FANO_CYCLIC, v=7)
        assert params.fisher_ok and params.b <= params.v


class TestProjectivePlane:
    def test_fano(self):
        assert is_projective_plane(FANO_CYCLIC, v=7) == 2

    def test_triangle(self):
        assert is_projective_plane([(0, 1), (1, 2), (0, 2)], v=3) == 1

    def test_fano_minus_block(self):
        assert is_projective_plane(FANO_CYCLIC[1:], v=7) is None

    def test_wrong_uniformity(self):
        assert is_projective_plane([(0, 1, 2)], v=3) is None

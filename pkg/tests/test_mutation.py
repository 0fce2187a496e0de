import random

import pytest

from g2cluster import seeds
from g2cluster.laurent import variables
from g2cluster.mutation import (BipartiteBelt, DegreeVector, ExchangeMatrix,
                                HomogeneityViolation, MutationError,
                                NonBipartiteError, Seed, ValuedQuiver,
                                cmatrix_at, cmatrix_closed, cmatrix_step,
                                matrix_rank, propagate_degrees)
from g2cluster.verify import random_exchange_matrix


def test_matrix_mutation_is_involution():
    rng = random.Random(5)
    for _ in range(300):
        B = random_exchange_matrix(rng)
        for k in range(1, B.n + 1):
            assert B.mutate(k).mutate(k).entries == B.entries


def test_mutation_negates_row_and_column():
    rng = random.Random(6)
    for _ in range(50):
        B = random_exchange_matrix(rng)
        k = rng.randrange(1, B.n + 1)
        M = B.mutate(k)
        assert M.entries[k - 1] == tuple(-x for x in B.entries[k - 1])
        for i in range(B.m):
            assert M.entries[i][k - 1] == -B.entries[i][k - 1]


def test_mutation_preserves_symmetrizability():
    rng = random.Random(7)
    for _ in range(100):
        B = random_exchange_matrix(rng)
        k = rng.randrange(1, B.n + 1)
        assert B.mutate(k).skew_symmetrizer() is not None


def test_belt_base_matrices_are_bipartite():
    # mu2 mu3 of the initial seeds gives the drawn bipartite quivers
    b1 = seeds.B1_UNDER.mutate(3).mutate(2)
    assert b1.entries == ((0, 0, -1), (0, 0, -1), (1, 3, 0),
                          (1, 0, 0), (-1, -1, 1), (0, -3, 1))
    assert b1.is_acyclic()
    b2 = seeds.B2_UNDER.mutate(3).mutate(2)
    assert b2.entries == ((0, 0, -1), (0, 0, -3), (1, 1, 0),
                          (1, 0, 0), (-3, -1, 3), (0, -1, 1))
    assert b2.is_acyclic()


def test_skew_symmetrizers():
    assert seeds.B1_UNDER.skew_symmetrizer() == (1, 3, 1)
    assert seeds.B2_UNDER.skew_symmetrizer() == (3, 1, 3)
    assert seeds.B1_BFZ.skew_symmetrizer() == (1, 3, 1, 3)
    assert seeds.B2_BFZ.skew_symmetrizer() == (3, 1, 3, 1)
    sym_pair = ExchangeMatrix((1, 2), 2, ((0, 1), (1, 0)))
    assert sym_pair.skew_symmetrizer() is None


def test_rank():
    assert seeds.B1_UNDER.rank() == 3
    assert seeds.B2_UNDER.rank() == 3
    assert matrix_rank(((1, 2), (2, 4))) == 1
    assert matrix_rank(()) == 0


def test_seed_mutation_exchange_and_involution():
    s = seeds.seed_under(1)
    m3 = s.mutate(3)
    x1, x2, x3, xm1, xm2, xm3 = variables(seeds.UNDER_NAMES_1)
    assert m3.entry(3) == (x1 * xm3 ** 2 + x2).exact_div(x3)
    assert m3.history == (3,)
    back = m3.mutate(3)
    assert back.cluster == s.cluster
    assert back.matrix.entries == s.matrix.entries
    for k in (1, 2):
        twice = s.mutate(k).mutate(k)
        assert twice.cluster == s.cluster


def test_frozen_entries_never_change():
    s = seeds.seed_under(2)
    t = s.apply([1, 2, 3, 1, 2, 3])
    for label in (-1, -2, -3):
        assert t.entry(label) == s.entry(label)


def test_apply_sequence_conventions():
    s = seeds.seed_under(1)
    assert s.apply([]) is not None and s.apply([]).cluster == s.cluster
    # multiplicative mu2 mu3 means: apply 3 first
    from g2cluster.mutation import right_to_left
    assert right_to_left([2, 3]) == [3, 2]
    base = s.apply(right_to_left([2, 3]))
    assert base.matrix.entries == seeds.belt_base(1).matrix.entries


def test_mutate_rejects_bad_index():
    s = seeds.seed_under(1)
    with pytest.raises(MutationError):
        s.mutate(4)
    with pytest.raises(MutationError):
        s.mutate(0)
    with pytest.raises(MutationError):
        s.matrix.mutate(5)


def test_belt_requires_bipartite_base():
    with pytest.raises(NonBipartiteError):
        BipartiteBelt(seeds.seed_under(1))
    belt = BipartiteBelt(seeds.belt_base(1))
    assert belt.seed(0).history == (3, 2)


def test_belt_indexing_against_direct_mutation():
    base = seeds.belt_base(1)
    belt = BipartiteBelt(base)
    assert belt.seed(1).cluster == base.apply([1, 2]).cluster
    assert belt.seed(2).cluster == base.apply([1, 2, 3]).cluster
    assert belt.seed(-1).cluster == base.apply([3]).cluster
    assert belt.seed(-2).cluster == base.apply([3, 1, 2]).cluster
    # order of requests does not matter
    belt2 = BipartiteBelt(seeds.belt_base(1))
    belt2.seed(-2)
    assert belt2.seed(2).cluster == belt.seed(2).cluster


def test_propagate_degrees_example():
    deg = seeds.initial_degrees(1)
    got = propagate_degrees(deg, seeds.B1_UNDER, 3)
    assert got == DegreeVector(2, 2, 1)


def test_propagate_degrees_zero_column_negates():
    B = ExchangeMatrix((1, 2), 2, ((0, 3), (0, 0)))
    deg = {1: DegreeVector(2, 1, 0), 2: DegreeVector(1, 1, 1)}
    assert propagate_degrees(deg, B, 1) == DegreeVector(-2, -1, 0)


def test_propagate_degrees_detects_inhomogeneity():
    deg = seeds.initial_degrees(1)
    deg[2] = DegreeVector(1, 0, 0)
    with pytest.raises(HomogeneityViolation):
        propagate_degrees(deg, seeds.B1_UNDER, 3)


def test_cmatrix_start_and_period():
    assert cmatrix_at(0) == ((1, 0, 0), (-1, -1, 1), (0, -1, 1))
    # middle row cycles with period four
    cycle = [(-1, -1, 1), (1, 1, -1), (0, -2, 1), (0, 2, -1)]
    for r in range(-20, 21):
        assert cmatrix_at(r)[1] == cycle[r % 4]


def test_cmatrix_shift_relation():
    for r in range(-40, 41):
        assert cmatrix_at(r)[2] == cmatrix_at(r + 4)[0]


def test_cmatrix_closed_form_full_range():
    for r in range(-40, 41):
        assert cmatrix_at(r) == cmatrix_closed(r)


def test_cmatrix_step_matches_iteration():
    C = cmatrix_at(6)
    assert cmatrix_step(C, "even") == cmatrix_at(7)
    C = cmatrix_at(7)
    assert cmatrix_step(C, "odd") == cmatrix_at(8)
    with pytest.raises(ValueError):
        cmatrix_step(C, "sideways")


def test_cmatrix_matches_belt_frozen_blocks():
    for case in (1, 2):
        belt = BipartiteBelt(seeds.belt_base(case))
        triple = seeds.TRIPLE_CLASS[("under", case)]
        for r in range(-10, 11):
            B = belt.seed(r).matrix
            for i, lab in enumerate((-1, -2, -3)):
                for k in (1, 2, 3):
                    b = B.entry(lab, k)
                    cross = (lab in triple) != (k in triple)
                    count = b // 3 if cross and lab in triple else b
                    assert count == cmatrix_at(r)[i][k - 1]


def test_quiver_roundtrip_and_agreement():
    for kind, case in (("under", 1), ("under", 2), ("bfz", 1), ("bfz", 2),
                       ("gls", 1), ("gls", 2)):
        B = {"under": seeds.seed_under, "bfz": seeds.seed_bfz,
             "gls": seeds.seed_gls}[kind](case).matrix
        triple = seeds.TRIPLE_CLASS[(kind, case)]
        Q = ValuedQuiver.from_matrix(B, triple)
        assert Q.to_matrix().entries == B.entries
        for k in range(1, B.n + 1):
            assert Q.mutate(k).to_matrix().entries == B.mutate(k).entries
            # a second layer
            Q2 = ValuedQuiver.from_matrix(B.mutate(k), triple)
            for l in range(1, B.n + 1):
                assert (Q2.mutate(l).to_matrix().entries
                        == B.mutate(k).mutate(l).entries)


def test_quiver_two_cycle_cancellation():
    # one path 2 -> 1 -> 3 against an existing arrow 3 -> 2
    B = ExchangeMatrix((1, 2, 3), 3, ((0, -1, 1), (1, 0, -1), (-1, 1, 0)))
    Q = ValuedQuiver.from_matrix(B, frozenset())
    M = Q.mutate(1)
    assert M.arrow_count(2, 3) == 0
    assert M.arrow_count(3, 2) == 0
    assert M.to_matrix().entries == B.mutate(1).entries


def test_quiver_frozen_frozen_arrows_removed():
    Q = ValuedQuiver.from_matrix(seeds.B1_BFZ, seeds.TRIPLE_CLASS[("bfz", 1)])
    M = Q.mutate(2)
    for src, dst in dict(M.arrows):
        assert 1 <= src <= 4 or 1 <= dst <= 4


def test_seed_json_roundtrip_fields():
    s = seeds.seed_under(1).mutate(3)
    payload = s.to_json_dict()
    assert payload["labels"] == [1, 2, 3, -1, -2, -3]
    assert payload["history"] == [3]
    assert payload["matrix"][2] == [1, -3, 0]
    assert payload["cluster"]["x3"] == s.entry(3).format()


def test_seed_json_import_roundtrip():
    s = seeds.seed_under(2).apply([3, 2, 1])
    back = Seed.from_json_dict(s.to_json_dict())
    assert back.matrix.entries == s.matrix.entries
    assert back.cluster == s.cluster
    assert back.history == s.history
    assert back.mutate(1).cluster == s.mutate(1).cluster

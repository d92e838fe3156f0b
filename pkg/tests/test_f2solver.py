import itertools
import random
from math import comb

import numpy as np
import pytest

from nltool.boolean import BooleanFunction, DomainError, MultilinearPolyF2, affine_function, is_affine
from nltool.f2solver import (
    LinearRep,
    SolverStateError,
    SquareFreeMonomial,
    escalier_profile,
    load_ideal,
    lr_add_generator,
    lr_init,
    lr_solution_count,
    monomial_stream,
    simonetti_generator,
    simonetti_nonlinearity,
    variety_empty_f2,
    weight_ideal_normal_form,
    weight_points,
)
from nltool.transforms import nonlinearity_fwt

import oracles

F_EXAMPLE = BooleanFunction(2, [1, 1, 1, 0])


def mono(s, *support):
    return SquareFreeMonomial(s, tuple(support))


def test_monomial_stream():
    assert len(list(monomial_stream(4, 2))) == 6
    assert [m.support for m in monomial_stream(8, 1)] == [(i,) for i in range(1, 9)]
    assert next(iter(monomial_stream(8, 3))).support == (1, 2, 3)
    stream = list(monomial_stream(6, 3))
    assert [m.support for m in stream] == sorted(m.support for m in stream)
    assert len(set(stream)) == comb(6, 3)
    for bad in (0, 7):
        with pytest.raises(DomainError):
            list(monomial_stream(6, bad))


def test_square_free_monomial_validation():
    assert mono(5, 1, 4).degree == 2
    with pytest.raises(DomainError):
        mono(3, 1, 1)
    with pytest.raises(DomainError):
        mono(3, 4)


def test_generator_examples():
    assert simonetti_generator(F_EXAMPLE, mono(4, 1)).support() == [0b000, 0b001]
    assert simonetti_generator(F_EXAMPLE, mono(4, 2)).support() == [0b000, 0b001, 0b010]
    with pytest.raises(DomainError):
        simonetti_generator(F_EXAMPLE, mono(8, 1))


def _affine_factor(tt, n, h):
    """g(A, op_h) + f(op_h) as a set of masks; h is 1-based."""
    x = oracles.points(n)[h - 1]
    masks = {0b1} | {1 << i for i in range(1, n + 1) if x[i - 1]}
    if tt[h - 1]:
        masks ^= {0}
    return masks


def test_generator_matches_symbolic_expansion():
    for n in (1, 2, 3):
        s = 1 << n
        for tt in oracles.all_functions(n)[:: 1 if n < 3 else 7]:
            f = BooleanFunction(n, tt)
            for t in range(1, min(s, 3) + 1):
                for m in monomial_stream(s, t):
                    expected = oracles.expand_product_f2([_affine_factor(tt, n, h) for h in m.support])
                    assert set(simonetti_generator(f, m).support()) == expected


def test_generator_product_semantics():
    rng = np.random.default_rng(0)
    n = 3
    f = BooleanFunction.random(n, rng)
    tt = f.truth_table.tolist()
    for i, j in itertools.combinations(range(1, 9), 2):
        g = simonetti_generator(f, mono(8, i, j))
        values = [sum(g.coeffs[u] for u in range(16) if u & a == u) % 2 for a in range(16)]
        for a in range(16):
            coeffs = [(a >> k) & 1 for k in range(n + 1)]
            pts = oracles.points(n)
            ci = oracles.affine_value(coeffs, pts[i - 1]) ^ tt[i - 1]
            cj = oracles.affine_value(coeffs, pts[j - 1]) ^ tt[j - 1]
            assert values[a] == (ci & cj)


def test_lr_init():
    assert len(lr_init(3).escalier) == 8
    assert lr_init(1).escalier == {0, 1}
    fresh = lr_init(4)
    assert lr_solution_count(fresh) == 16 and not fresh.trivial and not fresh.eliminated
    with pytest.raises(DomainError):
        lr_init(0)


def test_add_generator_examples():
    st = lr_add_generator(lr_init(3), MultilinearPolyF2.from_masks(3, [0b001, 0]))
    assert 0b001 in st.eliminated
    assert st.eliminated[0b001] == 0b11  # a_0 + 1, stored with its pivot
    # brute force: points of {0,1}^3 with a_0 = 1
    assert lr_solution_count(st) == sum(1 for a in range(8) if a & 1) == 4

    st = lr_add_generator(lr_init(3), MultilinearPolyF2.from_masks(3, [0]))
    assert st.trivial and lr_solution_count(st) == 0

    st = lr_add_generator(lr_init(3), MultilinearPolyF2.from_masks(3, []))
    assert lr_solution_count(st) == 8 and not st.eliminated
    assert st.generators_checked == 1 and st.generators_sufficient == 0


def test_add_generator_rejects_wrong_arity():
    with pytest.raises(DomainError):
        lr_add_generator(lr_init(3), MultilinearPolyF2.from_masks(2, [0]))


def test_count_requires_closure():
    st = lr_init(2)
    st.pending[0b11] = None
    with pytest.raises(SolverStateError):
        lr_solution_count(st)


def test_solution_count_examples():
    assert lr_solution_count(load_ideal(F_EXAMPLE, 2)) == 4
    assert lr_solution_count(load_ideal(F_EXAMPLE, 1)) == 0
    assert lr_solution_count(lr_init(2)) == 4


def _variety_of_polys(polys, m):
    """Common binary zeros of bitset polynomials, by evaluation."""
    pts = []
    for a in range(1 << m):
        if all(sum(1 for u in range(1 << m) if p >> u & 1 and u & a == u) % 2 == 0 for p in polys):
            pts.append(a)
    return pts


def test_random_systems_count_matches_brute_force():
    rng = random.Random(1)
    for m in (2, 3, 4):
        for _ in range(60):
            polys = [rng.getrandbits(1 << m) & rng.getrandbits(1 << m) for _ in range(rng.randint(1, 3))]
            st = lr_init(m)
            for p in polys:
                st.add_bits(p)
            assert lr_solution_count(st) == len(_variety_of_polys(polys, m))
            assert st.is_closed() and st.is_order_ideal()


def test_variety_empty_examples():
    assert variety_empty_f2(F_EXAMPLE, 1)
    assert not variety_empty_f2(F_EXAMPLE, 2)
    with pytest.raises(DomainError):
        variety_empty_f2(F_EXAMPLE, 0)


def test_top_ideal_never_empty():
    for n in (1, 2, 3):
        for tt in oracles.all_functions(n):
            # brute force first: some affine function is within 2^n - 1
            assert oracles.variety_points(tt, n, 1 << n)
            assert not variety_empty_f2(BooleanFunction(n, tt), 1 << n)


def test_simonetti_nonlinearity_examples():
    assert simonetti_nonlinearity(F_EXAMPLE) == 1
    assert simonetti_nonlinearity(affine_function([1, 1, 0, 1], 3)) == 0


def test_simonetti_exhaustive_n3():
    for tt in oracles.all_functions(3):
        f = BooleanFunction(3, tt)
        nl = oracles.nonlinearity(tt, 3)
        assert simonetti_nonlinearity(f) == nl
        assert simonetti_nonlinearity(f, skip_affine=True) == nl


def test_runs_record_counters():
    runs = []
    simonetti_nonlinearity(F_EXAMPLE, runs=runs)
    assert [r.t for r in runs] == [1, 2]
    assert [r.empty for r in runs] == [True, False]
    for r in runs:
        assert 0 <= r.generators_sufficient <= r.generators_checked <= comb(4, r.t)


def test_oracle_equivalence_small():
    for n in (1, 2):
        for tt in oracles.all_functions(n):
            f = BooleanFunction(n, tt)
            for t in range(1, (1 << n) + 1):
                assert lr_solution_count(load_ideal(f, t)) == len(oracles.variety_points(tt, n, t))


def test_surviving_monomials_are_the_variety_size_with_order_ideal():
    for tt in oracles.all_functions(3):
        f = BooleanFunction(3, tt)
        for t in range(1, 9):
            st = load_ideal(f, t, early_exit=False)
            assert st.is_closed()
            assert st.is_order_ideal()
            assert all(row >> e & 1 for e, row in st.eliminated.items())
            assert len(st.escalier) + len(st.eliminated) == 16 or st.trivial


def test_generator_order_independence():
    rng = random.Random(5)
    for value in rng.sample(range(256), 10):
        f = BooleanFunction.from_int(3, value)
        for t in (2, 3):
            expected = lr_solution_count(load_ideal(f, t, early_exit=False))
            supports = [m.support for m in monomial_stream(8, t)]
            for _ in range(50):
                rng.shuffle(supports)
                assert lr_solution_count(load_ideal(f, t, order=list(supports), early_exit=False)) == expected


def test_monotone_in_t():
    rng = np.random.default_rng(6)
    for _ in range(20):
        f = BooleanFunction.random(3, rng)
        counts = [lr_solution_count(load_ideal(f, t)) for t in range(1, 9)]
        assert counts == sorted(counts)
        assert counts[-1] == len(oracles.variety_points(f.truth_table.tolist(), 3, 8))


@pytest.mark.slow
def test_oracle_equivalence_random_n4():
    rng = np.random.default_rng(7)
    for _ in range(200):
        f = BooleanFunction.random(4, rng)
        tt = f.truth_table.tolist()
        for t in range(1, 17):
            assert lr_solution_count(load_ideal(f, t)) == len(oracles.variety_points(tt, 4, t))


def test_simonetti_random_n4():
    rng = np.random.default_rng(8)
    for _ in range(20):
        f = BooleanFunction.random(4, rng)
        assert simonetti_nonlinearity(f) == nonlinearity_fwt(f)
        assert is_affine(f) == (simonetti_nonlinearity(f) == 0)


def test_escalier_profile():
    st = load_ideal(F_EXAMPLE, 2)
    prof = escalier_profile(st)
    assert sum(prof.values()) == 4


def test_weight_ideal_normal_form_examples():
    x1x2 = MultilinearPolyF2.from_masks(2, [0b11])
    assert weight_ideal_normal_form(x1x2, 1).is_zero()
    p = MultilinearPolyF2.from_masks(2, [0b01, 0b11])
    assert weight_ideal_normal_form(p, 0).is_zero()
    assert weight_ideal_normal_form(p, 1).support() == [0b01]
    with pytest.raises(DomainError):
        weight_ideal_normal_form(p, 3)


def _vanishes_on_weight(p, w):
    return all(
        sum(1 for u in p.support() if u & a == u) % 2 == 0
        for a in range(1 << p.m)
        if bin(a).count("1") <= w
    )


def test_weight_ideal_normal_form_brute_force():
    rng = random.Random(9)
    for s in range(1, 7):
        for _ in range(40):
            p = MultilinearPolyF2.from_bits(s, rng.getrandbits(1 << s) & rng.getrandbits(1 << s))
            for w in range(s + 1):
                assert weight_ideal_normal_form(p, w).is_zero() == _vanishes_on_weight(p, w)


def test_weight_ideal_dimension():
    for s in range(1, 7):
        for w in range(s + 1):
            low_degree = sum(1 for u in range(1 << s) if bin(u).count("1") <= w)
            points_q = sum(1 for a in range(1 << s) if bin(a).count("1") <= w)
            assert low_degree == points_q == weight_points(s, w)


def test_linear_rep_is_plain_dataclass_state():
    st = LinearRep(2, escalier={0, 1, 2, 3})
    st.add_bits(0b0110)  # a_0 + a_1
    assert lr_solution_count(st) == 2

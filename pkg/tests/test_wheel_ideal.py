import random
from math import comb

import pytest

from wheelmac import partitions as pt
from wheelmac.linalg import EchelonBasis
from wheelmac.macdonald import CoeffField
from wheelmac.scalars import ParameterSpec, UniRatFunc
from wheelmac.symfunc import SymPoly
from wheelmac.wheel_ideal import (basis_I, constraint_rows, dim_J,
                                  laurent_clear, random_probe_point,
                                  satisfies_wheel, verify_rho_inclusion,
                                  verify_stability, verify_theorem1,
                                  wheel_kernel_basis, wheel_substitutions)


def test_wheel_substitutions_examples():
    assert wheel_substitutions(2, 2) == [(0, 0), (0, 1), (1, 1)]
    assert wheel_substitutions(1, 3) == [(0,), (1,), (2,)]
    assert wheel_substitutions(1, 2) == [(0,), (1,)]
    for k, r in [(1, 4), (2, 3), (3, 2), (3, 3)]:
        assert len(wheel_substitutions(k, r)) == comb(k + r - 1, k)


def test_cumulative_vs_increment_form():
    # sigma weakly increasing in [0, r-1] <=> increments s_1..s_{k+1} >= 0
    # with total r-1 (the last increment being r-1 - sigma_k)
    for k, r in [(1, 2), (2, 3), (3, 4)]:
        from_increments = set()
        for sigma in wheel_substitutions(k, r):
            inc = (sigma[0],) + tuple(sigma[i] - sigma[i - 1]
                                      for i in range(1, k)) \
                + (r - 1 - sigma[-1],)
            assert all(s >= 0 for s in inc) and sum(inc) == r - 1
            cumulative = tuple(sum(inc[: i + 1]) for i in range(k))
            from_increments.add(cumulative)
        assert from_increments == set(wheel_substitutions(k, r))


def test_satisfies_wheel_examples():
    p = ParameterSpec(1, 2)
    one = UniRatFunc.one(1)
    u = UniRatFunc.u(1)
    assert satisfies_wheel(SymPoly.zero(2), p)
    f = SymPoly(2, {(2,): u, (1, 1): -(one + u * u)})
    assert satisfies_wheel(f, p)
    assert not satisfies_wheel(SymPoly.m((2,), 2, one), p)


def test_dim_J_examples():
    # n <= k: no constraints at all
    assert dim_J(2, 3, 2, 4) == len(pt.enumerate_partitions(2, 4))
    assert dim_J(1, 2, 2, 2) == 1
    assert dim_J(1, 2, 2, 1) == 0


def test_dim_J_oracle_small():
    # independent oracle for (1,2,2,2): solve the single constraint
    # a(1 + t^2) + b t = 0 on a m_(2) + b m_(11) by hand
    p = ParameterSpec(1, 2)
    one = UniRatFunc.one(1)
    u = UniRatFunc.u(1)
    coeff_m2 = one + u * u   # m_(2)(x, tx) / x^2
    coeff_m11 = u            # m_(11)(x, tx) / x^2
    kernel = SymPoly(2, {(2,): coeff_m11, (1, 1): -coeff_m2})
    assert satisfies_wheel(kernel, p)
    assert dim_J(1, 2, 2, 2, p) == 1


def test_dim_J_probe_agrees_with_exact():
    for (k, r, n, d) in [(1, 2, 3, 4), (1, 3, 3, 5), (2, 2, 3, 4)]:
        p = ParameterSpec(k, r)
        exact = dim_J(k, r, n, d, p)
        for seed in (0, 1, 2):
            assert dim_J(k, r, n, d, p, mode="probe", seed=seed) == exact


def test_probe_point_never_unit():
    rng = random.Random(0)
    for _ in range(50):
        u0 = random_probe_point(rng)
        assert u0 != 0 and abs(u0) != 1


def test_dim_J_row_order_and_rotation_dedup_invariance():
    # the sigma family is closed under wheel rotation; dropping rotation
    # copies or reordering rows must not change the kernel
    k, r, n, d = 2, 3, 3, 4
    p = ParameterSpec(k, r)
    plist = pt.enumerate_partitions(n, d)
    rows = [row for _, row in constraint_rows(k, r, n, d, p)]
    one = UniRatFunc.one(p.N)
    dim_all = len(plist) - _field_rank(rows, len(plist))
    dim_rev = len(plist) - _field_rank(list(reversed(rows)), len(plist))
    assert dim_all == dim_rev == dim_J(k, r, n, d, p)
    reps = _rotation_representatives(k, r)
    assert len(reps) < len(wheel_substitutions(k, r))
    rows_dedup = [row for key, row in constraint_rows(k, r, n, d, p)
                  if key[0] in reps]
    assert len(plist) - _field_rank(rows_dedup, len(plist)) == dim_all


def _field_rank(rows, ncols):
    ech = EchelonBasis(ncols)
    for row in rows:
        ech.add(row)
    return ech.rank


def _rotation_representatives(k, r):
    """One cumulative sequence per rotation class of the increment cycle."""
    reps = set()
    chosen = set()
    for sigma in wheel_substitutions(k, r):
        inc = (sigma[0],) + tuple(sigma[i] - sigma[i - 1] for i in range(1, k)) \
            + (r - 1 - sigma[-1],)
        cyc = min(inc[i:] + inc[:i] for i in range(k + 1))
        if cyc not in chosen:
            chosen.add(cyc)
            reps.add(sigma)
    return reps


def test_r2_wheel_reduces_to_single_locus():
    # for r = 2 every substitution cuts out the same locus as sigma = 0
    for k, n, d in [(1, 2, 3), (1, 3, 4), (2, 3, 4)]:
        p = ParameterSpec(k, 2)
        plist = pt.enumerate_partitions(n, d)
        rows0 = [row for key, row in constraint_rows(k, 2, n, d, p)
                 if key[0] == (0,) * k]
        dim0 = len(plist) - _field_rank(rows0, len(plist))
        assert dim0 == dim_J(k, 2, n, d, p)


def test_kernel_basis_is_homogeneous_and_in_J():
    p = ParameterSpec(1, 3)
    for d in (3, 4, 5):
        for f in wheel_kernel_basis(1, 3, 3, d, p):
            assert satisfies_wheel(f, p)
            assert {pt.size(lam) for lam in f.coeffs} == {d}


def test_basis_I_examples(tables):
    p = ParameterSpec(1, 2)
    out = basis_I(1, 2, 2, 2, p, tables(2))
    assert len(out) == 1
    u = UniRatFunc.u(1)
    assert out[0].coeffs[(1, 1)] == -(u * u + 1) / u
    assert basis_I(1, 2, 2, 1, p, tables(2)) == []
    # n = 1: P_(d) = m_(d)
    out = basis_I(1, 2, 1, 5, p, tables(1))
    assert out == [SymPoly.m((5,), 1, UniRatFunc.one(1))]


def test_verify_theorem1_examples(tables):
    rep = verify_theorem1(1, 2, 2, 2, table=tables(2))
    assert rep["inclusion_ok"] and rep["dims_equal"]
    assert rep["dim_J"] == rep["admissible_count"] == 1
    rep = verify_theorem1(1, 2, 1, 3, table=tables(1))
    assert rep["inclusion_ok"] and rep["dims_equal"]
    rep = verify_theorem1(1, 3, 3, 4, table=tables(3))
    assert rep["inclusion_ok"] and rep["dims_equal"]


def test_stability_examples(tables):
    p = ParameterSpec(1, 2)
    assert verify_stability(SymPoly.zero(2), p)
    kernel = wheel_kernel_basis(1, 2, 2, 2, p)[0]
    assert verify_stability(kernel, p)
    with pytest.raises(ValueError):
        verify_stability(SymPoly.m((2,), 2, UniRatFunc.one(1)), p)


def test_stability_random_combination(tables):
    rng = random.Random(31)
    p = ParameterSpec(1, 3)
    basis = basis_I(1, 3, 2, 5, p, tables(2))
    assert len(basis) == 2
    f = SymPoly.zero(2)
    for g in basis:
        f = f + g.scale(UniRatFunc.const(p.N, rng.randint(-4, 4)))
    assert verify_stability(f, p)


def test_rho_inclusion_examples(tables):
    p = ParameterSpec(1, 2)
    # j = 0 reduces to P in one fewer variable, wheel-satisfying
    assert verify_rho_inclusion((4, 2), 1, 2, 3, 0, p, tables(3))
    assert verify_rho_inclusion((4, 2), 1, 2, 3, 2, p, tables(3))
    with pytest.raises(ValueError):
        verify_rho_inclusion((2,), 1, 2, 2, 1, p, tables(2))


def test_laurent_clear_preserves_wheel_membership(tables):
    p = ParameterSpec(1, 2)
    fld = CoeffField.laurent(p)
    f = basis_I(1, 2, 2, 4, p, tables(2))[0]
    g = laurent_clear(f, p)
    assert satisfies_wheel(f, p) == satisfies_wheel(g, p, fld) == True  # noqa: E712

import json
import random

import pytest

from wheelmac import partitions as pt
from wheelmac.macdonald import (CoeffField, ExactDivisionError, MacdonaldTable,
                                apply_D, apply_D_result, apply_E,
                                cauchy_row_check, check_integrality,
                                eigenvalue_D, eigenvalue_e1,
                                integral_form_factor, psi_dblprime,
                                psi_prime, qpochhammer_ratio,
                                specialize_P, verify_pieri)
from wheelmac.scalars import BiRatFunc, ParameterSpec, QTPoly, UniRatFunc
from wheelmac.symfunc import SymPoly

q = BiRatFunc.q()
t = BiRatFunc.t()
one = BiRatFunc.one()


def test_apply_D_examples():
    fldp = CoeffField.generic_poly()
    # D_n^0 is the identity
    f = SymPoly(2, {(2,): QTPoly.term(3), (1, 1): QTPoly.q()})
    assert apply_D(f, 0, fldp) == f
    # single variable: D_1^1 m_(d) = q^d m_(d)
    out = apply_D(SymPoly.m((3,), 1, QTPoly.one()), 1, fldp)
    assert out == SymPoly(1, {(3,): QTPoly.term(1, 3, 0)})
    # n = 2: D_2^1 m_(1,1) = (qt + q) m_(1,1)
    out = apply_D(SymPoly.m((1, 1), 2, QTPoly.one()), 1, fldp)
    assert out == SymPoly(2, {(1, 1): QTPoly({(1, 1): 1, (1, 0): 1})})
    witness = apply_D_result(SymPoly.m((2,), 2, QTPoly.one()), 1, fldp)
    assert witness.division_exact


def test_eigenvalue_examples():
    # empty partition: prod (1 + X t^(n-i))
    coeffs = eigenvalue_D((), 2)
    assert coeffs[0] == QTPoly.one()
    assert coeffs[1] == QTPoly.t() + QTPoly.one()
    assert coeffs[2] == QTPoly.t()
    # lam = (1,0): (1 + Xqt)(1 + X)
    coeffs = eigenvalue_D((1,), 2)
    assert coeffs[1] == QTPoly({(1, 1): 1, (0, 0): 1})
    assert coeffs[2] == QTPoly({(1, 1): 1})
    # lam = (2,0): (1 + Xq^2 t)(1 + X)
    coeffs = eigenvalue_D((2,), 2)
    assert coeffs[1] == QTPoly({(2, 1): 1, (0, 0): 1})
    assert coeffs[2] == QTPoly({(2, 1): 1})


def test_compute_P_examples(tables):
    table = tables(2)
    assert table.compute_P((1,)) == SymPoly.m((1,), 2, one)
    assert table.compute_P((1, 1)) == SymPoly.m((1, 1), 2, one)
    P2 = table.compute_P((2,))
    c = (one - t) * (one + q) / (one - q * t)
    assert P2 == SymPoly(2, {(2,): one, (1, 1): c})


def test_compute_P_eigen_equation(tables):
    # independent oracle for the (2) coefficient: the full D_2(X) equation
    table = tables(2)
    fld = CoeffField.generic()
    for lam in [(2,), (2, 1), (3, 1)]:
        P = table.compute_P(lam)
        evs = eigenvalue_D(lam, 2)
        for rho in range(3):
            assert apply_D(P, rho, fld) == P.scale(BiRatFunc.from_poly(evs[rho]))


def test_operator_commutativity():
    rng = random.Random(9)
    fldp = CoeffField.generic_poly()
    for _ in range(5):
        n = 3
        d = rng.randint(1, 4)
        coeffs = {lam: QTPoly.term(rng.randint(-3, 3))
                  for lam in pt.enumerate_partitions(n, d)}
        f = SymPoly(n, coeffs)
        d1d2 = apply_D(apply_D(f, 2, fldp), 1, fldp)
        d2d1 = apply_D(apply_D(f, 1, fldp), 2, fldp)
        assert d1d2 == d2d1


def test_operator_linearity():
    rng = random.Random(13)
    fldp = CoeffField.generic_poly()
    for _ in range(5):
        d = rng.randint(1, 4)
        plist = pt.enumerate_partitions(3, d)
        f = SymPoly(3, {lam: QTPoly.term(rng.randint(-3, 3)) for lam in plist})
        g = SymPoly(3, {lam: QTPoly.term(rng.randint(-3, 3)) for lam in plist})
        for rho in (1, 2):
            assert apply_D(f + g, rho, fldp) == \
                apply_D(f, rho, fldp) + apply_D(g, rho, fldp)
        for m in (0, 1, 2):
            assert apply_E(f + g, m, fldp) == \
                apply_E(f, m, fldp) + apply_E(g, m, fldp)


def test_triangularity_of_D1():
    fldp = CoeffField.generic_poly()
    for n, d in [(3, 4), (4, 5)]:
        for nu in pt.enumerate_partitions(n, d):
            image = apply_D(SymPoly.m(nu, n, QTPoly.one()), 1, fldp)
            for mu in image.coeffs:
                assert pt.dominance_leq(mu, nu), (mu, nu)


def test_diagonal_entry_is_eigenvalue():
    fldp = CoeffField.generic_poly()
    for n, d in [(3, 3), (4, 4)]:
        for nu in pt.enumerate_partitions(n, d):
            image = apply_D(SymPoly.m(nu, n, QTPoly.one()), 1, fldp)
            assert image.coeffs[nu] == eigenvalue_e1(nu, n)


def test_apply_E_examples():
    fldp = CoeffField.generic_poly()
    # E_m kills constants
    const = SymPoly.m((), 2, QTPoly.term(5))
    for m in range(3):
        assert apply_E(const, m, fldp).is_zero()
    # n = 1: E_0 m_(d) = [d]_q m_(d-1)
    out = apply_E(SymPoly.m((3,), 1, QTPoly.one()), 0, fldp)
    assert out == SymPoly(1, {(2,): QTPoly({(0, 0): 1, (1, 0): 1, (2, 0): 1})})


def test_E1_relation_to_D1():
    # (q - 1) E_1 = D_n^1 - (1 - t^n)/(1 - t), as operators
    rng = random.Random(17)
    fld = CoeffField.generic()
    for n in (2, 3):
        scalar = (one - t ** n) / (one - t)
        for _ in range(4):
            d = rng.randint(1, 4)
            f = SymPoly(n, {lam: BiRatFunc.const(rng.randint(-3, 3))
                            for lam in pt.enumerate_partitions(n, d)})
            lhs = apply_E(f, 1, fld).scale(q - one)
            rhs = apply_D(f, 1, fld) - f.scale(scalar)
            assert lhs == rhs


def test_psi_prime_examples():
    assert psi_prime((), 1) == one
    assert psi_prime((1, 1), 2).is_zero()
    assert psi_prime((1,), 2) == (one - q) * (one + t) / (one - q * t)


def test_psi_prime_vanishing_classification():
    # zero exactly when the new shape is not a partition
    for lam in [(2, 2), (3, 1, 1), (2, 2, 1)]:
        for j in range(1, pt.length(lam) + 2):
            prev = lam[j - 2] if j >= 2 else None
            cur = lam[j - 1] if j <= len(lam) else 0
            assert psi_prime(lam, j).is_zero() == (j >= 2 and prev == cur)


def test_psi_dblprime_example(tables):
    assert psi_dblprime((1,), 1, 2) == one + t
    # cross-check via E_0 P_(1) = psi'' P_()
    table = tables(2)
    fld = CoeffField.generic()
    out = apply_E(table.compute_P((1,)), 0, fld)
    assert out == SymPoly.m((), 2, one + t)


@pytest.mark.parametrize("lam,n", [((), 2), ((1,), 2), ((2, 1), 3)])
def test_verify_pieri_examples(lam, n, tables):
    assert verify_pieri(lam, n, tables(n))


def test_integral_form_examples():
    assert integral_form_factor(()) == one
    assert integral_form_factor((1,)) == one - t
    assert integral_form_factor((2,)) == (one - q * t) * (one - t)


def test_check_integrality_examples(tables):
    assert check_integrality((1,), 2, tables(2))
    assert check_integrality((2,), 2, tables(2))
    # c_(2) P_(2) = (1-qt)(1-t) m_(2) + (1-t)^2 (1+q) m_(1,1)
    c = integral_form_factor((2,))
    P = tables(2).compute_P((2,))
    f = P.scale(c)
    assert f.coeffs[(2,)] == (one - q * t) * (one - t)
    assert f.coeffs[(1, 1)] == (one - t) ** 2 * (one + q)
    assert check_integrality((2, 1), 3, tables(3))


def test_specialize_P_examples(tables):
    p = ParameterSpec(1, 2)
    sp = specialize_P((1,), 2, p, tables(2))
    assert sp == SymPoly.m((1,), 2, UniRatFunc.one(1))
    sp = specialize_P((2,), 2, p, tables(2))
    u = UniRatFunc.u(1)
    assert sp.coeffs[(1, 1)] == -(u * u + 1) / u
    # (1,3), n=3, lam=(3,0,0): admissible, no pole
    specialize_P((3,), 3, ParameterSpec(1, 3), tables(3))


def test_cauchy_examples(tables):
    assert qpochhammer_ratio(0) == one
    assert qpochhammer_ratio(1) == (one - t) / (one - q)
    assert cauchy_row_check(2, 3, tables(2))
    assert cauchy_row_check(3, 4, tables(3))


def test_table_json_roundtrip(tables):
    table = MacdonaldTable(2)
    for lam in [(2,), (1, 1), (3,)]:
        table.compute_P(lam)
    data = json.loads(json.dumps(table.to_json_dict()))
    back = MacdonaldTable.from_json_dict(data)
    assert back.n == 2
    for lam, f in table.entries.items():
        assert back.entries[lam] == f


def test_table_json_validation():
    bad = {"n": 2, "entries": [{"lambda": "2",
                                "coefficients": [{"mu": "2", "value": "q"}]}]}
    with pytest.raises(ValueError, match="unitriangular"):
        MacdonaldTable.from_json_dict(bad)
    bad = {"n": 2, "entries": [{"lambda": "1,1", "coefficients": [
        {"mu": "1,1", "value": "1"}, {"mu": "2", "value": "q"}]}]}
    with pytest.raises(ValueError, match="dominance"):
        MacdonaldTable.from_json_dict(bad)


def test_equal_eigenvalue_guard():
    table = MacdonaldTable(2)
    plist, cols = table.component_matrix(2)
    assert plist == [(2,), (1, 1)]
    # eigenvalues must be distinct over Q(q,t) on the component
    assert table.eps1((2,)) != table.eps1((1, 1))


def test_exact_division_error_is_loud():
    from wheelmac.macdonald import _divexact_linear
    terms = {(1, 0): QTPoly.one()}
    with pytest.raises(ExactDivisionError):
        _divexact_linear(terms, 0, 1)

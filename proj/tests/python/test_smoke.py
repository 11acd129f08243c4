import math

import numpy as np
import pytest

import qfourier as qf


def test_group_basics():
    g = qf.group("S3")
    assert g.order == 6
    assert not g.abelian
    assert g.delta == pytest.approx(math.sqrt(6))
    assert g.mul(0, 3) == 3
    assert len(qf.subgroups(g)) == 6
    with pytest.raises(qf.GroupError):
        qf.group("NoSuchGroup")


def test_parseval_and_fourier_inversion():
    g = qf.group("D4")
    x = qf.random_box(g, "plus", seed=7)
    assert qf.norm2(qf.sft(x)) == pytest.approx(qf.norm2(x), abs=1e-12)
    assert qf.distance2(qf.sft_inverse(qf.sft(x)), x) < 1e-12
    y = qf.random_box(g, "plus", seed=8)
    lhs = qf.sft(qf.multiply(x, y))
    rhs = qf.coproduct(qf.sft(x), qf.sft(y))
    assert qf.distance2(lhs, rhs) < 1e-9


def test_box_roundtrip_and_coeff():
    g = qf.group("Z4")
    x = qf.box(g, "minus", np.array([0, 1, 0, -1], dtype=complex))
    assert x.shading == "minus"
    np.testing.assert_allclose(x.coeff, [0, 1, 0, -1])
    with pytest.raises(ValueError):
        qf.box(g, "sideways", np.zeros(4, dtype=complex))


def test_bishift_certificate():
    g = qf.group("Z4")
    x = qf.make_bishift_abelian(g, [0, 2], 1, 1)
    cert = qf.is_bishift(x)
    assert cert["all_true"]
    n2 = qf.norm2(x)
    expected = n2 * n2 * (2 * math.log(g.delta) - 4 * math.log(n2))
    assert qf.entropy(x) == pytest.approx(expected, abs=1e-9)


def test_inequalities_hold():
    g = qf.group("S3")
    x = qf.random_box(g, "minus", seed=3)
    y = qf.random_box(g, "minus", seed=4)
    rep = qf.young_check(x, y, 2.0, 4.0 / 3.0, 4.0 / 3.0)
    assert rep["verdict"] in ("holds", "saturated")
    hy = qf.hausdorff_young_check(x, 2.0)
    assert hy["verdict"] in ("holds", "saturated")


def test_biprojection_lattice_and_flow():
    g = qf.group("Z6")
    lattice = qf.enumerate_biprojections(g, "minus")
    assert [len(rec["subgroup"]) for rec in lattice] == [1, 2, 3, 6]
    for rec in lattice:
        assert qf.is_biprojection(rec["element"])

    x0 = qf.b_lambda(qf.random_box(g, "plus", seed=11), 0.5)
    res = qf.iterate_blockmap(x0, lam=0.5)
    assert res["classification"] in ("BiprojectionMultiple", "Zero")
    norms = res["trajectory_norms"]
    assert all(b <= a + 1e-12 for a, b in zip(norms, norms[1:]))


def test_ising():
    cb = qf.critical_beta()
    assert cb["analytic"] == pytest.approx(math.log(1 + math.sqrt(2)) / 2, abs=1e-15)
    assert abs(cb["bisection"] - cb["analytic"]) < 1e-10
    assert qf.t_step(1.0) == pytest.approx(1.0, abs=1e-14)
    hot = qf.classify_beta(0.2)
    assert hot["phase"] == "Disordered_JP"
    cold = qf.classify_beta(0.8)
    assert cold["phase"] == "Ordered_ID"

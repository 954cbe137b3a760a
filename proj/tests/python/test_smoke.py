import json
import math

import pytest

import qsphere
from qsphere import Poly, QLaurent


def test_laurent_arithmetic():
    q = QLaurent.q()
    one = QLaurent(1)
    assert (one - q * q) * (one + q * q) == one - QLaurent.q(4)
    assert str(QLaurent("1/8 - 1/8*q^2")) == "1/8 - 1/8*q^2"
    assert (one - q * q).eval(0.5) == pytest.approx(0.75)
    assert (one - q * q).eval_exact("1/2") == "3/4"
    with pytest.raises(ZeroDivisionError):
        QLaurent.q(-1).eval(0.0)
    with pytest.raises(ValueError):
        QLaurent("1 +")


def test_normal_form_and_star():
    assert qsphere.normal_form(["be", "al"]) == QLaurent.q() * (Poly.alpha() * Poly.beta())
    assert qsphere.normal_form(["al*", "al"]) == Poly("1 - (q^2) be* be - z^2")
    assert (Poly.alpha() * Poly.beta()).star() == Poly("(q^-1) al* be*")
    x = Poly.alpha() + Poly.z()
    assert x.star().star() == x


def test_ideal_and_isomorphism():
    assert len(qsphere.ideal_generators()) == 10
    assert all(image.is_zero() for _, image in qsphere.iso_images())


def test_chern_components():
    assert qsphere.projection_is_idempotent()
    assert qsphere.chern(0)["terms"] == []
    ch1 = qsphere.chern(1)
    assert ch1["degree"] == 2
    assert len(ch1["terms"]) == 6
    golden = qsphere.golden("ch1")
    assert sorted(map(json.dumps, ch1["terms"])) == sorted(map(json.dumps, golden["terms"]))


def test_cycle():
    report = qsphere.verify_cycle(1)
    assert report["equal"]
    assert json.loads(report["difference"])["terms"] == []
    assert not qsphere.verify_cycle(1, "standard")["equal"]


def test_representation():
    rows = qsphere.relation_residuals(0.5, 0.8 + 0.0j, "plus", 64)
    assert len(rows) == 10
    assert max(r["residual"] for r in rows) <= 1e-12
    with pytest.raises(ValueError):
        qsphere.relation_residuals(1.5, 0.5, "plus", 8)


def test_characters():
    assert qsphere.character_check(0.5, 0.6, 0.0, 0.8)["valid"]
    bad = qsphere.character_check(0.5, 0.6, 0.8, 0.0)
    assert not bad["valid"]
    assert max(r for _, r in bad["residuals"]) == pytest.approx(0.48)
    assert qsphere.character_check(1.0, 0.6, 0.8j, 0.0)["valid"]
    assert math.isclose(bad["sphere_difference"], -0.48)

import os
from pathlib import Path

import pytest

import cdesc

FIXTURES = Path(os.environ.get("CDESC_FIXTURE_DIR", Path(__file__).resolve().parents[2] / "fixtures"))


@pytest.fixture(scope="module")
def standard():
    return cdesc.Fixture.load(str(FIXTURES / "standard.fixture"))


def test_fixture_contents(standard):
    assert "P2" in standard.atoms
    assert "p2-two-lines" in standard.pairs
    assert "p2-blowup" in standard.squares


def test_euler_characteristics(standard):
    assert cdesc.chi_open(standard, "p1-point") == "1"
    assert cdesc.chi_c_open(standard, "p1-point") == "L"
    assert cdesc.chi_open(standard, "p2-two-lines") == "1 - L"
    assert cdesc.chi_c_open(standard, "p2-two-lines") == "-L + L^2"


def test_class_operations(standard):
    assert cdesc.normalize(standard, "[P2]") == "1 + L + L^2"
    assert cdesc.twist("1 - L", 2) == "L^2 - L^3"
    assert cdesc.gamma_squared_defects(standard, "p3-three-planes") == 0
    assert cdesc.chi_c_scissor(standard, "A2") == "L^2"


def test_serre_cone(standard):
    r = cdesc.serre_cone(standard, "P1")
    assert r["chi_c"] == "L^2" and r["chi"] == "1"
    assert r["matches_oracle"] and r["classes_differ"]


@pytest.mark.parametrize("target", ["manin", "descent", "duality", "independence", "functoriality"])
def test_verify_targets(standard, target):
    report = cdesc.run("verify", target, standard)
    assert report["command"] == f"verify {target}"
    assert report["pass"] is True


def test_run_structured_rationals(standard):
    report = cdesc.run("euler", None, standard, pair="p2-two-lines")
    assert set(report) == {"command", "inputs", "results", "pass"}
    assert report["pass"] is True


def test_broken_square_fails(standard):
    assert cdesc.run("verify", "manin", standard, square="p2-blowup-broken")["pass"] is False


def test_errors(standard):
    with pytest.raises(cdesc.UsageError):
        cdesc.run("verify", "bogus", standard)
    with pytest.raises(cdesc.UnknownNameError):
        cdesc.chi_open(standard, "nope")
    with pytest.raises(cdesc.FixtureError):
        cdesc.Fixture.load(str(FIXTURES / "negative" / "non-self-dual.fixture"))
    with pytest.raises(cdesc.ParseError):
        cdesc.Fixture.load(str(FIXTURES / "negative" / "empty.fixture"))


def test_round_trip(standard):
    text = standard.dump()
    assert cdesc.Fixture.parse(text).dump() == text

import pathlib

import pytest

import casson

ROOT = pathlib.Path(__file__).resolve().parents[2]
DATA = str(ROOT / "data" / "knots.dat")


def test_paper_values():
    assert casson.brieskorn_lambda(2, 3, 35) == 17
    assert casson.brieskorn_lambda(6, 5, 7) == 30
    assert casson.catalog_lambda("Sigma(2,3,5,7)") == 20
    demo = casson.non_additivity_demo()
    assert (demo["lhs"], demo["rhs"], demo["equal"]) == (20, 47, False)


def test_evaluate_certificates():
    cert = casson.evaluate("splice(torus(2,3), torus(2,5))")
    assert cert["value"] == 0
    assert cert["status"] == "VanishesByCorollary"
    assert list(cert) == ["value", "status", "checks", "citations", "expression", "notes"]

    cert = casson.evaluate("ksplice(6, unknot, torus(2,3))")
    assert (cert["value"], cert["status"]) == (17, "AdditivityApplied")

    cert = casson.evaluate("surgery(1/0, unknot)")
    assert cert["value"] is None
    assert cert["status"] == "Unsupported"


def test_data_files():
    with pytest.raises(casson.UnknownKnot):
        casson.evaluate("ksplice(2, 4_1, torus(2,3))")
    cert = casson.evaluate("ksplice(2, 4_1, torus(2,3))", data_files=[DATA])
    assert cert["value"] == casson.torus_surgery_lambda(2, 3, 2)
    with pytest.raises(casson.KnotDataError):
        casson.evaluate("S3", data_files=[str(ROOT / "tests" / "data" / "corrupt_alexander.dat")])


def test_parse():
    assert casson.parse(" brieskorn( 35,3 ,2)") == "brieskorn(2,3,35)"
    with pytest.raises(casson.ParseError, match="position 7"):
        casson.parse("splice(")
    with pytest.raises(ValueError):
        casson.parse("torus(2,4)")


def test_conditions():
    checks = casson.check_conditions("unknot", "torus(2,3)", -5, 5)
    assert len(checks) == 20
    assert all(c["verdict"] == "PASS" for c in checks)
    assert all(c["gcd"] == [1] and c["resultant"] != 0 for c in checks)
    unknown = casson.check_conditions("torus(2,5)", "torus(2,3)", 1, 2)
    assert [c["verdict"] for c in unknown if c["direction"] == "first"] == ["UNKNOWN", "UNKNOWN"]
    with pytest.raises(ValueError):
        casson.check_conditions("unknot", "torus(2,3)", 0, 0)


def test_oracle_and_closed_forms():
    assert casson.count_irreducible_characters(2, 3, 5) == 2
    sweep = casson.verify_closed_form(1000)
    assert sweep == {"triples_checked": 413, "mismatches": []}
    assert casson.whitehead_double_surgery_lambda(2, 3, 6) == 17
    with pytest.raises(ValueError):
        casson.whitehead_double_surgery_lambda(2, 3, 0)


def test_positivity():
    assert casson.positivity_guarantee("torus(2,3)", 1)
    assert not casson.positivity_guarantee("unknot", 3)
    assert not casson.positivity_guarantee("pretzel_m2_3_7", 1, data_files=[DATA])
    assert casson.positivity_guarantee("pretzel_m2_3_7", 2, data_files=[DATA])


def test_polynomials_are_exact():
    assert casson.alexander("torus(2,3)") == [1, -1, 1]
    assert casson.resultant([-1, 1], [1, 1]) == 2
    big = 10**40
    assert casson.resultant([-big, 1], [0, 0, 1]) == big * big
    assert casson.gcd([-1, 0, 1], [-1, 1]) == [-1, 1]

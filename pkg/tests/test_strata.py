"""Registry integrity, assembly tables, and the conic-locus diagnostic."""

import json
from collections import Counter

import pytest

from motivecount import MotiveClass, omega_locus, parse, format_expr
from motivecount.atoms import hilb_p2, projective
from motivecount.strata import (
    DIMENSION,
    EXPECTED_EULER,
    EXPECTED_TABLE,
    TARGETS,
    assemble,
    betti_csv,
    betti_markdown,
    consistency_to_dict,
    omega26_assembled,
    omega26_parts,
    registry,
    registry_to_json,
    report_to_dict,
    strata_for,
    suite_to_dict,
    verify_all,
)


def test_registry_counts():
    tags = Counter(s.id.split(".")[0] for s in registry())
    assert tags["m41"] == 3
    assert tags["m51"] == 7
    assert tags["m52"] == 5
    assert tags["m11"] == tags["m21"] == tags["m31"] == 1
    assert len(registry()) == 18
    assert len(omega26_parts()) == 16


def test_registry_ids_unique():
    ids = [s.id for s in registry() + omega26_parts()]
    assert len(ids) == len(set(ids))


def test_registry_entries_parse_and_match_expected():
    for spec in registry() + omega26_parts():
        value = spec.value()
        if spec.expected is not None:
            assert value == spec.expected, spec.id


def test_registry_roundtrip_formatting():
    for spec in registry() + omega26_parts():
        tree = spec.parsed()
        assert parse(format_expr(tree)) == tree, spec.id


def test_registry_json_exchange_format():
    entries = json.loads(registry_to_json())
    assert len(entries) == 34
    for entry in entries:
        assert set(entry) <= {"id", "paper_ref", "expr", "expected"}
        assert {"id", "paper_ref", "expr"} <= set(entry)
    by_id = {e["id"]: e for e in entries}
    assert by_id["m11"]["expected"] == [1, 1, 1]
    assert by_id["m51.W5"]["expr"] == "(Hilb6 - Omega(2,6))*P14"


@pytest.mark.parametrize("target", TARGETS)
def test_assembled_tables(target):
    report = assemble(target)
    assert report.assembled.coeffs == EXPECTED_TABLE[target]
    assert report.euler_assembled == EXPECTED_EULER[target]
    assert report.assembled.degree == DIMENSION[target]
    assert report.passed
    # flags are recomputable predicates of the other fields
    assert report.flags.table_match == (report.assembled == report.expected)
    assert report.flags.euler_match == (report.euler_assembled == report.expected.euler())
    assert report.flags.palindromic == report.assembled.is_palindromic()
    assert report.flags.nonnegative == report.assembled.is_effective()
    assert report.assembled == sum((c for _, c in report.strata), MotiveClass())


def test_m52_equals_m51():
    assert assemble("m52").assembled == assemble("m51").assembled
    # genuinely different stratifications
    assert {s for s, _ in assemble("m52").strata} != {s for s, _ in assemble("m51").strata}


def test_selected_stratum_values():
    values = {s.id: s.value() for s in registry()}
    assert values["m41.M2"] == projective(2) * projective(13)
    assert values["m41.W4"] == (hilb_p2(3) - omega_locus(1, 3)) * projective(11)
    assert values["m51.W5"] == (hilb_p2(6) - omega_locus(2, 6)) * projective(14)
    assert values["m31"].coeffs == (1, 2, 3, 3, 3, 3, 3, 3, 3, 2, 1)
    # stratum classes of an open decomposition may be non-effective only in
    # formal intermediate terms; the three m41 pieces happen to be effective
    assert all(values[f"m41.{name}"].is_effective()
               for name in ("M2", "W4", "M1minusW4"))


def test_strata_for_unknown_target():
    with pytest.raises(KeyError):
        strata_for("m99")


def test_omega26_consistency_frozen_values():
    assembled, report = omega26_assembled()
    assert assembled == report.assembled
    by_n = {d.n: d for d in report.divisions}
    assert set(by_n) == {0, 1, 2}
    assert all(d.exact for d in report.divisions)
    assert by_n[0].numerator.coeffs == (0, -1, -1, 6, 21, 38, 46, 41, 28, 14, 5, 1)
    assert by_n[1].numerator.coeffs == (0, 2, 8, 16, 21, 21, 19, 16, 11, 5, 1)
    assert by_n[2].numerator.coeffs == (1, 3, 6, 10, 15, 21, 23, 20, 12, 5, 1)
    assert [d.numerator.euler() for d in report.divisions] == [198, 120, 117]
    assert by_n[1].quotient.coeffs == (0, 2, 6, 10, 11, 10, 9, 7, 4, 1)
    assert by_n[2].quotient.coeffs == (1, 2, 3, 5, 7, 9, 7, 4, 1)
    # multiplying back reproduces the bundle total
    for d in report.divisions:
        assert d.quotient * projective(d.n) == d.numerator
    assert report.assembled.coeffs == (1, 3, 8, 21, 39, 57, 62, 52, 33, 15, 5, 1)
    assert report.assembled.euler() == 297
    assert report.stated == omega_locus(2, 6)
    assert report.difference == report.assembled - report.stated
    assert report.difference.coeffs == (0, 1, 2, 6, 11, 19, 23, 22, 15, 7, 2)
    assert not report.matches


def test_omega26_part_inventory():
    _, report = omega26_assembled()
    ids = [sid for sid, _ in report.parts]
    assert ids == [s.id for s in omega26_parts()]
    expected_ids = {
        "omega26.integral",
        "omega26.S6_2", "omega26.S4_1", "omega26.S3_1", "omega26.S2_0",
        "omega26.S2_2", "omega26.S1_0", "omega26.S1_2", "omega26.S0_0",
        "omega26.S0_1",
        "omega26.Hx0", "omega26.Hx1", "omega26.Hx2",
        "omega26.Hs0", "omega26.Hs1", "omega26.Hs2",
    }
    assert set(ids) == expected_ids
    parts = dict(report.parts)
    # reducible contribution alone carries the full stated Euler number
    ordered_pairs_euler = 9 - 3
    unordered_pairs_euler = 6 - 3
    reducible_euler = sum(
        parts[f"omega26.Hx{n}"].euler() * ordered_pairs_euler
        + parts[f"omega26.Hs{n}"].euler() * unordered_pairs_euler
        for n in range(3))
    assert reducible_euler == 189
    assert parts["omega26.integral"].euler() == 0


def test_omega26_determinism():
    a1, r1 = omega26_assembled()
    a2, r2 = omega26_assembled()
    assert a1 == a2 and r1 == r2
    assert json.dumps(consistency_to_dict(r1)) == json.dumps(consistency_to_dict(r2))


def test_verify_all_hard_pass_set():
    suite = verify_all()
    assert [r.target for r in suite.reports] == list(TARGETS)
    assert all(r.passed for r in suite.reports)
    assert suite.passed
    assert not suite.omega26.matches  # informational, does not affect passed


def test_serialization_shapes():
    suite = verify_all()
    doc = suite_to_dict(suite)
    assert doc["schema"] == 1
    assert doc["pass"] is True
    assert len(doc["reports"]) == 6
    r41 = next(r for r in doc["reports"] if r["target"] == "m41")
    assert r41["assembled"] == list(EXPECTED_TABLE["m41"])
    assert r41["flags"]["table_match"] is True
    cons = doc["omega26_consistency"]
    assert cons["assembled_euler"] == 297
    assert cons["stated_euler"] == 189
    assert len(cons["parts"]) == 16
    assert len(cons["bundles"]) == 3
    assert all(b["division_exact"] for b in cons["bundles"])


def test_betti_renderings():
    cls = MotiveClass((1, 2, 1))
    md = betti_markdown(cls)
    assert "| i | b_2i |" in md and "| 1 | 2 |" in md
    csv_text = betti_csv(cls)
    assert csv_text.splitlines() == ["i,b_2i", "0,1", "1,2", "2,1"]


def test_report_dict_fields():
    d = report_to_dict(assemble("m11"))
    assert d == {
        "target": "m11",
        "strata": [{"id": "m11", "class": [1, 1, 1]}],
        "assembled": [1, 1, 1],
        "expected": [1, 1, 1],
        "euler_assembled": 3,
        "flags": {
            "table_match": True,
            "euler_match": True,
            "palindromic": True,
            "degree_matches_dimension": True,
            "nonnegative": True,
        },
        "pass": True,
    }

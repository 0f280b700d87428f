from fractions import Fraction

import pytest

from commprob.structure import (
    center,
    normal_subgroups,
    subgroup_generated,
)
from commprob.theorems import (
    analyze,
    run_catalog_verification,
    summarize,
    verify_class_size_theorem,
    verify_klein_fixed_point,
    verify_odd_35_243,
    verify_supersolvable_1_3,
    verify_supersolvable_5_16,
)


def normal_of_order(cat, name, order):
    return next(n for n in normal_subgroups(cat[name]) if n.order == order)


# -- threshold verifiers ---------------------------------------------------------


def test_5_16_a4(cat):
    v = verify_supersolvable_5_16(cat["A4"])
    assert v.applicable and v.holds
    assert "isoclinic" in v.note


def test_5_16_s4_not_applicable(cat):
    v = verify_supersolvable_5_16(cat["S4"])
    assert not v.applicable and v.holds


def test_5_16_d8_supersolvable(cat):
    v = verify_supersolvable_5_16(cat["D8"])
    assert v.applicable and v.holds and v.note == "supersolvable"


def test_1_3_c2a4_via_isoclinism(cat):
    v = verify_supersolvable_1_3(cat["C2xA4"])
    assert v.applicable and v.holds and "isoclinic" in v.note


def test_1_3_a5_not_applicable(cat):
    v = verify_supersolvable_1_3(cat["A5"])
    assert not v.applicable and v.holds


def test_odd_threshold_arithmetic():
    # 11/75 > 35/243 but 23/375 < 35/243, by exact cross-multiplication
    assert Fraction(11, 75) > Fraction(35, 243)
    assert Fraction(23, 375) < Fraction(35, 243)
    assert 11 * 243 == 2673 and 75 * 35 == 2625
    assert 23 * 243 == 5589 and 375 * 35 == 13125


def test_odd_applicable_cases(cat):
    v = verify_odd_35_243(cat["(C5xC5):C3"])
    assert v.applicable and v.holds and "isoclinic" in v.note
    v = verify_odd_35_243(cat["C7:C3"])
    assert v.applicable and v.holds and v.note == "supersolvable"
    v = verify_odd_35_243(cat["(C5xC5):C15"])
    assert not v.applicable and v.holds
    v = verify_odd_35_243(cat["A4"])
    assert not v.applicable and "even" in v.note


# -- class-size statement ---------------------------------------------------------


def test_class_size_a4_klein_s4(cat):
    v = verify_class_size_theorem(cat["A4"], normal_of_order(cat, "A4", 4), 4)
    assert v.applicable and v.holds
    assert "size 3" in v.note


def test_class_size_c2a4_central(cat):
    G = cat["C2xA4"]
    v = verify_class_size_theorem(G, center(G), 4)
    assert v.applicable and v.holds
    assert "size 1" in v.note and "center" in v.note


def test_class_size_s3(cat):
    v = verify_class_size_theorem(cat["S3"], normal_of_order(cat, "S3", 3), 3)
    assert v.applicable and v.holds
    assert "size 2" in v.note


def test_class_size_monotone_in_s(cat):
    a4 = cat["A4"]
    klein = normal_of_order(cat, "A4", 4)
    sizes = []
    for s in (4, 5, 6):
        v = verify_class_size_theorem(a4, klein, s)
        assert v.applicable and v.holds
        sizes.append(int(v.note.split("size ")[1].split(" ")[0]))
    assert sizes == [3, 3, 3]  # one witness certifies every larger s


def test_class_size_precondition_states(cat):
    q8 = cat["Q8"]
    v = verify_class_size_theorem(q8, center(q8), 2)
    assert not v.precondition_ok and "split" in v.note
    assert not v.is_failure()

    a4 = cat["A4"]
    v = verify_class_size_theorem(a4, subgroup_generated(a4, []), 4)
    assert not v.precondition_ok and "trivial" in v.note

    s4 = cat["S4"]
    v = verify_class_size_theorem(s4, normal_of_order(cat, "S4", 12), 5)
    assert not v.precondition_ok and "abelian" in v.note

    with pytest.raises(ValueError):
        verify_class_size_theorem(a4, normal_of_order(cat, "A4", 4), 1)


def test_class_size_not_applicable_below_threshold(cat):
    g56 = cat["C2^3:C7"]
    n8 = normal_of_order(cat, "C2^3:C7", 8)
    for s in (2, 3, 4, 5, 6):
        v = verify_class_size_theorem(g56, n8, s)  # d = 1/7 <= 1/s
        assert v.precondition_ok and not v.applicable and v.holds


# -- klein fixed point -------------------------------------------------------------


def test_klein_positive_case(cat):
    G = cat["C2xC2xC3"]
    klein = normal_of_order(cat, "C2xC2xC3", 4)
    v = verify_klein_fixed_point(G, klein)
    assert v.applicable and v.holds


def test_klein_strictness_at_one_third(cat):
    # d = 1/3 exactly: the strict threshold leaves the statement inapplicable
    a4 = cat["A4"]
    v = verify_klein_fixed_point(a4, normal_of_order(cat, "A4", 4))
    assert v.precondition_ok and not v.applicable and v.holds

    c2a4 = cat["C2xA4"]
    v = verify_klein_fixed_point(c2a4, normal_of_order(cat, "C2xA4", 4))
    assert v.precondition_ok and not v.applicable and v.holds


def test_klein_rejects_wrong_subgroup(cat):
    s3 = cat["S3"]
    v = verify_klein_fixed_point(s3, normal_of_order(cat, "S3", 3))
    assert not v.precondition_ok


# -- reports and the catalog run ----------------------------------------------------


def test_analyze_a4(cat):
    report = analyze(cat["A4"], name="A4")
    d = report.to_dict()
    assert d["order"] == 12 and d["class_count"] == 4
    assert d["d"] == "1/3" and d["acs"] == "3/1"
    assert d["supersolvable"] is False and d["isoclinic_to_A4"] is True
    assert not any(v["applicable"] and not v["holds"] for v in d["verdicts"])


def test_analyze_c6_abelian(cat):
    d = analyze(cat["C6"], name="C6").to_dict()
    assert d["d"] == "1/1" and d["abelian"] is True


def test_analyze_375(cat):
    d = analyze(cat["(C5xC5):C15"], name="(C5xC5):C15").to_dict()
    assert d["order"] == 375 and d["d"] == "23/375"
    assert d["supersolvable"] is False


def test_analyze_deterministic(cat):
    from commprob.constructors import named

    a = analyze(named("S4"), name="S4").to_dict()
    b = analyze(named("S4"), name="S4").to_dict()
    assert a == b


def test_run_catalog_verification_no_failures():
    reports, summary = run_catalog_verification()
    assert summary["failures"] == 0
    assert summary["groups"] >= 20
    assert summary["applicable"] == summary["holds"]
    assert summary["applicable"] > 0


def test_run_catalog_single_filter():
    reports, summary = run_catalog_verification(names=["A4"])
    assert summary["groups"] == 1
    assert reports[0].name == "A4"
    assert summary["failures"] == 0


def test_summary_counts_consistent():
    reports, summary = run_catalog_verification(names=["A4", "Q8", "C6"])
    total = sum(len(r.theorem_verdicts) for r in reports)
    assert summary["verdicts"] == total
    assert (
        summary["applicable"] + summary["vacuous"] + summary["precondition_skips"]
        == total
    )
    assert summarize(reports) == summary

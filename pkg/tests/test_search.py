import pytest

from resposet.residuation import classify, condition_holds
from resposet.search import (EnumerationError, PROPERTIES, STRUCTURE_KINDS,
                             check_universal, describe_structure,
                             enumerate_posets, enumerate_structures,
                             residuable_columns, suite_properties)


def test_poset_counts():
    assert [len(enumerate_posets(n)) for n in (1, 2, 3, 4, 5)] == [
        1, 3, 19, 219, 4231]


def test_poset_cap():
    with pytest.raises(EnumerationError):
        enumerate_posets(7)


def test_structure_counts():
    counts = {}
    for kind in ("residuated-pair", "left-residuated-groupoid",
                 "commutative-residuated-monoid",
                 "bounded-commutative-residuated-monoid"):
        counts[kind] = [len(enumerate_structures(n, kind)) for n in (2, 3)]
    assert counts["residuated-pair"] == [24, 5166]
    assert counts["left-residuated-groupoid"] == [12, 990]
    assert counts["commutative-residuated-monoid"] == [4, 27]
    assert counts["bounded-commutative-residuated-monoid"] == [2, 12]


def test_lrg_condition_failure_counts():
    # how many left-residuated groupoids break isotony or integrality
    for n, fail1, fail7 in ((2, 2, 10), (3, 624, 972)):
        structs = enumerate_structures(n, "left-residuated-groupoid")
        assert sum(1 for s in structs
                   if not condition_holds(s, 1)[0]) == fail1
        assert sum(1 for s in structs
                   if not condition_holds(s, 7)[0]) == fail7


def test_enumeration_is_deterministic():
    first = [describe_structure(s)
             for s in enumerate_structures(2, "left-residuated-groupoid")]
    enumerate_structures.cache_clear()
    enumerate_posets.cache_clear()
    second = [describe_structure(s)
              for s in enumerate_structures(2, "left-residuated-groupoid")]
    assert first == second


def test_boolean_structure_is_enumerated(bool2):
    stream = [describe_structure(s) for s in
              enumerate_structures(2, "bounded-commutative-residuated-monoid")]
    assert describe_structure(bool2) in stream


def test_enumerated_bcrms_classify():
    for s in enumerate_structures(3, "bounded-commutative-residuated-monoid"):
        flags = classify(s)
        assert flags.bcrm


def test_residuable_columns_satisfy_adjunction():
    checked = 0
    for p in enumerate_posets(3):
        for col, row in residuable_columns(p).items():
            # row[z] is the greatest x with col[x] <= z, and the solution
            # set is exactly its down-set
            for z in range(p.n):
                for x in range(p.n):
                    assert p.leq(col[x], z) == p.leq(x, row[z])
            checked += 1
    assert checked > 0


def test_structure_kinds_exposed():
    assert "left-residuated-groupoid" in STRUCTURE_KINDS
    assert "unital-groupoid" in STRUCTURE_KINDS


def test_suite_partition():
    lem = suite_properties("lemmas")
    thm = suite_properties("theorems")
    assert len(lem) == 9
    assert len(thm) == 7
    assert {p.name for p in lem} | {p.name for p in thm} == set(PROPERTIES)


EXPECTED_CASES = {
    "law-5-from-1-3": 5191,
    "law-7-from-comm-1-6-top": 41578,
    "law-8-from-assoc-2-3": 5191,
    "law-2-from-3-6": 1003,
    "law-4-from-3-6": 1003,
    "law-9-from-3-6": 1003,
    "law-10-from-5-9-top": 41578,
    "law-13-from-idempotent": 90,
    "synthesis-adjunction": 5191,
    "twist-lifting-first-projections": 5191,
    "twist-lifting-second-projections": 5191,
    "operator-twist-audit": 15,
    "restricted-twist-biconditional": 41,
    "cone-product-law": 242,
    "restricted-pseudo-kleene": 940,
    "distributivity-identities-agree": 4473,
}


@pytest.mark.parametrize("name", sorted(EXPECTED_CASES))
def test_universal_property(name):
    result = check_universal(name)
    assert result.ok, result.witness
    assert result.cases == EXPECTED_CASES[name]


def test_check_universal_size_override():
    result = check_universal("law-5-from-1-3", sizes=(1, 2))
    assert result.ok
    assert result.cases == 25

import random
from dataclasses import replace
from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fuzzycat.category import (
    Arrow,
    FuzzyCategory,
    LawMode,
    compose,
    compose_path,
    identity_of,
    opposite,
    validate_axioms,
)
from fuzzycat.constructions import unit_interval_category
from fuzzycat.degrees import TNorm
from fuzzycat.errors import ArrowError, ComposabilityError, DuplicateIdError, ObjectError, TotalityError

from generators import crisp, random_concrete_category, random_monoid_category, random_suite

F = Fraction


def chain_category(gf_degree="0.5"):
    """A -f-> B -g-> C with g.f recorded at ``gf_degree``."""
    return FuzzyCategory.build(
        "ABC",
        [
            ("1_A", "A", "A", 1), ("1_B", "B", "B", 1), ("1_C", "C", "C", 1),
            ("f", "A", "B", "0.7"), ("g", "B", "C", "0.5"), ("gf", "A", "C", gf_degree),
        ],
        {"A": "1_A", "B": "1_B", "C": "1_C"},
        {
            ("1_A", "1_A"): "1_A", ("1_B", "1_B"): "1_B", ("1_C", "1_C"): "1_C",
            ("f", "1_A"): "f", ("1_B", "f"): "f",
            ("g", "1_B"): "g", ("1_C", "g"): "g",
            ("gf", "1_A"): "gf", ("1_C", "gf"): "gf",
            ("g", "f"): "gf",
        },
    )


def with_degree(c, arrow_id, degree):
    return replace(c, arrows=tuple(
        Arrow(a.id, a.dom, a.cod, degree) if a.id == arrow_id else a for a in c.arrows
    ))


def test_compose_min_rule():
    c = chain_category()
    gf = compose(c, "g", "f")
    assert (gf.id, gf.dom, gf.cod, gf.plausibility) == ("gf", "A", "C", F(1, 2))


def test_compose_with_identity_returns_arrow():
    c = chain_category()
    assert compose(c, "1_B", "f") == c.arrow("f")
    assert compose(c, "f", "1_A") == c.arrow("f")


def test_compose_errors():
    c = chain_category()
    with pytest.raises(ComposabilityError):
        compose(c, "f", "g")
    incomplete = replace(c, composition={k: v for k, v in c.composition.items() if k != ("g", "f")})
    with pytest.raises(TotalityError):
        compose(incomplete, "g", "f")
    with pytest.raises(ArrowError):
        compose(c, "nope", "f")


def test_compose_path_folds_in_application_order():
    c = chain_category()
    assert compose_path(c, ["f", "g"]).id == "gf"
    assert compose_path(c, ["1_A", "f", "1_B", "g", "1_C"]).id == "gf"


def test_duplicate_ids_rejected():
    with pytest.raises(DuplicateIdError):
        FuzzyCategory.build("A", [("x", "A", "A", 1), ("x", "A", "A", 1)], {"A": "x"}, {})


def test_valid_chain_category():
    assert validate_axioms(chain_category()) == []


def test_strict_degree_violation():
    c = chain_category(gf_degree="0.9")
    report = validate_axioms(c)
    assert [v.law for v in report] == ["DegreeLaw"]
    assert report[0].subjects == ("g", "f", "gf")
    assert (report[0].expected, report[0].found) == (F(1, 2), F(9, 10))


def test_lax_accepts_larger_composite():
    c = chain_category(gf_degree="0.9").with_modes(law_mode=LawMode.LAX)
    assert validate_axioms(c) == []


def test_lax_rejects_smaller_composite():
    c = chain_category(gf_degree="0.3").with_modes(law_mode=LawMode.LAX)
    assert [v.law for v in validate_axioms(c)] == ["DegreeLaw"]


def test_identity_of():
    c = chain_category()
    one = identity_of(c, "B")
    assert (one.dom, one.cod, one.plausibility) == ("B", "B", 1)
    with pytest.raises(ObjectError):
        identity_of(c, "Z")


def test_identity_degree_flagged_but_accessible():
    c = with_degree(chain_category(), "1_B", F(9, 10))
    assert identity_of(c, "B").plausibility == F(9, 10)
    laws = {v.law for v in validate_axioms(c)}
    assert "IdentityDegree" in laws


def test_missing_entry_is_totality():
    c = chain_category()
    c = replace(c, composition={k: v for k, v in c.composition.items() if k != ("g", "f")})
    report = validate_axioms(c)
    assert [(v.law, v.subjects) for v in report] == [("Totality", ("g", "f"))]


def test_identity_law_violation():
    c = chain_category()
    table = dict(c.composition)
    table["1_B", "f"] = "gf"  # wrong arrow, also wrong codomain
    laws = {v.law for v in validate_axioms(replace(c, composition=table))}
    assert {"IdentityLaw", "DomCod"} <= laws


def test_bad_bookkeeping():
    c = chain_category()
    table = dict(c.composition)
    table["f", "g"] = "gf"  # not composable
    report = validate_axioms(replace(c, composition=table))
    assert [v.law for v in report] == ["DomCod"]


def test_associativity_violation():
    # one-object category with a, b where the table is deliberately non-associative
    arrows = [("e", "M", "M", 1), ("a", "M", "M", 1), ("b", "M", "M", 1)]
    table = {("e", x): x for x in "eab"} | {(x, "e"): x for x in "eab"}
    table |= {("a", "a"): "b", ("a", "b"): "a", ("b", "a"): "b", ("b", "b"): "b"}
    c = FuzzyCategory.build("M", arrows, {"M": "e"}, table)
    assert "Assoc" in {v.law for v in validate_axioms(c)}


def test_unit_interval_all_triples_associative():
    c = unit_interval_category(["0", "1/2", "1"])
    assert validate_axioms(c) == []
    # independent brute-force oracle over all 27 triples, reading composites as min
    values = [a.plausibility for a in c.arrows]
    for x, y, z in product(values, repeat=3):
        assert min(x, min(y, z)) == min(min(x, y), z)


def test_report_is_sorted():
    c = chain_category(gf_degree="0.9")
    c = with_degree(c, "1_A", F(1, 2))
    report = validate_axioms(c)
    assert report == sorted(report, key=lambda v: v.sort_key())


@pytest.mark.parametrize("t", list(TNorm))
@settings(max_examples=40, deadline=None)
@given(seed=st.integers(0, 2**32 - 1))
def test_crisp_categories_pass_every_tnorm(t, seed):
    c = random_concrete_category(random.Random(seed)).with_modes(tnorm=t)
    assert validate_axioms(c) == []


@settings(max_examples=40, deadline=None)
@given(seed=st.integers(0, 2**32 - 1), low=st.fractions(0, 1, max_denominator=20))
def test_monoid_units_at_one_rest_lower(seed, low):
    # lowering every non-invertible arrow keeps the min law intact
    c = random_monoid_category(random.Random(seed), low=low)
    assert validate_axioms(c) == []


@settings(max_examples=30, deadline=None)
@given(seed=st.integers(0, 2**32 - 1))
def test_strict_implies_lax(seed):
    for c in random_suite(seed, 12):
        for t in TNorm:
            strict = c.with_modes(LawMode.STRICT, t)
            if not validate_axioms(strict):
                assert validate_axioms(strict.with_modes(law_mode=LawMode.LAX)) == []


@settings(max_examples=30, deadline=None)
@given(seed=st.integers(0, 2**32 - 1))
def test_composite_degree_is_min_of_chain(seed):
    for c in random_suite(seed, 12):
        c = c.with_modes(LawMode.STRICT, TNorm.MIN)
        if validate_axioms(c):
            continue
        for k in range(1, 5):
            chains = [[a] for a in c.arrows]
            for _ in range(k - 1):
                chains = [ch + [b] for ch in chains for b in c.arrows_from(ch[-1].cod)]
            for ch in chains:
                got = compose_path(c, [a.id for a in ch]).plausibility
                assert got == min(a.plausibility for a in ch)


def test_opposite_is_involution_and_preserves_validity():
    for c in random_suite(7, 30):
        assert opposite(opposite(c)) == c
        if not validate_axioms(c):
            assert validate_axioms(opposite(c)) == []


def test_crisp_helper_keeps_table():
    c = crisp(chain_category())
    assert all(a.plausibility == 1 for a in c.arrows)
    assert validate_axioms(c) == []

import json

import pytest

from ringlab import harness
from ringlab.errors import ConstructionError, IncompatibleInstance, RingLabError

# Frozen status matrix for the shipped catalog at seed 0.  Each entry is
# (status, first failed hypothesis or None).  Derived by hand from the
# algebra of each instance before running anything: fixed rings, conductors,
# orbit sizes, and unit groups are all small enough to work out on paper.
EXPECTED = {
    ("char-violation", "lemma_2_1"): ("pass", None),
    ("char-violation", "lemma_2_4"):
        ("hypothesis-violation",
         "domain_with_coprime_orbit_sizes_or_group_order_unit"),
    ("char-violation", "lemma_4_6"): ("pass", None),
    ("char-violation", "prop_2_3"):
        ("hypothesis-violation", "some_maximal_ideal_qualifies"),
    ("char-violation", "prop_4_1"): ("pass", None),
    ("char-violation", "prop_4_3"):
        ("hypothesis-violation", "group_order_unit_in_subring"),
    ("char-violation", "thm_2_5_consistency"): ("pass", None),
    ("char-violation", "thm_2_6"):
        ("hypothesis-violation", "residue_char_divides_no_orbit_size"),
    ("decomposed-collapse", "example_2_8"): ("pass", None),
    ("decomposed-collapse", "lemma_2_1"): ("pass", None),
    ("decomposed-collapse", "lemma_2_4"): ("pass", None),
    ("decomposed-collapse", "lemma_3_1"):
        ("hypothesis-violation", "fixed_extension_proper"),
    ("decomposed-collapse", "lemma_4_6"): ("pass", None),
    ("decomposed-collapse", "prop_2_3"): ("pass", None),
    ("decomposed-collapse", "prop_4_1"): ("pass", None),
    ("decomposed-collapse", "prop_4_3"):
        ("hypothesis-violation", "fixed_extension_proper"),
    ("decomposed-collapse", "prop_4_9"): ("pass", None),
    ("decomposed-collapse", "thm_2_5_consistency"): ("pass", None),
    ("decomposed-collapse", "thm_2_6"):
        ("hypothesis-violation", "fixed_extension_proper"),
    ("decomposed-positive", "cor_4_10"): ("inconclusive", None),
    ("decomposed-positive", "cor_4_4"): ("pass", None),
    ("decomposed-positive", "lemma_2_1"): ("pass", None),
    ("decomposed-positive", "lemma_2_2a"): ("pass", None),
    ("decomposed-positive", "lemma_2_2b"): ("pass", None),
    ("decomposed-positive", "lemma_2_2c"): ("pass", None),
    ("decomposed-positive", "lemma_2_4"): ("pass", None),
    ("decomposed-positive", "lemma_3_1"): ("pass", None),
    ("decomposed-positive", "lemma_3_2"): ("pass", None),
    ("decomposed-positive", "lemma_4_6"): ("pass", None),
    ("decomposed-positive", "prop_2_3"): ("pass", None),
    ("decomposed-positive", "prop_4_1"): ("pass", None),
    ("decomposed-positive", "prop_4_2"):
        ("hypothesis-violation", "ambient_integrally_closed"),
    ("decomposed-positive", "prop_4_3"): ("pass", None),
    ("decomposed-positive", "prop_4_9"): ("inconclusive", None),
    ("decomposed-positive", "thm_2_5_consistency"): ("pass", None),
    ("decomposed-positive", "thm_2_6"): ("pass", None),
    ("decomposed-positive", "thm_4_7"):
        ("hypothesis-violation", "ambient_perfect_localization"),
    ("funcfield-5-2", "cor_4_10"): ("pass", None),
    ("funcfield-5-2", "lemma_2_1"): ("pass", None),
    ("funcfield-5-2", "lemma_3_1"): ("pass", None),
    ("funcfield-5-2", "lemma_3_2"): ("pass", None),
    ("funcfield-5-2", "lemma_3_4_witness"): ("pass", None),
    ("funcfield-5-2", "lemma_4_6"): ("pass", None),
    ("funcfield-5-2", "prop_3_5"): ("pass", None),
    ("funcfield-5-2", "prop_4_1"):
        ("hypothesis-violation", "extension_integral"),
    ("funcfield-5-2", "prop_4_2"): ("pass", None),
    ("funcfield-5-2", "thm_3_6"): ("pass", None),
    ("funcfield-5-2", "thm_4_7"): ("pass", None),
    ("funcfield-7-3", "cor_4_10"): ("pass", None),
    ("funcfield-7-3", "lemma_2_1"): ("pass", None),
    ("funcfield-7-3", "lemma_3_1"): ("pass", None),
    ("funcfield-7-3", "lemma_3_2"): ("pass", None),
    ("funcfield-7-3", "lemma_3_4_witness"): ("pass", None),
    ("funcfield-7-3", "lemma_4_6"): ("pass", None),
    ("funcfield-7-3", "prop_3_5"): ("pass", None),
    ("funcfield-7-3", "prop_4_1"):
        ("hypothesis-violation", "extension_integral"),
    ("funcfield-7-3", "prop_4_2"): ("pass", None),
    ("funcfield-7-3", "thm_3_6"): ("pass", None),
    ("funcfield-7-3", "thm_4_7"): ("pass", None),
    ("inert-collapse", "example_2_8"): ("pass", None),
    ("inert-collapse", "lemma_2_1"): ("pass", None),
    ("inert-collapse", "lemma_2_4"):
        ("hypothesis-violation",
         "domain_with_coprime_orbit_sizes_or_group_order_unit"),
    ("inert-collapse", "lemma_3_1"):
        ("hypothesis-violation", "fixed_extension_proper"),
    ("inert-collapse", "lemma_4_6"): ("pass", None),
    ("inert-collapse", "prop_2_3"): ("pass", None),
    ("inert-collapse", "prop_4_1"): ("pass", None),
    ("inert-collapse", "prop_4_3"):
        ("hypothesis-violation", "group_order_unit_in_subring"),
    ("inert-collapse", "prop_4_9"): ("pass", None),
    ("inert-collapse", "thm_2_5_consistency"): ("pass", None),
    ("inert-collapse", "thm_2_6"):
        ("hypothesis-violation", "fixed_extension_proper"),
    ("inert-positive", "cor_4_10"):
        ("hypothesis-violation", "ambient_normal_pair"),
    ("inert-positive", "cor_4_4"): ("pass", None),
    ("inert-positive", "lemma_2_1"): ("pass", None),
    ("inert-positive", "lemma_2_2a"): ("pass", None),
    ("inert-positive", "lemma_2_2b"): ("pass", None),
    ("inert-positive", "lemma_2_2c"): ("pass", None),
    ("inert-positive", "lemma_2_4"): ("pass", None),
    ("inert-positive", "lemma_3_1"): ("pass", None),
    ("inert-positive", "lemma_3_2"): ("pass", None),
    ("inert-positive", "lemma_4_6"): ("pass", None),
    ("inert-positive", "prop_2_3"): ("pass", None),
    ("inert-positive", "prop_4_1"): ("pass", None),
    ("inert-positive", "prop_4_2"):
        ("hypothesis-violation", "ambient_integrally_closed"),
    ("inert-positive", "prop_4_3"): ("pass", None),
    ("inert-positive", "prop_4_9"): ("pass", None),
    ("inert-positive", "thm_2_5_consistency"): ("pass", None),
    ("inert-positive", "thm_2_6"): ("pass", None),
    ("inert-positive", "thm_4_7"):
        ("hypothesis-violation", "ambient_perfect_localization"),
    ("moved-subring", "thm_2_6"):
        ("hypothesis-violation", "subring_invariant"),
    ("moved-valuation", "lemma_2_1"): ("pass", None),
    ("moved-valuation", "lemma_3_1"):
        ("hypothesis-violation", "valuation_ring_invariant"),
    ("moved-valuation", "lemma_3_2"):
        ("hypothesis-violation", "valuation_ring_invariant"),
    ("moved-valuation", "lemma_3_4_witness"): ("pass", None),
    ("moved-valuation", "prop_3_5"):
        ("hypothesis-violation", "valuation_ring_invariant"),
    ("moved-valuation", "thm_3_6"):
        ("hypothesis-violation", "valuation_ring_invariant"),
    ("ramified-collapse", "example_2_8"): ("pass", None),
    ("ramified-collapse", "lemma_2_1"): ("pass", None),
    ("ramified-collapse", "lemma_2_4"): ("pass", None),
    ("ramified-collapse", "lemma_3_1"):
        ("hypothesis-violation", "fixed_extension_proper"),
    ("ramified-collapse", "lemma_4_6"): ("pass", None),
    ("ramified-collapse", "prop_2_3"): ("pass", None),
    ("ramified-collapse", "prop_4_1"): ("pass", None),
    ("ramified-collapse", "prop_4_3"):
        ("hypothesis-violation", "fixed_extension_proper"),
    ("ramified-collapse", "prop_4_9"): ("pass", None),
    ("ramified-collapse", "thm_2_5_consistency"): ("pass", None),
    ("ramified-collapse", "thm_2_6"):
        ("hypothesis-violation", "fixed_extension_proper"),
    ("ramified-positive", "cor_4_10"): ("inconclusive", None),
    ("ramified-positive", "cor_4_4"): ("pass", None),
    ("ramified-positive", "lemma_2_1"): ("pass", None),
    ("ramified-positive", "lemma_2_2a"): ("pass", None),
    ("ramified-positive", "lemma_2_2b"): ("pass", None),
    ("ramified-positive", "lemma_2_2c"): ("pass", None),
    ("ramified-positive", "lemma_2_4"): ("pass", None),
    ("ramified-positive", "lemma_3_1"): ("pass", None),
    ("ramified-positive", "lemma_3_2"): ("pass", None),
    ("ramified-positive", "lemma_4_6"): ("pass", None),
    ("ramified-positive", "prop_2_3"): ("pass", None),
    ("ramified-positive", "prop_4_1"): ("pass", None),
    ("ramified-positive", "prop_4_2"):
        ("hypothesis-violation", "ambient_integrally_closed"),
    ("ramified-positive", "prop_4_3"): ("pass", None),
    ("ramified-positive", "prop_4_9"): ("inconclusive", None),
    ("ramified-positive", "thm_2_5_consistency"): ("pass", None),
    ("ramified-positive", "thm_2_6"): ("pass", None),
    ("ramified-positive", "thm_4_7"):
        ("hypothesis-violation", "ambient_perfect_localization"),
    ("trivial-equal", "cor_4_10"): ("pass", None),
    ("trivial-equal", "lemma_2_1"): ("pass", None),
    ("trivial-equal", "lemma_4_6"): ("pass", None),
    ("trivial-equal", "prop_4_1"): ("pass", None),
    ("trivial-equal", "prop_4_2"): ("pass", None),
    ("trivial-equal", "prop_4_9"): ("pass", None),
    ("trivial-equal", "thm_2_5_consistency"):
        ("hypothesis-violation", "extension_proper"),
    ("trivial-equal", "thm_4_7"): ("pass", None),
}


@pytest.fixture(scope="module")
def catalog_verdicts():
    return {(v.instance, v.theorem): v for v in harness.run_catalog(seed=0)}


@pytest.fixture(scope="module")
def instances():
    return {inst.name: inst for inst in harness.catalog()}


def test_catalog_covers_expected_matrix(catalog_verdicts):
    assert set(catalog_verdicts) == set(EXPECTED)


@pytest.mark.parametrize("key", sorted(EXPECTED), ids=lambda k: f"{k[0]}:{k[1]}")
def test_catalog_verdict(key, catalog_verdicts):
    v = catalog_verdicts[key]
    status, failed = EXPECTED[key]
    assert v.status == status
    if status == "hypothesis-violation":
        assert v.first_failed_hypothesis == failed
    assert v.status != "fail"


def test_every_theorem_has_a_passing_instance(catalog_verdicts):
    passed = {thm for (_, thm), v in catalog_verdicts.items()
              if v.status == "pass"}
    assert passed == set(harness.THEOREM_IDS)
    assert len(harness.THEOREM_IDS) == 22


def test_rewrite_certificates_aggregate(catalog_verdicts):
    total = sum(v.conclusion["certificates"]
                for (_, thm), v in catalog_verdicts.items()
                if thm == "lemma_2_4" and v.status == "pass")
    assert total >= 100


def test_rewrite_certificates_replay(catalog_verdicts):
    for name in ("inert-positive", "decomposed-collapse"):
        v = catalog_verdicts[(name, "lemma_2_4")]
        assert v.conclusion["all_replayed_exactly"] is True


def test_classification_kinds_match_instance_tags(catalog_verdicts, instances):
    for name, inst in instances.items():
        want = inst.expected.get("ambient_kind")
        if want is None or (name, "thm_2_5_consistency") not in catalog_verdicts:
            continue
        v = catalog_verdicts[(name, "thm_2_5_consistency")]
        if v.status == "pass":
            assert v.conclusion["kind"] == want


def test_descent_preserves_kind(catalog_verdicts, instances):
    for name in ("inert-positive", "decomposed-positive", "ramified-positive"):
        v = catalog_verdicts[(name, "thm_2_6")]
        assert v.status == "pass"
        assert v.conclusion["fixed_kind"] == instances[name].expected["fixed_kind"]
        assert v.conclusion["same_kind_as_ambient"] is True


def test_collapse_family_reports_equal_fixed_rings(catalog_verdicts):
    for name in ("inert-collapse", "decomposed-collapse", "ramified-collapse"):
        v = catalog_verdicts[(name, "example_2_8")]
        assert v.conclusion["fixed_rings_equal"] is True
        assert (v.conclusion["violated_descent_hypothesis"]
                == "fixed_extension_proper")


def test_char_violation_names_offending_orbit(catalog_verdicts):
    v = catalog_verdicts[("char-violation", "thm_2_6")]
    assert v.witnesses["residue_char"] == 2
    assert v.witnesses["offending_orbit"]["size"] == 2


def test_finite_confidence_exhaustive(catalog_verdicts):
    for (name, _), v in catalog_verdicts.items():
        if not name.startswith(("funcfield", "moved-valuation")):
            assert v.confidence == "exhaustive"


def test_funcfield_confidence_probes(catalog_verdicts):
    for (name, _), v in catalog_verdicts.items():
        if name.startswith(("funcfield", "moved-valuation")):
            assert v.confidence == "probes"


def test_violation_verdicts_have_no_conclusion(catalog_verdicts):
    for v in catalog_verdicts.values():
        if v.status == "hypothesis-violation":
            assert v.conclusion is None
            assert v.hypotheses[v.first_failed_hypothesis] is False
        elif v.status == "pass":
            assert all(v.hypotheses.values())


# ------------------------------------------------------------------ dispatch

def test_verify_unknown_theorem(instances):
    with pytest.raises(ValueError):
        harness.verify("thm_9_9", instances["trivial-equal"])


def test_verify_kind_mismatch_finite_only(instances):
    with pytest.raises(IncompatibleInstance):
        harness.verify("lemma_2_2a", instances["funcfield-5-2"])


def test_verify_kind_mismatch_funcfield_only(instances):
    with pytest.raises(IncompatibleInstance):
        harness.verify("prop_3_5", instances["trivial-equal"])


def test_instance_seed_wins():
    inst = harness.Instance("seeded", "zmod(6)", {"gens": ["1"]},
                            ["identity"], ["lemma_2_1"], seed=3)
    v = harness.verify("lemma_2_1", inst, seed=0)
    assert v.seed == 3


def test_default_checks_by_kind():
    fin = harness.Instance("f", "zmod(6)")
    fun = harness.Instance("g", "funcfield(5,x,6)")
    assert "lemma_3_4_witness" not in fin.default_checks()
    assert "lemma_2_2a" not in fun.default_checks()
    assert "lemma_2_1" in fin.default_checks()
    assert "lemma_2_1" in fun.default_checks()


# ------------------------------------------------------------------- verdict

def test_verdict_rejects_unknown_status():
    with pytest.raises(RingLabError):
        harness.Verdict("lemma_2_1", "x", "claim", {"h": True}, "maybe")


def test_verdict_violation_needs_failed_hypothesis():
    with pytest.raises(RingLabError):
        harness.Verdict("lemma_2_1", "x", "claim", {"h": True},
                        "hypothesis-violation")


def test_verdict_violation_rejects_conclusion():
    with pytest.raises(RingLabError):
        harness.Verdict("lemma_2_1", "x", "claim", {"h": False},
                        "hypothesis-violation", conclusion={"ok": True})


def test_verdict_pass_needs_all_hypotheses():
    with pytest.raises(RingLabError):
        harness.Verdict("lemma_2_1", "x", "claim", {"h": False}, "pass",
                        conclusion={"ok": True})


def test_verdict_pass_needs_conclusion():
    with pytest.raises(RingLabError):
        harness.Verdict("lemma_2_1", "x", "claim", {"h": True}, "pass")


def test_verdict_rejects_float_witness():
    with pytest.raises(RingLabError):
        harness.Verdict("lemma_2_1", "x", "claim", {"h": True}, "pass",
                        conclusion={"ok": True}, witnesses={"t": 0.5})


def test_verdict_serialization_omits_runtime():
    v = harness.Verdict("lemma_2_1", "x", "claim", {"h": True}, "pass",
                        conclusion={"ok": True})
    v.runtime = 1.25
    doc = v.to_dict()
    assert "runtime" not in doc
    assert "first_failed_hypothesis" not in doc


def test_verdict_serialization_names_failure():
    v = harness.Verdict("lemma_2_1", "x", "claim",
                        {"a": True, "b": False, "c": False},
                        "hypothesis-violation")
    assert v.to_dict()["first_failed_hypothesis"] == "b"


# ------------------------------------------------------------------ instance

def test_instance_from_dict_roundtrip():
    inst = harness.Instance("r", "zmod(6)", "diag", ["swap"], ["lemma_2_1"],
                            seed=7, tags=["x"])
    again = harness.Instance.from_dict(inst.to_dict())
    assert again.to_dict() == inst.to_dict()


def test_instance_from_dict_rejects_unknown_field():
    with pytest.raises(ConstructionError):
        harness.Instance.from_dict({"ring": "zmod(6)", "extra": 1})


def test_instance_from_dict_requires_ring():
    with pytest.raises(ConstructionError):
        harness.Instance.from_dict({"name": "x"})


def test_instance_from_dict_rejects_unknown_check():
    with pytest.raises(ConstructionError):
        harness.Instance.from_dict({"ring": "zmod(6)", "checks": ["thm_9"]})


def test_instance_from_dict_rejects_bad_seed():
    with pytest.raises(ConstructionError):
        harness.Instance.from_dict({"ring": "zmod(6)", "seed": "zero"})


# -------------------------------------------------------------------- report

def test_report_bytes_are_deterministic():
    def run():
        insts = [i for i in harness.catalog()
                 if i.name in ("trivial-equal", "funcfield-5-2")]
        return harness.report_json(harness.run_catalog(0, insts), seed=0)
    assert run() == run()


def test_report_shape():
    insts = [i for i in harness.catalog() if i.name == "trivial-equal"]
    doc = json.loads(harness.report_json(harness.run_catalog(0, insts)))
    assert doc["schema"] == "ringlab/1"
    assert doc["seed"] == 0
    keys = [(d["instance"], d["theorem"]) for d in doc["verdicts"]]
    assert keys == sorted(keys)
    for d in doc["verdicts"]:
        assert set(d) >= {"theorem", "instance", "claim", "status",
                          "confidence", "hypotheses", "conclusion",
                          "witnesses", "seed"}


def test_summary_table_tags_probe_passes(catalog_verdicts):
    table = harness.summary_table(catalog_verdicts.values())
    assert "PASS-on-probes" in table
    assert "HYPOTHESIS-VIOLATION" in table
    lines = table.splitlines()
    assert len(lines) == len(catalog_verdicts)


def test_funcfield_statuses_stable_across_seeds(instances):
    inst = instances["funcfield-5-2"]
    for tid in ("lemma_2_1", "lemma_3_2", "lemma_4_6"):
        assert harness.verify(tid, inst, seed=1).status == "pass"

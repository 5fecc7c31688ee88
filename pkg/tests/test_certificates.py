"""Tests for the verification campaigns and their report contracts."""

import json

from basilica import certificates


def test_key_lemma_report_certifies_small_families():
    for n in range(2):
        report = certificates.key_lemma_report(n, slack=2)
        assert report["certified"]
        assert report["exhaustive"]
        assert report["min_edges_seen"] == 2 * n + 4
        assert report["defect_histogram"] == {str(n + 3): report["classes_visited"]}
        assert report["violations"] == []
        assert report["n"] == n and report["slack"] == 2
        json.dumps(report)


def test_key_lemma_report_is_inconclusive_under_a_tiny_budget():
    report = certificates.key_lemma_report(1, slack=2, node_budget=3)
    assert not report["exhaustive"]
    assert not report["certified"]
    assert report["violations"] == []


def test_quarter_spaces_report():
    report = certificates.quarter_spaces_report(1)
    assert report["certified"]
    assert report["distinct_witnesses"] == 4
    assert report["anchor_rank"] == 12
    for signature, entry in report["results"].items():
        assert entry["rank"] == 8
        assert entry["signature"] == signature
        assert "indeterminate" not in entry["statuses"]
    json.dumps(report)


def test_detour_report():
    report = certificates.detour_report()
    assert report["certified"]
    assert len(report["results"]) == 10
    for entry in report["results"]:
        assert entry["endpoint_matches"]
        assert entry["wall_crossings"] == 0
        assert entry["wall_side"] == "+"
        assert entry["max_intermediate_rank"] <= entry["top_rank"] - 1
        assert entry["pinched_square_distinct"]
    json.dumps(report)


def test_nerve_report():
    report = certificates.nerve_report(0)
    assert report["certified"]
    assert report["results"]["betti"] == [1, 1]
    assert all(size >= 1 for size in report["results"]["cover_sizes"].values())
    json.dumps(report)


def test_descending_links_report():
    report = certificates.descending_links_report(node_budget=40)
    assert report["certified"]
    assert report["results"]["base_link_betti"] == [2, 0]
    assert report["results"]["all_sampled_connected"]
    assert report["results"]["sampled_links"] >= 1
    json.dumps(report)


def test_diagram_algebra_report():
    report = certificates.diagram_algebra_report(seed=5, count=60)
    assert report["certified"]
    assert report["results"]["failures"] == []
    assert report["results"]["checks"] == 60
    json.dumps(report)


def test_reports_carry_version_and_campaign():
    report = certificates.quarter_spaces_report(0)
    assert report["campaign"] == "quarter-spaces"
    assert report["version"] == certificates.__version__

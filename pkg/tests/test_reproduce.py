"""
Tests for the reproduction suite: individual claims, rendering and the runner.
"""

import json

import pytest

from prodgraph import reproduce
from prodgraph.errors import HypothesisError
from prodgraph.reproduce import (
    ClaimRecord,
    ClaimResult,
    ClaimSpec,
    Report,
    build_claims,
    check_cart_kron_only_if,
    check_cartesian_connectivity,
    check_cartesian_diameter,
    check_cartesian_distance_spectrum,
    check_cartesian_not_distance_regular,
    check_cycle_distance_regular,
    check_cycle_spectra,
    check_degree_formulas,
    check_distinct_distance_eigenvalues,
    check_eigensolver,
    check_kronecker_components,
    check_kronecker_cycle_diameter,
    check_kronecker_cycle_distance_spectrum,
    check_never_isomorphic,
    check_odd_cycle_map,
    check_product_adjacency_spectra,
    check_strong_lex,
    run_claim,
    run_reproduce,
    write_report,
)


def always_violated(n: int) -> ClaimResult:
    raise HypothesisError(f"n={n} is not allowed here")


def record(claim_id: str, passed: bool = True) -> ClaimRecord:
    return ClaimRecord(claim_id, "anchor", {"k": 1}, {"k": 1}, passed, "exact", 0.5, ("k",))


class TestRegistry:
    """Claim ids and parameter ranges."""

    def test_ids_for_max_n_five(self):
        ids = [spec.claim_id for spec in build_claims(5)]
        for expected in (
            "thm3.1-odd-n3",
            "thm3.1-odd-n5",
            "thm3.3-n3",
            "thm3.3-n5",
            "remark3.4-n5",
            "drg-cart-n5",
            "drg-cycle-n3",
            "thm2.7-cart-m3-n5",
            "thm2.7-cart-m5-n5",
            "thm3.1-only-if",
            "thm2.1-degrees",
            "lemma2.2-connectivity",
            "thm2.3-kronecker-components",
            "thm2.4-diameter",
            "thm2.5-kronecker-diameter",
            "thm2.6-spectra",
            "thm3.2-cycle-spectra",
            "strong-lex",
            "never-iso",
            "eigensolver",
        ):
            assert expected in ids
        assert "remark3.4-n3" not in ids
        assert "thm3.1-odd-n7" not in ids
        assert len(ids) == len(set(ids))

    def test_even_max_n_stops_at_lower_odd(self):
        ids = [spec.claim_id for spec in build_claims(8)]
        assert "thm3.1-odd-n7" in ids
        assert "thm3.1-odd-n8" not in ids

    def test_cartesian_spectrum_claims_are_capped(self):
        ids = [spec.claim_id for spec in build_claims(13)]
        assert "thm2.7-cart-m7-n7" in ids
        assert "thm2.7-cart-m9-n9" not in ids
        assert "thm3.3-n13" in ids

    def test_max_n_below_three(self):
        with pytest.raises(ValueError):
            build_claims(2)


class TestOddCycleClaims:
    """Per-n claims with the values they render."""

    @pytest.mark.parametrize("n", [3, 5, 7])
    def test_odd_cycle_map(self, n):
        result = check_odd_cycle_map(n)
        assert result.passed
        assert result.computed == {"edges": 2 * n * n, "verified": True}

    def test_kronecker_distance_spectrum_line(self):
        spec = ClaimSpec("thm3.3-n3", "anchor", check_kronecker_cycle_distance_spectrum, {"n": 3})
        assert run_claim(spec).render() == "thm3.3-n3: zero-mult=4, pass"

    def test_distinct_eigenvalues_line(self):
        spec = ClaimSpec("remark3.4-n5", "anchor", check_distinct_distance_eigenvalues, {"n": 5})
        assert run_claim(spec).render() == "remark3.4-n5: distinct=4, diam=4, pass"

    @pytest.mark.parametrize("n", [7, 9])
    def test_distinct_eigenvalues(self, n):
        result = check_distinct_distance_eigenvalues(n)
        assert result.passed
        assert result.computed["distinct"] == (n + 3) // 2
        assert result.computed["diam"] == n - 1

    def test_cartesian_distance_spectrum_line(self):
        spec = ClaimSpec("thm2.7-cart-m3-n5", "anchor", check_cartesian_distance_spectrum, {"m": 3, "n": 5})
        assert run_claim(spec).render() == "thm2.7-cart-m3-n5: perron=28, pass"

    def test_cartesian_witness(self):
        result = check_cartesian_not_distance_regular(5)
        assert result.passed
        assert result.computed["x"] == [0, 0]
        assert result.computed["y"] == [0, 2]
        assert result.computed["z"] == [4, 4]
        assert result.computed["c-values"] == [1, 2]

    def test_cycle_distance_regular(self):
        result = check_cycle_distance_regular(7)
        assert result.passed
        assert result.computed["array"] == "(2,1,1;1,1,1)"


class TestCorpusClaims:
    """Sweeps over a reduced corpus."""

    def test_structural_claims(self):
        assert check_degree_formulas(3, 4).passed
        assert check_cartesian_connectivity(3).passed
        assert check_kronecker_components(3, 4).passed
        assert check_cartesian_diameter(3, 4).passed
        assert check_kronecker_cycle_diameter(7).passed

    def test_spectral_claims(self):
        assert check_product_adjacency_spectra(3, 4).passed
        assert check_cycle_spectra(9).passed
        assert check_eigensolver(max_order=8).passed

    def test_isomorphism_claims(self):
        assert check_strong_lex(None).passed
        assert check_never_isomorphic(3, None).passed

    @pytest.mark.slow
    def test_cart_kron_only_if(self):
        result = check_cart_kron_only_if(3, 7, None)
        assert result.passed
        assert result.computed["disagreements"] == 0
        # K1/K1, C3/C3, C5/C5, C7/C7
        assert result.computed["isomorphic"] == 4


class TestRunner:
    """run_claim, Report and run_reproduce."""

    def test_library_error_becomes_failed_record(self):
        spec = ClaimSpec("bad-n4", "anchor", always_violated, {"n": 4})
        rec = run_claim(spec)
        assert not rec.passed
        assert rec.rule == "error"
        assert rec.render() == "bad-n4: error=n=4 is not allowed here, FAIL"
        assert rec.to_dict()["error"] == "n=4 is not allowed here"

    def test_report(self, tmp_path):
        report = Report(max_n=5, claims=(record("a-n1"), record("b-n2", passed=False)))
        assert not report.all_passed
        assert [r.claim_id for r in report.failed] == ["b-n2"]
        assert report.claim("a-n1").passed
        with pytest.raises(KeyError):
            report.claim("missing")
        assert report.render_text() == ["a-n1: k=1, pass", "b-n2: k=1, FAIL"]

        path = tmp_path / "report.json"
        write_report(report, path)
        data = json.loads(path.read_text())
        assert data["passed"] == 1
        assert data["failed"] == 1
        assert data["claims"][1] == {
            "id": "b-n2",
            "anchor": "anchor",
            "computed": {"k": 1},
            "expected": {"k": 1},
            "rule": "exact",
            "pass": False,
            "elapsed": 0.5,
        }

    @pytest.mark.parametrize("jobs", [1, 2])
    def test_run_reproduce_sorts_naturally(self, monkeypatch, jobs):
        claims = [
            ClaimSpec(f"thm3.1-odd-n{n}", "anchor", check_odd_cycle_map, {"n": n})
            for n in (11, 3, 9)
        ]
        monkeypatch.setattr(reproduce, "build_claims", lambda *args, **kwargs: claims)
        report = run_reproduce(max_n=11, jobs=jobs)
        assert [c.claim_id for c in report.claims] == [
            "thm3.1-odd-n3",
            "thm3.1-odd-n9",
            "thm3.1-odd-n11",
        ]
        assert report.all_passed

    @pytest.mark.slow
    def test_small_full_suite(self, tmp_path):
        report = run_reproduce(max_n=5, exhaustive_order=3, max_order=4)
        assert report.all_passed, [r.render() for r in report.failed]
        assert report.claim("remark3.4-n5").render() == "remark3.4-n5: distinct=4, diam=4, pass"
        write_report(report, tmp_path / "report.json")
        data = json.loads((tmp_path / "report.json").read_text())
        assert data["failed"] == 0
        assert data["max_n"] == 5


class TestDegenerateSpectraClaims:
    """Claims whose matrices carry large zero eigenspaces."""

    @pytest.mark.parametrize("n", [9, 11])
    def test_kronecker_cycle_distance_spectrum(self, n):
        result = check_kronecker_cycle_distance_spectrum(n)
        assert result.passed
        assert result.computed["zero-mult"] == (n - 1) ** 2

    def test_cartesian_distance_spectrum_of_large_cycles(self):
        result = check_cartesian_distance_spectrum(9, 9)
        assert result.passed
        assert result.computed["perron"] == 360

    @pytest.mark.slow
    def test_default_corpus_adjacency_spectra(self):
        result = check_product_adjacency_spectra(5, 8)
        assert result.passed, result.computed

    @pytest.mark.slow
    def test_default_suite_at_seven(self):
        report = run_reproduce(max_n=7)
        assert report.all_passed, [r.render() for r in report.failed]

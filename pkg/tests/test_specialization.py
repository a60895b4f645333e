import pytest

from app.errors import ScanExhausted
from app.hilbert.progression import primitivity_progression
from app.hilbert.specialization import (
    _scan as scan_candidates,
    irreducible_specializations,
    specialize_polyring_irreducible,
    status_over_z,
)
from app.polys.factor import kronecker_factor


def _scan(polys, want, cap=None, strict=False):
    progression = primitivity_progression(polys)
    return irreducible_specializations(polys, progression, want, cap, strict=strict)


def _scan_with(polys, classify, want, cap, strict=False):
    """(1, 2, 3, ...) 후보를 주어진 분류기로 스캔합니다."""
    return scan_candidates(
        polys, iter(range(1, 100)), classify, want, cap, "test", strict=strict
    )


def test_status_over_z(parse):
    y2_plus_1 = parse("y^2+1")[0]
    assert status_over_z(y2_plus_1) == "irreducible"
    assert status_over_z(parse("y^2-1")[0]) == "reducible"
    assert status_over_z(parse("2y+2")[0]) == "imprimitive"
    assert status_over_z(parse("5", "y")[0]) == "constant"


class TestIntegerScan:
    def test_monic_quadratic(self, parse):
        report = _scan(parse("y^2 + t"), want=5)
        assert not report.exhausted
        assert len(report.hits) == 5
        assert {1, 2, 3} <= set(report.hits)
        assert 0 not in report.hits and -1 not in report.hits
        assert -4 not in report.hits

    def test_hits_are_never_refuted(self, parse):
        (P,) = polys = parse("y^2 + t")
        report = _scan(polys, want=20, cap=100)
        assert len(report.hits) >= 20
        for m in report.hits:
            assert kronecker_factor(P.eval_coeffs(m)).is_irreducible

    def test_linear_progression_always_hits(self, parse):
        report = _scan(parse("t*y + t + 2"), want=10)
        assert all(entry.hit for entry in report.entries)
        assert all(m % 2 == 1 for m in report.hits)

    def test_difference_of_squares_exhausts(self, parse):
        report = _scan(parse("y^2 - t^2"), want=1, cap=10)
        assert report.hits == []
        assert report.exhausted
        assert len(report.entries) == 10


class TestPolyringScan:
    def test_square_root_of_u_is_missing(self, parse):
        report = specialize_polyring_irreducible(
            parse("y^2 - t", ring="Z[u]"), degree=1, height=1, want=9
        )
        assert report.exhausted
        assert not report.evidence_only
        assert "u" in [str(m) for m in report.hits]
        assert "0" not in [str(m) for m in report.hits]

    def test_difference_of_squares_at_u(self, parse):
        report = specialize_polyring_irreducible(
            parse("y^2 - t^2", ring="Z[u]"), degree=1, height=1, want=9
        )
        entry = next(e for e in report.entries if str(e.m) == "u")
        assert not entry.hit
        assert entry.statuses == ["reducible"]

    def test_swan_specialization_over_f2(self, parse):
        report = specialize_polyring_irreducible(
            parse("y^8 + t", ring="F2[u]"), degree=3, want=16
        )
        assert report.evidence_only
        by_m = {str(e.m): e for e in report.entries}
        assert by_m["u^3"].hit
        assert not by_m["0"].hit


class TestPartialReports:
    @staticmethod
    def _interrupting(after):
        calls = []

        def classify(F):
            calls.append(F)
            if len(calls) > after:
                raise KeyboardInterrupt
            return status_over_z(F)

        return classify

    def test_interrupt_keeps_finished_entries(self, parse):
        polys = parse("y^2 + t")
        report = _scan_with(polys, self._interrupting(3), want=10, cap=50)
        assert report.interrupted
        assert report.exhausted
        assert [e.m for e in report.entries] == [1, 2, 3]
        assert report.hits == [1, 2, 3]

    def test_strict_scan_raises(self, parse):
        with pytest.raises(ScanExhausted) as error:
            _scan(parse("y^2 - t^2"), want=1, cap=5, strict=True)
        assert error.value.details["scanned"] == 5

    def test_strict_scan_with_enough_hits(self, parse):
        report = _scan(parse("y^2 + t"), want=3, cap=50, strict=True)
        assert not report.exhausted

    def test_interrupt_is_not_strict_failure(self, parse):
        polys = parse("y^2 + t")
        report = _scan_with(polys, self._interrupting(0), want=5, cap=50, strict=True)
        assert report.interrupted and report.entries == []

    def test_strict_polyring_scan(self, parse):
        with pytest.raises(ScanExhausted):
            specialize_polyring_irreducible(
                parse("y^2 - t", ring="Z[u]"), degree=1, height=1, want=9, strict=True
            )

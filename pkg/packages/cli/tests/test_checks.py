"""Tests for the ideal-gate self-checks."""

from __future__ import annotations

from czsim_cli.checks import CheckResult, protocol_table_residual, run_ideal_checks


class TestIdealChecks:
    """Tests for run_ideal_checks."""

    def test_all_pass(self) -> None:
        """Test that every check passes on the zero-noise gate."""
        results = run_ideal_checks()
        assert [r.name for r in results if not r.passed] == []

    def test_expected_checks(self) -> None:
        """Test that the CNOT, A3 and protocol table checks are present."""
        names = {r.name for r in run_ideal_checks()}
        assert {"protocol_table", "ideal_cnot", "kraus_a3_zero", "kraus_completeness"} <= names

    def test_protocol_table_exact(self) -> None:
        """Test that the ideal pulses reproduce the table to 1e-15."""
        assert protocol_table_residual() <= 1e-15


class TestCheckResult:
    """Tests for CheckResult."""

    def test_describe_pass(self) -> None:
        """Test the PASS line."""
        line = CheckResult(name="ideal_cnot", residual=0.0, tolerance=1e-12).describe()
        assert line.startswith("PASS ideal_cnot")
        assert "residual=0.0" in line

    def test_describe_fail(self) -> None:
        """Test the FAIL line."""
        result = CheckResult(name="kraus_a3_zero", residual=1e-3, tolerance=1e-12)
        assert not result.passed
        assert result.describe().startswith("FAIL kraus_a3_zero")

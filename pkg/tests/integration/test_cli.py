"""Integration tests for the ``kbb`` command line."""

from __future__ import annotations

import importlib
import json
from pathlib import Path
from typing import Any

import pytest

from kummer_bb.cli import verify
from kummer_bb.cli.main import EXIT_FAILURE, EXIT_OK, EXIT_USAGE, main
from kummer_bb.cli.models import CheckResult
from kummer_bb.errors import InvariantViolationError

from ..conftest import FIXTURES_DIR, SCHEMAS_DIR

cli_main = importlib.import_module("kummer_bb.cli.main")


def run(capsys: pytest.CaptureFixture[str], *argv: str) -> tuple[int, str, str]:
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(capsys: pytest.CaptureFixture[str], *argv: str) -> Any:
    code, out, err = run(capsys, *argv)
    assert code == EXIT_OK, err
    return json.loads(out)


# ── Boundary graphs ─────────────────────────────────────────────────


class TestBoundary:
    def test_l2_json_matches_golden(self, capsys: pytest.CaptureFixture[str]) -> None:
        expected = json.loads((FIXTURES_DIR / "l2_graph.json").read_text(encoding="utf-8"))
        assert run_json(capsys, "boundary", "--l2") == expected

    def test_l2_dot_matches_golden(self, capsys: pytest.CaptureFixture[str]) -> None:
        code, out, _ = run(capsys, "boundary", "--l2", "--format", "dot")
        assert code == EXIT_OK
        assert out == (FIXTURES_DIR / "l2_graph.dot").read_text(encoding="utf-8")

    def test_l2_text_carries_notes(self, capsys: pytest.CaptureFixture[str]) -> None:
        code, out, _ = run(capsys, "boundary", "--l2", "--format", "text")
        assert code == EXIT_OK
        assert "note: P1 and P2 share the trivial star class" in out
        assert "C2   type 2 / Γ₁(2), at most 1: P2, P3" in out

    def test_p5(self, capsys: pytest.CaptureFixture[str]) -> None:
        data = run_json(capsys, "boundary", "--p", "5")
        assert data["ambient"] == "L2p2"
        assert data["p"] == 5
        assert len(data["points"]) == 9
        assert [c["count_bound"] for c in data["curves"]] == [48, 768, 40, 40]
        degrees = {c["id"]: 0 for c in data["curves"]}
        for edge in data["edges"]:
            degrees[edge["curve"]] += 1
        assert degrees == {"C1": 1, "C2": 2, "Cp": 6, "C2p": 9}

    def test_p7_dot(self, capsys: pytest.CaptureFixture[str]) -> None:
        code, out, _ = run(capsys, "boundary", "--p", "7", "--format", "dot")
        assert code == EXIT_OK
        assert out.startswith('graph "L2p2_p7" {\n')
        assert out.count(" -- ") == 1 + 2 + 8 + 12

    def test_out_file(self, capsys: pytest.CaptureFixture[str], tmp_path: Path) -> None:
        target = tmp_path / "graphs" / "l2.dot"
        code, out, _ = run(capsys, "boundary", "--l2", "--format", "dot", "--out", str(target))
        assert code == EXIT_OK
        assert out == ""
        assert target.read_text(encoding="utf-8") == (FIXTURES_DIR / "l2_graph.dot").read_text(encoding="utf-8")


# ── Reports ─────────────────────────────────────────────────────────


class TestReports:
    def test_points(self, capsys: pytest.CaptureFixture[str]) -> None:
        data = run_json(capsys, "points", "--p", "5")
        assert data["count"] == 9
        by_id = {pt["id"]: pt for pt in data["points"]}
        assert by_id["p2"]["rep"] == [2, 0, 2, 14, 1, 1]
        assert by_id["p2"]["divisor"] == 2
        assert by_id["pp(0)"]["note"]

    def test_curves(self, capsys: pytest.CaptureFixture[str]) -> None:
        data = run_json(capsys, "curves", "--p", "5")
        assert [c["type_a"] for c in data["curves"]] == [1, 2, 5, 10]
        assert data["curves"][3]["normal_form"]["A"] == [[0, 10], [1, 0]]
        assert data["curves"][3]["group"] == {"name": "Gamma1(10)", "level": 10, "index": 36, "cusps": 8}

    def test_bounds(self, capsys: pytest.CaptureFixture[str]) -> None:
        data = run_json(capsys, "bounds", "--p", "5")
        assert [(b["type"], b["literal"], b["alternative"]) for b in data["bounds"]] == [
            ("1", 48, 48),
            ("2", 768, 768),
            ("p", 40, 40),
            ("2p", 40, 20),
        ]

    def test_index_bound(self, capsys: pytest.CaptureFixture[str]) -> None:
        assert run_json(capsys, "index-bound", "--p", "5") == {"p": 5, "bound": 6300, "refined": 6300}

    def test_classnum(self, capsys: pytest.CaptureFixture[str]) -> None:
        data = run_json(capsys, "classnum", "-300")
        assert data["class_number"] == data["by_reduction"] == data["from_conductor"] == 6
        assert len(data["forms"]) == 6
        assert [1, 0, 75] in data["forms"]

    def test_fqm_l2(self, capsys: pytest.CaptureFixture[str]) -> None:
        data = run_json(capsys, "fqm", "--l2", "--presentation", "snf")
        assert data["orders"] == [2, 6]
        assert data["size"] == 12
        assert data["isotropic_count"] == 2

    def test_fqm_p5(self, capsys: pytest.CaptureFixture[str]) -> None:
        data = run_json(capsys, "fqm", "--p", "5", "--presentation", "marked")
        assert data["orders"] == [6, 50]
        assert data["isotropic_count"] == 10

    def test_text_report(self, capsys: pytest.CaptureFixture[str]) -> None:
        code, out, _ = run(capsys, "index-bound", "--p", "7", "--format", "text")
        assert code == EXIT_OK
        assert "bound: 33712" in out.splitlines()


# ── Verification ────────────────────────────────────────────────────


class TestVerify:
    def test_passing_suite(self, capsys: pytest.CaptureFixture[str]) -> None:
        data = run_json(capsys, "verify", "index")
        assert data["passed"] is True
        assert data["seed"] == 42
        assert [c["name"] for c in data["checks"]] == ["index p=5", "index p=7", "index p=11"]

    def test_failed_check_exits_3(
        self, capsys: pytest.CaptureFixture[str], monkeypatch: pytest.MonkeyPatch
    ) -> None:
        failing = [CheckResult(name="stub", passed=False, count=0)]
        monkeypatch.setitem(verify.SUITES, "index", lambda params: failing)
        code, out, _ = run(capsys, "verify", "index", "--format", "text")
        assert code == EXIT_FAILURE
        assert out.splitlines()[-1] == "FAIL index seed=42"


# ── Errors and exit codes ───────────────────────────────────────────


class TestExitCodes:
    def test_composite_p(self, capsys: pytest.CaptureFixture[str]) -> None:
        code, out, err = run(capsys, "boundary", "--p", "4")
        assert code == EXIT_USAGE
        assert out == ""
        assert "p must be a prime > 3" in err

    def test_missing_p(self, capsys: pytest.CaptureFixture[str]) -> None:
        code, _, err = run(capsys, "points")
        assert code == EXIT_USAGE
        assert err.startswith("error: --p is required")

    def test_dot_needs_a_graph(self, capsys: pytest.CaptureFixture[str]) -> None:
        code, _, err = run(capsys, "bounds", "--p", "5", "--format", "dot")
        assert code == EXIT_USAGE
        assert "DOT output" in err

    def test_positive_discriminant(self, capsys: pytest.CaptureFixture[str]) -> None:
        code, _, _ = run(capsys, "classnum", "5")
        assert code == EXIT_USAGE

    def test_internal_error(
        self, capsys: pytest.CaptureFixture[str], monkeypatch: pytest.MonkeyPatch
    ) -> None:
        def broken(p: int) -> None:
            raise InvariantViolationError("broken graph")

        monkeypatch.setattr(cli_main, "build_boundary_graph", broken)
        code, _, err = run(capsys, "boundary", "--p", "5")
        assert code == EXIT_FAILURE
        assert "error [INVARIANT_VIOLATION]: broken graph" in err

    def test_unknown_command(self) -> None:
        with pytest.raises(SystemExit) as exc_info:
            main(["nonsense"])
        assert exc_info.value.code == 2


# ── Schemas ─────────────────────────────────────────────────────────


class TestSchemas:
    def test_written_schemas_match_shipped(
        self, capsys: pytest.CaptureFixture[str], tmp_path: Path
    ) -> None:
        code, _, _ = run(capsys, "schemas", "--out", str(tmp_path))
        assert code == EXIT_OK
        written = sorted(p.name for p in tmp_path.glob("*.schema.json"))
        shipped = sorted(p.name for p in SCHEMAS_DIR.glob("*.schema.json"))
        assert written == shipped
        for name in written:
            ours = json.loads((tmp_path / name).read_text(encoding="utf-8"))
            theirs = json.loads((SCHEMAS_DIR / name).read_text(encoding="utf-8"))
            assert ours["title"] == theirs["title"]
            assert ours["required"] == theirs["required"]
            assert ours["properties"].keys() == theirs["properties"].keys()

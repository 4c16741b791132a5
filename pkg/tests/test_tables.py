"""Table engine tests: determinism, rendering round-trips, golden diffs and
flag fidelity."""

from __future__ import annotations

import json

import pytest

from pilotsize import tables as tb


class TestGenerate:
    def test_t1_cell(self):
        table = tb.generate("T1")
        # row order: 90, 95, 99; columns: confidence, 1%, 5%, 10%, ...
        assert table.headers[3] == "10%"
        assert table.rows[1][0].value == 0.95
        assert table.rows[1][3].value == 234

    def test_t9_row(self):
        table = tb.generate("T9_one_sided")
        row = next(r for r in table.rows
                   if r[0].value == 0.01 and r[1].value == 0.95)
        assert tuple(c.value for c in row[2:]) == (299, 299, 300)

    def test_t13_cell(self):
        table = tb.generate("T13")
        row = next(r for r in table.rows if r[0].value == 0.95)
        lower, upper = row[4].value  # E = 20 column
        assert round(lower, 2) == 0.67
        assert round(upper, 2) == 1.64

    def test_empty_grid_rejected(self):
        with pytest.raises(ValueError, match="non-empty"):
            tb.TableSpec("T1_std_size", grids={"deltas": ()})
        with pytest.raises(ValueError, match="non-empty"):
            tb.TableSpec("T1_std_size", confidences=())

    def test_unknown_table(self):
        with pytest.raises(ValueError):
            tb.generate("T14")
        with pytest.raises(ValueError):
            tb.TableSpec("nope")

    def test_grid_override(self):
        table = tb.generate(tb.TableSpec("T2_std_acc", grids={"ns": (5, 50)}))
        assert table.headers == ("confidence", "5", "50")
        assert len(table.rows) == 3


class TestRender:
    @pytest.mark.parametrize("fmt", ["csv", "tsv", "markdown", "json"])
    @pytest.mark.parametrize("tid", ["T5", "T11", "T12"])
    def test_deterministic(self, fmt, tid):
        a = tb.render(tb.generate(tid), fmt)
        b = tb.render(tb.generate(tid), fmt)
        assert a == b

    def test_json_round_trip(self):
        for tid in ("T1", "T5", "T13"):
            table = tb.generate(tid)
            assert tb.parse_rendered_json(tb.render(table, "json")) == table

    def test_format_agreement(self):
        table = tb.generate("T5")
        csv_text = tb.render(table, "csv").replace("*", "")
        md_text = tb.render(table, "markdown").replace("~~", "")
        json_cells = json.loads(tb.render(table, "json"))["rows"]
        for i, row in enumerate(table.rows):
            for j, cell in enumerate(row):
                assert json_cells[i][j]["display"] == cell.display
                assert cell.display in csv_text
                assert cell.display in md_text

    def test_invalid_cells_are_marked(self):
        table = tb.generate("T7")
        md_text = tb.render(table, "markdown")
        csv_text = tb.render(table, "csv")
        assert "(~~" in md_text   # crossed-out approximations
        assert "*)" in csv_text   # asterisk fallback for plain text

    def test_unknown_format(self):
        with pytest.raises(ValueError):
            tb.render(tb.generate("T12"), "xml")

    def test_markdown_shape(self):
        text = tb.render(tb.generate("T12"), "markdown")
        lines = text.strip().splitlines()
        assert len(lines) == 2 + 3
        assert all(line.startswith("|") and line.endswith("|") for line in lines)

    def test_markdown_matches_golden_rendering(self):
        # integer tables render byte-identically from golden and regeneration
        for tid in ("T1", "T9", "T12"):
            assert tb.render(tb.generate(tid), "markdown") == \
                tb.render(tb.load_golden(tid), "markdown")


class TestGoldens:
    def test_all_tables_match_goldens(self):
        for tid in tb.TABLE_IDS:
            mismatches = tb.diff_against_golden(tid)
            assert mismatches == [], f"{tid}: {mismatches[:4]}"

    def test_perturbed_confidence_is_detected(self):
        perturbed = tb.generate(tb.TableSpec("T1_std_size",
                                             confidences=(0.90, 0.96, 0.99)))
        mismatches = tb.diff_against_golden("T1_std_size", table=perturbed)
        assert mismatches

    def test_missing_golden_file(self, tmp_path):
        with pytest.raises(FileNotFoundError):
            tb.load_golden("T1", golden_dir=str(tmp_path))

    def test_golden_dir_env_override(self, tmp_path, monkeypatch):
        monkeypatch.setenv("PILOTSIZE_GOLDEN_DIR", str(tmp_path))
        assert tb.golden_dir_path() == str(tmp_path)

    def test_validity_flags_match_goldens_exactly(self):
        # crossed-out cells must agree cell-for-cell, not just in count
        for tid in ("T5_prop_size", "T7_rare_size"):
            golden = tb.load_golden(tid)
            regen = tb.generate(tid)
            golden_invalid = {(i, j) for i, row in enumerate(golden.rows)
                              for j, c in enumerate(row) if not c.valid}
            regen_invalid = {(i, j) for i, row in enumerate(regen.rows)
                             for j, c in enumerate(row) if not c.valid}
            assert golden_invalid == regen_invalid
            assert golden_invalid  # the grids do contain invalid cells

    def test_checksum_stable(self):
        assert tb.golden_checksum() == tb.golden_checksum()
        assert len(tb.golden_checksum()) == 64

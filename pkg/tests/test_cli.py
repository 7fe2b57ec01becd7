"""CLI surface: subcommands, formats, schema stability, exit codes."""

import json

from click.testing import CliRunner

from seshadri.cli import cli

JSON_SCHEMA_KEYS = {
    "command", "inputs", "status", "exact_values", "decimal_renderings",
    "certificates", "paper_expectations",
}


def run(*args):
    return CliRunner().invoke(cli, list(args))


class TestBound:
    def test_n2_text(self):
        result = run("bound", "--n", "2")
        assert result.exit_code == 0
        assert "4/3" in result.output and "1.3333" in result.output
        assert "{3, 6}" in result.output

    def test_n20000_renders_132_5(self):
        result = run("bound", "--n", "20000")
        assert result.exit_code == 0
        assert "265/2" in result.output and "132.5" in result.output

    def test_usage_error_below_2(self):
        result = run("bound", "--n", "1")
        assert result.exit_code == 2

    def test_json_schema(self):
        result = run("bound", "--n", "100", "--format", "json")
        assert result.exit_code == 0
        payload = json.loads(result.output)
        assert JSON_SCHEMA_KEYS.issubset(payload)
        assert payload["exact_values"]["lower_bound"] == "47/5"
        assert payload["decimal_renderings"]["lower_bound"] == "9.4"
        assert payload["certificates"]["certified_min"]["certified"] is True
        assert payload["exact_values"]["priors"]["abelian_7_8"] == {
            "coef": "1/4", "radicand": "1400"
        }

    def test_full_precision_flag(self):
        result = run("bound", "--n", "100", "--full-precision")
        assert "9.4000" in result.output


class TestOmega:
    def test_membership(self):
        result = run("omega", "--n", "2", "--d", "3", "--m", "2")
        assert result.exit_code == 0
        assert "contains: True" in result.output
        assert "d_min: 3" in result.output
        assert "m_max: 2" in result.output

    def test_requires_d_or_m(self):
        assert run("omega", "--n", "2").exit_code == 2


class TestCandidates:
    def test_fiber_and_omega(self):
        result = run("candidates", "--n", "10", "--max-m", "5", "--format", "json")
        payload = json.loads(result.output)
        values = payload["exact_values"]["candidates"]
        fibers = [v["value"] for v in values if v["kind"] == "integer_fiber"]
        assert fibers == ["1/1", "2/1", "3/1"]


class TestCensus:
    def test_even_default_matches_published(self):
        result = run("census", "--from", "2", "--to", "10000", "--format", "json")
        assert result.exit_code == 0
        payload = json.loads(result.output)
        assert payload["counts"] == {
            "2": 1, "3": 59, "4": 4656, "5": 274, "6": 9, "7": 1
        }

    def test_single_n_42(self):
        result = run("census", "--from", "42", "--to", "42", "--format", "json")
        assert json.loads(result.output)["counts"] == {"7": 1}

    def test_beyond_threshold_all_m4(self):
        result = run("census", "--from", "4982", "--to", "6000", "--format", "json")
        counts = json.loads(result.output)["counts"]
        assert set(counts) == {"4"}

    def test_bad_range(self):
        assert run("census", "--from", "10", "--to", "2").exit_code == 2

    def test_parallelism_is_byte_identical(self):
        serial = run("census", "--from", "2", "--to", "1500", "--per-n",
                     "--format", "json")
        parallel = run("census", "--from", "2", "--to", "1500", "--per-n",
                       "--format", "json", "--parallel", "4")
        assert serial.output == parallel.output

    def test_csv_format(self):
        result = run("census", "--from", "42", "--to", "42", "--format", "csv")
        assert result.output == "m,count\n7,1\n"


class TestTable:
    def test_preset_paper_text(self):
        result = run("table", "--preset", "paper")
        assert result.exit_code == 0
        lines = result.output.strip().splitlines()
        assert len(lines) == 9  # header + 8 rows
        assert "132.5" in lines[-1] and "132.2876" in lines[-1]

    def test_byte_identical_across_runs(self):
        first = run("table", "--preset", "paper", "--format", "csv")
        second = run("table", "--preset", "paper", "--format", "csv")
        assert first.output == second.output

    def test_csv_decimal_points(self):
        result = run("table", "--ns", "2,100", "--format", "csv")
        assert result.output.splitlines() == [
            "n,abelian_7_8,hr_093,new_bound",
            "2,1.3229,1.3152,1.3333",
            "100,9.3541,9.3,9.4",
        ]

    def test_requires_ns_or_preset(self):
        assert run("table").exit_code == 2
        assert run("table", "--ns", "2,x").exit_code == 2
        assert run("table", "--ns", "1").exit_code == 2


class TestVerify:
    def test_small_sweep_passes(self):
        result = run("verify", "--agreement-to", "500", "--scan-cap", "5000",
                     "--format", "json")
        assert result.exit_code == 0, result.output
        payload = json.loads(result.output)
        assert payload["status"] == "ok"
        expectations = payload["paper_expectations"]
        assert expectations["sqrt58_threshold"]["pass"]
        assert expectations["ceiling_threshold_even"]["pass"]
        assert expectations["census_even_counts"]["pass"]
        assert expectations["table_regeneration"]["pass"]
        assert "8776" in payload["investigations"]["analytic_threshold"]

    def test_text_output_has_pass_lines(self):
        result = run("verify", "--agreement-to", "200", "--scan-cap", "2000")
        assert result.exit_code == 0
        assert "[PASS] sqrt58_threshold" in result.output
        assert "[INFO] analytic_threshold" in result.output


class TestBielliptic:
    def test_types_matches_published_rows(self):
        result = run("bielliptic", "types", "--format", "json")
        payload = json.loads(result.output)
        assert payload["types"][0] == {
            "type": 1, "group": "Z2", "gamma": 2,
            "multiplicities": [2, 2, 2, 2], "mu": 2, "basis": ["E/2", "F"],
        }
        assert [t["basis"][1] for t in payload["types"]] == [
            "F", "F/2", "F", "F/2", "F", "F/3", "F"
        ]

    def test_intersect(self):
        result = run("bielliptic", "intersect", "--type", "1",
                     "--c1", "1,0", "--c2", "0,1")
        assert result.exit_code == 0
        assert result.output.strip() == "1"

    def test_fiber_degrees(self):
        result = run("bielliptic", "fiber-degrees", "--type", "2", "--class", "3,5")
        assert "L.E = 10" in result.output and "L.F = 6" in result.output

    def test_star_check_false_exits_1(self):
        result = run("bielliptic", "star-check", "--c2", "3", "--mults", "2")
        assert result.exit_code == 1
        assert result.output.strip() == "false"

    def test_star_check_true(self):
        result = run("bielliptic", "star-check", "--c2", "10", "--mults", "2,3")
        assert result.exit_code == 0
        assert result.output.strip() == "true"

    def test_star_check_reducible(self):
        result = run("bielliptic", "star-check", "--c2", "8", "--components", "2",
                     "--mults", "2")
        assert result.exit_code == 0

    def test_star_check_rejects_smooth_mults(self):
        assert run("bielliptic", "star-check", "--c2", "4",
                   "--mults", "1").exit_code == 2

    def test_ratio(self):
        result = run("bielliptic", "ratio", "--type", "1", "--ample", "2,3",
                     "--curve", "1,1", "--m", "2")
        assert result.output.strip() == "5/2 = 2.5"

    def test_ratio_rejects_non_ample(self):
        assert run("bielliptic", "ratio", "--type", "1", "--ample", "0,5",
                   "--curve", "1,1", "--m", "1").exit_code == 2

    def test_invalid_type_index(self):
        assert run("bielliptic", "intersect", "--type", "9",
                   "--c1", "1,0", "--c2", "0,1").exit_code == 2

    def test_malformed_class(self):
        assert run("bielliptic", "intersect", "--type", "1",
                   "--c1", "1;0", "--c2", "0,1").exit_code == 2

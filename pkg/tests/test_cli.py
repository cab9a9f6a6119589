"""Command line surface: reports, exit codes, file round trips."""

import csv
import json
from fractions import Fraction

import pytest

from densek import load_edge_list
from densek.cli import main

K4P_TEXT = "5 7\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n3 4\n"


@pytest.fixture
def k4p_file(tmp_path):
    target = tmp_path / "k4p.edges"
    target.write_text(K4P_TEXT)
    return target


def run_json(capsys, argv):
    code = main(argv)
    out = capsys.readouterr().out
    return code, json.loads(out)


class TestSolve:
    def test_auto_report(self, capsys, k4p_file):
        code, report = run_json(capsys, ["solve", "--input", str(k4p_file), "--k", "4"])
        assert code == 0
        assert report["instance"] == {
            "path": str(k4p_file),
            "n": 5,
            "m": 7,
            "weighted": False,
        }
        assert [e["algorithm"] for e in report["entries"]] == [
            "ALG1",
            "ALG3",
            "ALG4",
            "HUB",
        ]
        assert report["best"]["density"] == {"num": 3, "den": 1, "decimal": 3.0}
        assert report["best"]["vertices"] == [0, 1, 2, 3]
        best = Fraction(report["best"]["density"]["num"], report["best"]["density"]["den"])
        for entry in report["entries"]:
            assert Fraction(entry["density"]["num"], entry["density"]["den"]) <= best
            assert entry["elapsed_ms"] >= 0

    def test_single_algorithm(self, capsys, k4p_file):
        code, report = run_json(
            capsys, ["solve", "--input", str(k4p_file), "--k", "3", "--algo", "alg4"]
        )
        assert code == 0
        assert len(report["entries"]) == 1
        assert report["entries"][0]["algorithm"] == "ALG4"
        assert report["entries"][0]["k"] == 3

    def test_oracle_ratio(self, capsys, k4p_file):
        code, report = run_json(
            capsys, ["solve", "--input", str(k4p_file), "--k", "4", "--oracle"]
        )
        assert code == 0
        assert report["oracle"]["density"] == {"num": 3, "den": 1, "decimal": 3.0}
        assert report["ratio"] == {"num": 1, "den": 1, "decimal": 1.0}

    def test_report_to_file(self, tmp_path, k4p_file):
        out = tmp_path / "report.json"
        assert main(
            ["solve", "--input", str(k4p_file), "--k", "4", "--out", str(out)]
        ) == 0
        report = json.loads(out.read_text())
        assert report["best"]["density"]["num"] == 3

    def test_csv_format(self, capsys, k4p_file):
        code = main(
            ["solve", "--input", str(k4p_file), "--k", "4", "--format", "csv"]
        )
        assert code == 0
        rows = list(csv.reader(capsys.readouterr().out.strip().splitlines()))
        assert rows[0][0] == "algorithm"
        assert len(rows) == 5

    def test_weighted_instance_runs_greedy_under_auto(self, capsys, tmp_path):
        target = tmp_path / "w.edges"
        target.write_text("4 4 weighted\n0 1 2\n1 2 1\n2 3 1\n0 3 1\n")
        code, report = run_json(capsys, ["solve", "--input", str(target), "--k", "3"])
        assert code == 0
        assert [e["algorithm"] for e in report["entries"]] == ["WGREEDY"]


class TestSolveErrors:
    def test_k_zero_is_rejected(self, capsys, k4p_file):
        assert main(["solve", "--input", str(k4p_file), "--k", "0"]) == 4
        assert "out of range" in capsys.readouterr().err

    def test_k_of_two_rejected(self, k4p_file):
        assert main(["solve", "--input", str(k4p_file), "--k", "2"]) == 4

    def test_k_above_n(self, k4p_file):
        assert main(["solve", "--input", str(k4p_file), "--k", "9"]) == 4

    def test_missing_file(self, tmp_path):
        missing = tmp_path / "nope.edges"
        assert main(["solve", "--input", str(missing), "--k", "3"]) == 7

    def test_malformed_file(self, capsys, tmp_path):
        bad = tmp_path / "bad.edges"
        bad.write_text("3 2\n0 1\n0 two\n")
        assert main(["solve", "--input", str(bad), "--k", "3"]) == 3
        assert "line 3" in capsys.readouterr().err

    def test_weighted_mismatch(self, capsys, tmp_path):
        target = tmp_path / "w.edges"
        target.write_text("3 2 weighted\n0 1 5\n1 2 1\n")
        assert main(
            ["solve", "--input", str(target), "--k", "3", "--algo", "alg1"]
        ) == 5
        assert "weighted" in capsys.readouterr().err

    def test_usage_error_exits_two(self, k4p_file):
        with pytest.raises(SystemExit) as info:
            main(["solve", "--input", str(k4p_file), "--k", "4", "--algo", "bogus"])
        assert info.value.code == 2


class TestOracleCommand:
    def test_connected_optimum(self, capsys, k4p_file):
        code, report = run_json(capsys, ["oracle", "--input", str(k4p_file), "--k", "3"])
        assert code == 0
        assert report["vertices"] == [0, 1, 2]
        assert report["density"] == {"num": 2, "den": 1, "decimal": 2.0}
        assert report["connected"] is True

    def test_unconstrained_optimum(self, capsys, tmp_path):
        target = tmp_path / "split.edges"
        target.write_text("6 6\n0 1\n0 2\n1 2\n3 4\n3 5\n4 5\n")
        code, report = run_json(
            capsys,
            ["oracle", "--input", str(target), "--k", "6", "--no-connected"],
        )
        assert code == 0
        assert report["density"]["num"] == 2

    def test_size_guard_exit_code(self, tmp_path):
        n = 25
        lines = [f"{n} {n - 1}"] + [f"{i} {i + 1}" for i in range(n - 1)]
        target = tmp_path / "long.edges"
        target.write_text("\n".join(lines) + "\n")
        assert main(["oracle", "--input", str(target), "--k", "3"]) == 6

    def test_size_guard_override(self, capsys, tmp_path):
        n = 25
        lines = [f"{n} {n - 1}"] + [f"{i} {i + 1}" for i in range(n - 1)]
        target = tmp_path / "long.edges"
        target.write_text("\n".join(lines) + "\n")
        code, report = run_json(
            capsys,
            ["oracle", "--input", str(target), "--k", "3", "--oracle-limit", "30"],
        )
        assert code == 0
        assert report["density"] == {
            "num": 4,
            "den": 3,
            "decimal": pytest.approx(4 / 3),
        }


class TestGen:
    def test_clique_path_family_header(self, capsys, tmp_path):
        out = tmp_path / "a.edges"
        assert main(["gen", "example1a", "--ell", "3", "--out", str(out)]) == 0
        assert out.read_text().splitlines()[0] == "27 29"
        assert (tmp_path / "a.json").exists()
        assert "wrote" in capsys.readouterr().out

    def test_generated_file_round_trips(self, tmp_path):
        out = tmp_path / "b.edges"
        main(["gen", "example1b", "--ell", "3", "--out", str(out)])
        from densek import example1b

        assert load_edge_list(out) == example1b(3).graph

    def test_gen_then_oracle_matches_stored_value(self, capsys, tmp_path):
        out = tmp_path / "rays.edges"
        main(["gen", "example1b", "--ell", "3", "--out", str(out)])
        capsys.readouterr()
        code, report = run_json(capsys, ["oracle", "--input", str(out), "--k", "6"])
        assert code == 0
        assert report["density"] == {"num": 1, "den": 3, "decimal": pytest.approx(1 / 3)}

    def test_gnp_sidecar_records_requested_size(self, tmp_path):
        out = tmp_path / "g.edges"
        assert main(
            ["gen", "gnp", "--n", "16", "--p", "0.12", "--seed", "0", "--out", str(out)]
        ) == 0
        from densek import load_sidecar

        meta = load_sidecar(out)
        assert meta["params"]["requested_n"] == 16
        assert meta["params"]["truncated"] is True
        assert load_edge_list(out).n == 15

    def test_planted_generation(self, tmp_path):
        out = tmp_path / "p.edges"
        assert main(
            ["gen", "planted", "--n", "14", "--k", "5", "--p-in", "0.9",
             "--p-out", "0.1", "--seed", "3", "--out", str(out)]
        ) == 0
        assert load_edge_list(out).n == 14

    def test_missing_family_parameters(self, capsys):
        assert main(["gen", "gnp", "--n", "10", "--out", "x.edges"]) == 4
        assert "--p" in capsys.readouterr().err

    def test_bad_scale(self, tmp_path):
        out = tmp_path / "a.edges"
        assert main(["gen", "example1a", "--ell", "1", "--out", str(out)]) == 4


class TestBench:
    def test_corpus_row_count(self, capsys, tmp_path):
        corpus = tmp_path / "corpus"
        corpus.mkdir()
        main(["gen", "example1a", "--ell", "2", "--out", str(corpus / "a.edges")])
        main(["gen", "gnp", "--n", "10", "--p", "0.5", "--seed", "1",
              "--out", str(corpus / "b.edges")])
        main(["gen", "gnp", "--n", "12", "--p", "0.4", "--seed", "2",
              "--out", str(corpus / "c.edges")])
        capsys.readouterr()
        out = tmp_path / "bench.csv"
        assert main(["bench", "--corpus", str(corpus), "--k", "4",
                     "--out", str(out)]) == 0
        rows = list(csv.reader(out.read_text().strip().splitlines()))
        header, body = rows[0], rows[1:]
        # three unweighted instances, five algorithms each
        assert len(body) == 15
        assert header[:4] == ["instance", "family", "algorithm", "k"]
        by_instance = {row[0] for row in body}
        assert by_instance == {"a.edges", "b.edges", "c.edges"}

    def test_sidecar_k_and_ratio(self, capsys, tmp_path):
        corpus = tmp_path / "corpus"
        corpus.mkdir()
        main(["gen", "example1a", "--ell", "2", "--out", str(corpus / "a.edges")])
        capsys.readouterr()
        out = tmp_path / "bench.csv"
        assert main(["bench", "--corpus", str(corpus), "--out", str(out)]) == 0
        rows = list(csv.reader(out.read_text().strip().splitlines()))
        for row in rows[1:]:
            assert row[3] == "4"  # sidecar k
            assert float(row[9]) >= 1.0  # stored optimum over achieved density

    def test_weighted_instances_get_one_row(self, capsys, tmp_path):
        corpus = tmp_path / "corpus"
        corpus.mkdir()
        main(["gen", "example1b", "--ell", "3", "--out", str(corpus / "w.edges")])
        capsys.readouterr()
        out = tmp_path / "bench.csv"
        assert main(["bench", "--corpus", str(corpus), "--out", str(out)]) == 0
        rows = list(csv.reader(out.read_text().strip().splitlines()))
        assert len(rows) == 2
        assert rows[1][2] == "WGREEDY"

    def test_missing_corpus(self, tmp_path):
        assert main(["bench", "--corpus", str(tmp_path / "nope"),
                     "--out", str(tmp_path / "x.csv")]) == 7

    def test_empty_corpus(self, tmp_path):
        empty = tmp_path / "empty"
        empty.mkdir()
        assert main(["bench", "--corpus", str(empty),
                     "--out", str(tmp_path / "x.csv")]) == 4

    def test_instance_without_k(self, capsys, tmp_path):
        corpus = tmp_path / "corpus"
        corpus.mkdir()
        (corpus / "bare.edges").write_text("4 4\n0 1\n1 2\n2 3\n0 3\n")
        assert main(["bench", "--corpus", str(corpus),
                     "--out", str(tmp_path / "x.csv")]) == 4
        assert "--k" in capsys.readouterr().err

import json

import pytest

from centralsets.catalog import cyclic_group, mod_mul
from centralsets.cli import main
from centralsets.formats import dump_cayley, dump_coloring, dump_window_set
from centralsets.windows import Coloring, WindowSet


@pytest.fixture()
def workdir(tmp_path):
    (tmp_path / "z3.cayley").write_text(dump_cayley(cyclic_group(3)))
    (tmp_path / "s01.cayley").write_text(dump_cayley(mod_mul(2)))
    (tmp_path / "odds.window").write_text("N 200\nperiodic 2 1\n")
    (tmp_path / "evens.window").write_text(
        dump_window_set(WindowSet.of(100, range(2, 101, 2))))
    (tmp_path / "const.coloring").write_text(dump_coloring(Coloring.of(100, 1, [1] * 100)))
    (tmp_path / "cube.words").write_text("2 2 2\n1 2 2 1\n")
    (tmp_path / "tree.tree").write_text("carrier z3.cayley\n\n1\n1 2\n")
    (tmp_path / "ident.seq").write_text("20\n" + " ".join(str(n) for n in range(1, 21)) + "\n")
    (tmp_path / "ezero.window").write_text("N 1000 omega\nperiodic 2 0\n")
    return tmp_path


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out = capsys.readouterr().out
    return code, out


def run_json(capsys, *argv):
    code, out = run(capsys, *argv, "--format", "structured")
    return code, json.loads(out)


class TestCommands:
    def test_semigroup_analyze(self, workdir, capsys):
        code, doc = run_json(capsys, "semigroup", "analyze", workdir / "z3.cayley")
        assert code == 0
        assert doc["results"][0]["structure"]["kernel"]["members"] == [0, 1, 2]

    def test_semigroup_central(self, workdir, capsys):
        code, doc = run_json(capsys, "semigroup", "central", workdir / "z3.cayley",
                             "--set", "0")
        assert code == 0 and doc["profile"]["central"] is True
        code, _ = run_json(capsys, "semigroup", "central", workdir / "z3.cayley",
                           "--set", "1,2")
        assert code == 1

    def test_semigroup_equivalences(self, workdir, capsys):
        code, doc = run_json(capsys, "semigroup", "equivalences", workdir / "s01.cayley")
        assert code == 0 and doc["all_agree"] is True
        assert doc["checked_sets"] == 4

    def test_window_largeness(self, workdir, capsys):
        code, doc = run_json(capsys, "window", "largeness", workdir / "odds.window",
                             "--gap", "2", "--interval", "50", "--shift", "2")
        assert code == 0
        assert doc["verdicts"]["piecewise_syndetic"]["status"] == "WITNESSED"

    def test_window_fs_refuted_exits_one(self, workdir, capsys):
        code, doc = run_json(capsys, "window", "fs", workdir / "odds.window", "--k", "2")
        assert code == 1
        assert doc["verdict"]["status"] == "REFUTED_IN_WINDOW"

    def test_window_fs_witnessed(self, workdir, capsys):
        code, doc = run_json(capsys, "window", "fs", workdir / "evens.window", "--k", "3")
        assert code == 0 and doc["verdict"]["witness"]["basis"] == [2, 4, 6]

    def test_window_bergelson(self, workdir, capsys):
        code, doc = run_json(capsys, "window", "bergelson", workdir / "const.coloring")
        assert code == 0
        assert doc["verdict"]["witness"] == {"a": 2, "b": 3, "c": 1, "color": 1, "d": 5}

    def test_trees_classify(self, workdir, capsys):
        code, doc = run_json(capsys, "trees", "classify", workdir / "tree.tree")
        assert code == 1  # the sample tree is neither a star nor a product tree
        assert doc["classification"]["is_star_tree"] is False

    def test_families_cwpws(self, workdir, capsys):
        code, doc = run_json(capsys, "families", "cwpws", workdir / "s01.cayley",
                             "--sets", "0")
        assert code == 0 and doc["report"]["agree"] is True

    def test_hj_line(self, workdir, capsys):
        code, doc = run_json(capsys, "hj", "line", workdir / "cube.words")
        assert code == 0 and doc["variable_word"] == [0, 0]

    def test_hj_number(self, workdir, capsys):
        code, doc = run_json(capsys, "hj", "number", "--k", "2", "--c", "2", "--nmax", "3")
        assert code == 0 and doc["result"]["found"] == 2

    def test_jset_witness_window(self, workdir, capsys):
        code, doc = run_json(capsys, "jset", "witness", "--window", workdir / "evens.window",
                             "--seq", workdir / "ident.seq",
                             "--m-max", "2", "--t-max", "5", "--a-max", "4")
        assert code == 0
        assert doc["witness"] == {"m": 1, "a": [1, 2], "t": [1]}

    def test_jset_witness_finite(self, workdir, capsys):
        code, doc = run_json(capsys, "jset", "witness", "--cayley", workdir / "s01.cayley",
                             "--set", "0", "--seq", workdir / "ident.seq",
                             "--t-max", "5")
        assert code == 0 and doc["carrier"] == "finite-2"

    def test_cset_build(self, workdir, capsys):
        code, doc = run_json(capsys, "cset", "build", "--window", workdir / "evens.window",
                             "--seq", workdir / "ident.seq",
                             "--m-max", "2", "--t-max", "5", "--a-max", "4")
        assert code == 0 and doc["verified"] is True

    def test_dyn_central(self, workdir, capsys):
        code, doc = run_json(capsys, "dyn", "central", workdir / "s01.cayley", "--set", "0")
        assert code == 0 and doc["dynamically_central"] is True
        assert doc["transcript"]["canonical_equals_cylinder_search"] is True

    def test_dyn_window(self, workdir, capsys):
        code, doc = run_json(capsys, "dyn", "window", workdir / "ezero.window",
                             workdir / "ezero.window", "--block", "10", "--interval", "50")
        assert code == 0
        assert doc["report"]["dyn_central"]["status"] == "WITNESSED"


class TestReportDiscipline:
    def test_structured_output_is_deterministic(self, workdir, capsys):
        _, first = run(capsys, "semigroup", "analyze", workdir / "z3.cayley",
                       "--format", "structured")
        _, second = run(capsys, "semigroup", "analyze", workdir / "z3.cayley",
                        "--format", "structured")
        assert first == second

    def test_config_echoed(self, workdir, capsys):
        _, doc = run_json(capsys, "semigroup", "central", workdir / "z3.cayley",
                          "--set", "0", "--seed", "7", "--budget", "123")
        assert doc["config"] == {"seed": 7, "budget": 123, "jobs": 1}
        assert doc["version"]

    def test_out_file(self, workdir, capsys, tmp_path):
        target = tmp_path / "report.json"
        code = main(["semigroup", "central", str(workdir / "z3.cayley"), "--set", "0",
                     "--format", "structured", "--out", str(target)])
        assert code == 0
        assert json.loads(target.read_text())["profile"]["central"] is True

    def test_parallel_batch_is_name_sorted(self, workdir, capsys):
        code, doc = run_json(capsys, "semigroup", "analyze",
                             workdir / "z3.cayley", workdir / "s01.cayley", "--jobs", "2")
        assert code == 0
        names = [r["input"] for r in doc["results"]]
        assert names == sorted(names)


class TestErrorPaths:
    def test_missing_file_exits_two(self, workdir, capsys):
        assert main(["semigroup", "analyze", str(workdir / "nope.cayley")]) == 2

    def test_invalid_table_exits_two(self, workdir, capsys):
        bad = workdir / "bad.cayley"
        bad.write_text("2\n1 0\n0 0\n")
        assert main(["semigroup", "analyze", str(bad)]) == 2

    def test_unknown_command_exits_two(self, capsys):
        assert main(["frobnicate"]) == 2

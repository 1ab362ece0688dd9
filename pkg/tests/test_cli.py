"""End-to-end CLI tests driven through localbias.cli.run.

Covers the exit-code contract: 0 success, 1 verified-false / not found,
2 usage or parse error, 3 infeasible / budget exhausted.
"""

import pytest

from localbias.cli import run
from localbias.fileio import format_cube, parse_cube, read_text, write_text
from localbias.build import base_h, h_k, parity_g, stable_parity


@pytest.fixture
def paths(tmp_path):
    h = tmp_path / "h.cube"
    g4 = tmp_path / "g4.cube"
    const = tmp_path / "const.cube"
    write_text(h, format_cube(base_h()))
    write_text(g4, format_cube(parity_g(4)))
    write_text(const, format_cube(stable_parity(3, 3)))
    return {"h": str(h), "g4": str(g4), "const": str(const), "dir": tmp_path}


def out_lines(capsys):
    return capsys.readouterr().out.strip().splitlines()


class TestConstruct:
    def test_h_to_stdout(self, capsys):
        assert run(["construct", "h"]) == 0
        lines = out_lines(capsys)
        assert lines[0].startswith("ok ")
        assert lines[1] == "cube 4"

    def test_g_n_to_file(self, paths, capsys):
        out = str(paths["dir"] / "g6.cube")
        assert run(["construct", "g_n", "--n", "6", "--out", out]) == 0
        assert parse_cube(read_text(out)) == parity_g(6)

    def test_h_k(self, paths, capsys):
        out = str(paths["dir"] / "h2.cube")
        assert run(["construct", "h_k", "--k", "2", "--out", out]) == 0
        assert parse_cube(read_text(out)) == h_k(2)

    def test_m_over_n(self, capsys):
        assert run(["construct", "m_over_n", "--k", "2", "--m", "3"]) == 0

    def test_from_code_builtin(self, capsys):
        assert run(["construct", "from_code", "--k", "3"]) == 0
        assert out_lines(capsys)[1] == "cube 8"

    def test_stable_from_biased(self, paths, capsys):
        assert run(["construct", "stable_from_biased", "--fn", paths["h"]]) == 0
        assert out_lines(capsys)[1] == "cube 5"

    def test_product(self, paths, capsys):
        assert run(["construct", "product",
                    "--fn-a", paths["h"], "--fn-b", paths["g4"]]) == 0
        assert out_lines(capsys)[1] == "cube 8"

    def test_bad_builder_is_usage_error(self, capsys):
        assert run(["construct", "nope"]) == 2
        assert out_lines(capsys)[0].startswith("error")

    def test_invalid_parameter_is_error(self, capsys):
        assert run(["construct", "g_n", "--n", "3"]) == 2


class TestVerifySpectrum:
    def test_verify_biased_ok(self, paths, capsys):
        assert run(["verify", "--fn", paths["h"], "--kind", "biased"]) == 0
        assert out_lines(capsys)[0] == "ok biased p=1/2"

    def test_verify_stable_fail(self, paths, capsys):
        bad = paths["dir"] / "uneven.cube"
        write_text(bad, "cube 2\n+++-\n")
        assert run(["verify", "--fn", str(bad), "--kind", "stable"]) == 1
        assert out_lines(capsys)[0].startswith("fail")

    def test_verify_missing_file(self, paths, capsys):
        assert run(["verify", "--fn", str(paths["dir"] / "nope.cube"),
                    "--kind", "biased"]) == 2

    def test_verify_malformed_file(self, paths, capsys):
        bad = paths["dir"] / "bad.cube"
        write_text(bad, "cube 2\n+++\n")
        assert run(["verify", "--fn", str(bad), "--kind", "biased"]) == 2
        assert out_lines(capsys)[0].startswith("error parse")

    def test_spectrum_lists_coefficients(self, paths, capsys):
        assert run(["spectrum", "--fn", paths["h"]]) == 0
        lines = out_lines(capsys)
        assert lines[0] == "ok spectrum n=4 nonzero=4"
        assert "S={1,2} c=8" in lines

    def test_spectrum_weight(self, paths, capsys):
        assert run(["spectrum", "--fn", paths["h"], "--weight-at", "2"]) == 0
        assert out_lines(capsys)[0] == "ok weight degree=2 1"


class TestIsomorphic:
    def test_isomorphic_pair(self, paths, capsys):
        assert run(["isomorphic", "--fn-a", paths["h"], "--fn-b", paths["h"]]) == 0
        assert out_lines(capsys)[0].startswith("ok isomorphic")

    def test_non_isomorphic_pair(self, paths, capsys):
        assert run(["isomorphic", "--fn-a", paths["h"], "--fn-b", paths["g4"]]) == 1
        assert out_lines(capsys)[0].startswith("fail non-isomorphic")

    def test_budget_exhaustion(self, paths, capsys):
        code = run(["isomorphic", "--fn-a", paths["h"], "--fn-b", paths["h"],
                    "--exact-bound", "0", "--budget", "0"])
        assert code == 3
        assert out_lines(capsys)[0].startswith("error unknown")


class TestEnumerateCount:
    def test_enumerate_n3(self, capsys):
        assert run(["enumerate", "--n", "3", "--kind", "biased"]) == 0
        assert "functions=2" in out_lines(capsys)[0]

    def test_enumerate_with_p(self, capsys):
        assert run(["enumerate", "--n", "4", "--p", "1/2",
                    "--kind", "biased", "--mode", "oracle"]) == 0

    def test_enumerate_too_big(self, capsys):
        assert run(["enumerate", "--n", "9", "--kind", "biased"]) == 3
        assert out_lines(capsys)[0].startswith("error")

    def test_enumerate_bad_p(self, capsys):
        assert run(["enumerate", "--n", "4", "--p", "x/y"]) == 2

    def test_count_solutions(self, capsys):
        assert run(["count", "--what", "solutions", "--k", "4"]) == 0
        assert out_lines(capsys)[0] == "ok solutions k=4 12"

    def test_count_partitions(self, capsys):
        assert run(["count", "--what", "partitions", "--k", "10"]) == 0
        assert out_lines(capsys)[0] == "ok partitions k=10 42"

    def test_count_bound(self, capsys):
        assert run(["count", "--what", "bound", "--k", "8"]) == 0
        assert "exact=4" in out_lines(capsys)[0]


class TestScenery:
    def test_exact(self, paths, capsys):
        assert run(["scenery", "exact", "--fn", paths["h"], "--len", "2"]) == 0
        lines = out_lines(capsys)
        assert lines[0].startswith("ok exact")
        assert "+++ 1/8" in lines

    def test_sample(self, paths, capsys):
        assert run(["scenery", "sample", "--fn", paths["h"],
                    "--len", "3", "--n-samples", "200"]) == 0
        assert out_lines(capsys)[0].startswith("ok sample n=200")

    def test_compare_equal(self, paths, capsys):
        assert run(["scenery", "compare", "--fn-a", paths["h"],
                    "--fn-b", paths["g4"], "--len", "6"]) == 0
        assert out_lines(capsys)[0] == "ok equal"

    def test_compare_different(self, paths, capsys):
        assert run(["scenery", "compare", "--fn-a", paths["h"],
                    "--fn-b", paths["const"], "--len", "2"]) == 1
        assert out_lines(capsys)[0] == "fail distributions differ"


class TestLatticeCayleyTree:
    def test_lattice_extend_and_verify(self, paths, capsys):
        out = str(paths["dir"] / "h.lattice")
        assert run(["lattice", "extend", "--fn", paths["h"], "--out", out]) == 0
        assert run(["lattice", "verify", "--file", out]) == 0
        assert out_lines(capsys)[-1] == "ok biased p=1/2"

    def test_lattice_verify_fail(self, paths, capsys):
        bad = paths["dir"] / "bad.lattice"
        write_text(bad, "lattice 1 3\n++-\n")
        assert run(["lattice", "verify", "--file", str(bad)]) == 1

    def test_cayley_build_and_verify(self, paths, capsys):
        out = str(paths["dir"] / "c.cayley")
        assert run(["cayley", "build", "--a", "2", "--b", "3", "--out", out]) == 0
        assert run(["cayley", "verify", "--file", out]) == 0
        assert out_lines(capsys)[-1] == "ok biased p=1/2"

    def test_cayley_search(self, capsys):
        assert run(["cayley", "search", "--gens", "1",
                    "--p", "1/2", "--pmax", "8"]) == 0
        lines = out_lines(capsys)
        assert "classes=1" in lines[0]

    def test_cayley_search_empty(self, capsys):
        assert run(["cayley", "search", "--gens", "1,2",
                    "--p", "1/3", "--pmax", "8"]) == 1

    def test_tree_greedy(self, capsys):
        assert run(["tree", "greedy", "--deg", "3", "--depth", "3",
                    "--b", "2"]) == 0
        assert out_lines(capsys)[0].startswith("ok tree")

    def test_tree_greedy_random_seeded(self, capsys):
        assert run(["--seed", "5", "tree", "greedy", "--deg", "4",
                    "--depth", "3", "--b", "2", "--random"]) == 0
        first = out_lines(capsys)[1]
        assert run(["--seed", "5", "tree", "greedy", "--deg", "4",
                    "--depth", "3", "--b", "2", "--random"]) == 0
        assert out_lines(capsys)[1] == first

    def test_tree_bad_quota(self, capsys):
        assert run(["tree", "greedy", "--deg", "3", "--depth", "3",
                    "--b", "5"]) == 2


class TestTopLevelUsage:
    def test_no_command(self, capsys):
        assert run([]) == 2

    def test_unknown_command(self, capsys):
        assert run(["frobnicate"]) == 2

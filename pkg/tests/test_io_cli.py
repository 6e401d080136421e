import pytest

from hypersteiner import io
from hypersteiner.cli import main
from hypersteiner.instance import Arborescence, RawInstance
from hypersteiner.nodes import Node


TRIANGLE = "msa 3\n000\n011\n101\n110\n"


class TestInstanceFormat:
    def test_parse(self):
        raw = io.parse_instance(TRIANGLE)
        assert raw.m == 3
        assert len(raw.terminals) == 4

    def test_round_trip(self):
        raw = io.parse_instance(TRIANGLE)
        assert io.parse_instance(io.render_instance(raw)) == raw

    def test_comments_and_blanks_ignored(self):
        text = "# a comment\n\nmsa 2\n01\n# another\n10\n"
        assert len(io.parse_instance(text).terminals) == 2

    def test_bad_header(self):
        with pytest.raises(io.ParseError):
            io.parse_instance("steiner 3\n000\n")

    def test_wrong_length_terminal(self):
        with pytest.raises(io.ParseError):
            io.parse_instance("msa 3\n01\n")

    def test_empty(self):
        with pytest.raises(io.ParseError):
            io.parse_instance("")
        with pytest.raises(io.ParseError):
            io.parse_instance("msa 3\n")


class TestTreeFormat:
    def test_round_trip(self):
        tree = Arborescence.from_int_edges([(0, 1), (1, 3)], 2)
        again = io.parse_tree(io.render_tree(tree))
        assert again.edges == tree.edges
        assert again.root == tree.root

    def test_bad_line(self):
        with pytest.raises(io.ParseError):
            io.parse_tree("tree 2\n00 01 10\n")

    def test_dimension_mismatch(self):
        with pytest.raises(io.ParseError):
            io.parse_tree("tree 2\n000 001\n")


class TestDot:
    def test_labels_and_shapes(self):
        tree = Arborescence.from_int_edges([(0, 1), (1, 3)], 2)
        terminals = frozenset({Node.from_string("11"), Node.from_string("00")})
        dot = io.to_dot(tree, terminals)
        assert '"00" -> "10" [label="0"];' in dot
        assert '"10" -> "11" [label="1"];' in dot
        assert '"11" [shape=doublecircle];' in dot
        assert '"10" [shape=circle];' in dot


class TestCli:
    def write_triangle(self, tmp_path):
        path = tmp_path / "triangle.msa"
        path.write_text(TRIANGLE)
        return path

    def test_solve_oracle(self, tmp_path, capsys):
        path = self.write_triangle(tmp_path)
        assert main(["solve", str(path), "--algo", "oracle"]) == 0
        out = capsys.readouterr().out
        assert "cost: 5" in out
        assert "q: 2" in out
        assert "p: 2" in out
        assert "valid: yes" in out

    def test_solve_writes_checkable_tree(self, tmp_path, capsys):
        path = self.write_triangle(tmp_path)
        tree_path = tmp_path / "out.tree"
        assert main(["solve", str(path), "--out", str(tree_path)]) == 0
        assert main(["check", str(path), str(tree_path)]) == 0
        assert "valid" in capsys.readouterr().out

    def test_solve_ratio_flag(self, tmp_path, capsys):
        path = self.write_triangle(tmp_path)
        assert main(["solve", str(path), "--algo", "approx-mvc", "--ratio"]) == 0
        assert "ratio: 1.0000" in capsys.readouterr().out

    def test_solve_dot_output(self, tmp_path):
        path = self.write_triangle(tmp_path)
        dot_path = tmp_path / "t.dot"
        assert main(["solve", str(path), "--dot", str(dot_path)]) == 0
        assert dot_path.read_text().startswith("digraph")

    def test_solve_fpt_q(self, tmp_path, capsys):
        path = self.write_triangle(tmp_path)
        rc = main(["solve", str(path), "--algo", "fpt-q", "--q", "2", "--seed", "5"])
        assert rc == 0
        assert "cost: 5" in capsys.readouterr().out

    def test_refusal_exit_code(self, tmp_path):
        path = self.write_triangle(tmp_path)
        rc = main(["solve", str(path), "--algo", "fpt-q", "--q", "0"])
        assert rc == 2

    def test_parse_error_exit_code(self, tmp_path):
        path = tmp_path / "bad.msa"
        path.write_text("not an instance\n")
        assert main(["solve", str(path)]) == 1

    def test_check_detects_missing_terminal(self, tmp_path, capsys):
        path = self.write_triangle(tmp_path)
        tree_path = tmp_path / "partial.tree"
        tree_path.write_text("tree 3\n000 100\n100 110\n")
        assert main(["check", str(path), str(tree_path)]) == 1
        assert "uncovered" in capsys.readouterr().out

    def test_gen_random_round_trip(self, tmp_path):
        out = tmp_path / "r.msa"
        assert main(
            ["gen-random", "--m", "4", "--n-terminals", "5", "--seed", "3",
             "-o", str(out)]
        ) == 0
        raw = io.parse_instance(out.read_text())
        assert raw.m == 4 and len(raw.terminals) == 5

    def test_gen_random_deterministic(self, tmp_path):
        a, b = tmp_path / "a.msa", tmp_path / "b.msa"
        for f in (a, b):
            main(["gen-random", "--m", "4", "--n-terminals", "3", "--seed", "9",
                  "-o", str(f)])
        assert a.read_text() == b.read_text()

    def test_gen_graph(self, tmp_path):
        edges = tmp_path / "k3.edges"
        edges.write_text("1 2\n2 3\n1 3\n")
        out = tmp_path / "k3.msa"
        assert main(["gen-graph", str(edges), "-o", str(out)]) == 0
        raw = io.parse_instance(out.read_text())
        assert raw == RawInstance.from_strings(["110", "011", "101"])

    def test_bench_runs(self, tmp_path, capsys):
        csv_path = tmp_path / "bench.csv"
        rc = main(
            ["bench", "--m", "4", "--n-terminals", "3", "--count", "3",
             "--algos", "dw", "approx-mvc", "--csv", str(csv_path)]
        )
        assert rc == 0
        out = capsys.readouterr().out
        assert "algorithm" in out and "dw" in out
        header = csv_path.read_text().splitlines()[0]
        assert header == "instance,seed,algorithm,cost,optimal_cost,time_s"

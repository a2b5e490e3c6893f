import json

import pytest

import cli_app
from src.core.exceptions import (
    EXIT_INTERNAL,
    EXIT_REFUTED,
    EXIT_REPRESENTED,
    EXIT_UNKNOWN,
    EXIT_USAGE,
    InvariantViolation,
)
from src.core.models import parse_word
from src.core.words import twelve_represents
from src.services.constructors import represent_pattern
from src.utils import graph_generators


def run_cli(capsys, *argv):
    code = cli_app.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestCheckAndRepresent:
    """Comandos check e represent de ponta a ponta."""

    def test_hook_example(self, capsys):
        code, out, _ = run_cli(capsys, "check", "--graph-name", "fig-hook", "--pattern", "123")
        assert code == EXIT_REPRESENTED
        payload = json.loads(out)
        assert payload["status"] == "represented"
        assert payload["word"] == "4 3 2 1 5 2"

    def test_twin_house_is_refuted_for_132(self, capsys):
        code, out, _ = run_cli(capsys, "check", "--graph-name", "twin-house", "--pattern", "132")
        assert code == EXIT_REFUTED
        assert json.loads(out)["witness"]["pattern"].startswith("FP132")

    def test_edgeless_graph_from_inline_edges(self, capsys):
        code, out, _ = run_cli(capsys, "represent", "--edges", "", "--n", "4", "--pattern", "211", "--format", "text")
        assert code == EXIT_REPRESENTED
        assert out == "1 2 3 4\n"

    def test_unknown_without_oracle(self, capsys):
        code, out, _ = run_cli(capsys, "check", "--graph-name", "edge-13", "--pattern", "112")
        assert code == EXIT_UNKNOWN
        assert json.loads(out)["status"] == "unknown"

    def test_oracle_fallback(self, capsys):
        code, out, _ = run_cli(capsys, "check", "--graph-name", "edge-13", "--pattern", "112", "--oracle")
        assert code == EXIT_REPRESENTED
        assert json.loads(out)["method"] == "oracle"

    def test_text_certificate(self, capsys):
        code, out, _ = run_cli(capsys, "check", "--graph-name", "cycle:5", "--pattern", "121", "--format", "text")
        assert code == EXIT_REFUTED
        assert out.startswith("status: refuted")
        assert "testemunha:" in out
        assert "testemunha: FP_COMP em 1 2 3" in out
        assert "padrão: FP_COMP: xy E, xz N, yz E" in out

    def test_file_input(self, capsys, tmp_path):
        path = tmp_path / "aresta.txt"
        path.write_text("3\n1 3\n", encoding="ascii")
        code, out, _ = run_cli(capsys, "represent", str(path), "--pattern", "211", "--format", "text")
        assert code == EXIT_REPRESENTED
        assert out == "2 3 1 2\n"


class TestUsageErrors:
    @pytest.mark.parametrize("argv", [
        ["check", "--edges", "1-2", "--pattern", "999"],
        ["check", "--edges", "1x2"],
        ["check", "--edges", "1-2", "--bogus"],
        ["check"],
        ["census"],
    ])
    def test_exit_64(self, capsys, argv):
        code, out, _ = run_cli(capsys, *argv)
        assert code == EXIT_USAGE
        assert out == ""

    def test_help_exits_cleanly(self, capsys):
        assert cli_app.main(["--help"]) == 0

    def test_unexpected_error_exits_70(self, capsys, mocker):
        mocker.patch.object(cli_app, "run", side_effect=RuntimeError("falha"))
        code, _, _ = run_cli(capsys, "check", "--edges", "1-2")
        assert code == EXIT_INTERNAL


class TestCensusCommands:
    """Censo e validação cruzada."""

    def test_census_counts_complete_graph(self, capsys):
        code, out, _ = run_cli(capsys, "census", "--n", "3", "--pattern", "12")
        assert code == EXIT_REPRESENTED
        [row] = json.loads(out)["rows"]
        assert row["labeled_count_pattern"] == 1
        assert row["agree"] is True

    def test_census_csv(self, capsys):
        code, out, _ = run_cli(capsys, "census", "--n", "2", "--patterns", "121,231", "--format", "csv")
        assert code == EXIT_REPRESENTED
        lines = out.splitlines()
        assert lines[0].startswith("n,pattern,")
        assert len(lines) == 3

    def test_jobs_environment_overrides_flag(self, capsys, mocker, monkeypatch):
        monkeypatch.setenv("REPWORDS_JOBS", "4")
        mocked = mocker.patch("src.routers.commands.CensusService")
        mocked.return_value.census.return_value = []
        code, _, _ = run_cli(capsys, "census", "--n", "3", "--jobs", "2")
        assert code == EXIT_REPRESENTED
        assert mocked.call_args.kwargs["jobs"] == 4

    def test_crossvalidate(self, capsys):
        code, out, _ = run_cli(capsys, "crossvalidate", "--n", "4", "--patterns", "121,231,123,132,211")
        assert code == EXIT_REPRESENTED
        assert "disagreements" not in json.loads(out)

    def test_crossvalidate_reports_disagreement(self, capsys, mocker):
        mocked = mocker.patch("src.routers.commands.CensusService")
        mocked.return_value.cross_validate.return_value = ([], ["divergência"])
        mocker.patch("src.routers.commands.CensusRepository.to_json", return_value="{}\n")
        code, _, _ = run_cli(capsys, "crossvalidate", "--n", "3")
        assert code == EXIT_REFUTED


class TestModelCommand:
    """Modelos geométricos e figuras."""

    def test_hook_json(self, capsys):
        code, out, _ = run_cli(capsys, "model", "--graph-name", "fig-hook")
        payload = json.loads(out)
        assert code == EXIT_REPRESENTED
        assert payload["kind"] == "hook"
        assert len(payload["model"]) == 5

    def test_hook_svg(self, capsys):
        code, out, _ = run_cli(capsys, "model", "--graph-name", "fig-hook", "--format", "svg")
        assert code == EXIT_REPRESENTED
        assert "<svg" in out

    def test_mpt_tikz(self, capsys):
        code, out, _ = run_cli(capsys, "model", "--graph-name", "fig-hook", "--kind", "mpt", "--format", "tikz")
        assert code == EXIT_REPRESENTED
        assert out.startswith("\\begin{tikzpicture}")

    def test_interval_example_is_refuted_by_fp132(self, capsys):
        code, out, _ = run_cli(capsys, "model", "--graph-name", "fig-interval", "--kind", "interval")
        assert code == EXIT_REFUTED
        assert json.loads(out)["witness"] == {"pattern": "FP132.b", "vertices": [2, 3, 5, 6]}

    def test_interval_model(self, capsys):
        code, out, _ = run_cli(capsys, "model", "--edges", "1-2", "--n", "3", "--kind", "interval")
        payload = json.loads(out)
        assert code == EXIT_REPRESENTED
        assert [entry["anchor"] for entry in payload["model"]] == [1, 2, 1]
        assert payload["word"] == "3 2 2 1 1 3"

    def test_interval_model_on_twin_house_is_refuted(self, capsys):
        code, out, _ = run_cli(capsys, "model", "--graph-name", "twin-house", "--kind", "interval")
        assert code == EXIT_REFUTED
        assert json.loads(out)["status"] == "refuted"

    def test_hook_model_refuted_by_fp123(self, capsys):
        code, _, _ = run_cli(capsys, "model", "--graph-name", "path:3")
        assert code == EXIT_REFUTED


class TestSelftest:
    """Autoteste com exemplos de referência e teoremas negativos."""

    def test_selftest_passes(self, capsys):
        code, out, _ = run_cli(capsys, "selftest", "--seed", "7")
        assert code == EXIT_REPRESENTED
        assert "FALHA" not in out
        assert "ok  exemplo de intervalos contém FP132.b em 2 3 5 6" in out
        assert "ok  K4 sem representante que evita 4321" in out

    def test_failing_check_does_not_stop_the_report(self, capsys, mocker):
        mocker.patch(
            "src.routers.commands.geometry.build_co132_interval_model",
            side_effect=InvariantViolation("modelo quebrado"),
        )
        code, out, _ = run_cli(capsys, "selftest", "--seed", "7")
        assert code == EXIT_REFUTED
        assert "FALHA  modelo bruto do exemplo de intervalos" in out
        assert "ok  C6 sem rotulagem 12-representável" in out
        assert out.splitlines()[-1].endswith("verificações passaram")


class TestRelabeledCertificates:
    """Vértices isolados levados aos rótulos mais altos (321 e {211, 221})."""

    def test_321_unknown_keeps_relabeled_word(self, capsys):
        code, out, _ = run_cli(capsys, "check", "--graph-name", "edge-13", "--pattern", "321")
        payload = json.loads(out)
        assert code == EXIT_UNKNOWN
        assert {int(k): v for k, v in payload["relabeling"].items()} == {1: 1, 3: 2, 2: 3}
        assert payload["relabeled_word"] == "2 1 3"

    def test_text_output_lists_relabeling(self, capsys):
        code, out, _ = run_cli(capsys, "check", "--graph-name", "edge-13", "--pattern", "321", "--oracle",
                               "--format", "text")
        assert code == EXIT_REPRESENTED
        assert "reetiquetagem: 1->1 2->3 3->2" in out
        assert "palavra reetiquetada: 2 1 3" in out


class TestGeneratedGraphs:
    """A CLI concorda com os construtores em grafos gerados."""

    @pytest.mark.parametrize("name", ["path:4", "cycle:5", "star:4", "complete:4", "empty:3", "twin-house"])
    @pytest.mark.parametrize("pattern", ["121", "231", "123", "132", "211", "212", "213"])
    def test_exit_code_matches_certificate(self, capsys, name, pattern):
        graph = graph_generators.by_name(name)
        expected = represent_pattern(graph, pattern, use_oracle=False)
        code, out, _ = run_cli(capsys, "check", "--graph-name", name, "--pattern", pattern)
        payload = json.loads(out)
        assert payload["status"] == expected.status
        assert code == (EXIT_REPRESENTED if expected.is_represented else EXIT_REFUTED)
        if expected.is_represented:
            assert twelve_represents(parse_word(payload["word"]), graph)

    def test_output_is_byte_stable(self, capsys):
        first = run_cli(capsys, "census", "--n", "3", "--patterns", "121,211", "--format", "csv")
        assert run_cli(capsys, "census", "--n", "3", "--patterns", "121,211", "--format", "csv")[1] == first[1]

import io
import json

import pytest

from src.cli import EXIT_OK, EXIT_USAGE, EXIT_VIOLATION, resolve_jobs, run
from src.config import Config
from src.errors import InputFormatError
from src.io_formats import parse_family

EXAMPLE_JSON = '{"d": 3, "members": [[1,2,6],[1,3,5],[2,3,5],[3,5,6]]}'


@pytest.fixture
def stdin(monkeypatch):
    def feed(text):
        monkeypatch.setattr("sys.stdin", io.StringIO(text))

    return feed


def invoke(capsys, *argv):
    code = run(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestFamilyCommands:
    def test_inc_image_worked_example(self, capsys, stdin):
        stdin("1 2 4\n1 3 5\n")
        code, out, _ = invoke(capsys, "inc", "image")
        assert code == EXIT_OK
        assert out == "d=3\n1 2 4\n1 2 5\n1 3 5\n2 3 5\n1 3 6\n1 4 6\n2 4 6\n"

    def test_json_output_reparses(self, capsys, stdin):
        stdin("d=3\n(1,2,4)\n(1,3,5)\n")
        code, out, _ = invoke(capsys, "inc", "image", "--json")
        assert code == EXIT_OK
        family = parse_family(out)
        assert len(family) == 7
        assert json.loads(out)["members"][0] == [1, 2, 4]

    def test_input_file(self, capsys, tmp_path):
        path = tmp_path / "family.json"
        path.write_text(EXAMPLE_JSON, encoding="utf-8")
        code, out, _ = invoke(capsys, "partial", "left", "-i", str(path), "--json")
        assert code == EXIT_OK
        assert json.loads(out)["members"] == [[1, 2, 3], [1, 2, 4], [2, 3, 4], [3, 4, 5]]
        code, out, _ = invoke(capsys, "partial", "right", "-i", str(path), "--json")
        assert json.loads(out)["members"] == [[1, 2, 5], [1, 3, 5], [1, 2, 6], [1, 3, 6]]

    def test_fixpoint(self, capsys, stdin):
        stdin(EXAMPLE_JSON)
        code, out, _ = invoke(capsys, "fixpoint", "--json")
        assert code == EXIT_OK
        assert json.loads(out)["members"] == [[1, 2, 3], [1, 2, 4], [1, 3, 4], [1, 2, 5]]

    def test_fixpoint_trace(self, capsys, stdin):
        stdin(EXAMPLE_JSON)
        code, out, _ = invoke(capsys, "fixpoint", "--trace", "--json")
        data = json.loads(out)
        assert len(data["trace"]) == 3
        sizes = data["inc_sizes"]
        assert all(a >= b for a, b in zip(sizes, sizes[1:]))

    def test_compress_above(self, capsys, stdin):
        stdin("2 5\n3 4\n")
        code, out, _ = invoke(capsys, "compress", "--above", "1")
        assert out == "d=2\n2 3\n2 4\n"

    def test_inc_orbit_and_shift(self, capsys, stdin):
        code, out, _ = invoke(capsys, "inc", "orbit", "--u", "1 3", "--i", "1", "--j", "2")
        assert out == "d=2\n1 4\n2 4\n"
        stdin("2 3\n")
        code, out, _ = invoke(capsys, "inc", "shift", "--i", "2")
        assert out == "d=2\n1 3\n"

    def test_output_is_deterministic(self, capsys, stdin):
        stdin(EXAMPLE_JSON)
        first = invoke(capsys, "inc", "iterate", "--steps", "2", "--json")[1]
        stdin(EXAMPLE_JSON)
        second = invoke(capsys, "inc", "iterate", "--steps", "2", "--json")[1]
        assert first == second


class TestOrderAndNumeric:
    def test_rank_unrank(self, capsys):
        assert invoke(capsys, "order", "rank", "--u", "2 3 5")[1] == "7\n"
        assert invoke(capsys, "order", "unrank", "--m", "4", "--d", "3")[1] == "2 3 4\n"
        assert invoke(capsys, "order", "rep", "--m", "7", "--d", "3")[1] == "C(4,3) + C(3,2)\n"

    def test_cmp(self, capsys):
        assert invoke(capsys, "order", "cmp", "--u", "2 3 4", "--v", "1 2 5")[1] == "less\n"
        assert invoke(capsys, "order", "cmp", "--u", "2 3 4", "--v", "1 2 5", "--borel")[1] == "incomparable\n"

    def test_numeric(self, capsys):
        assert invoke(capsys, "numeric", "inc", "--m", "0", "--d", "3")[1] == "0\n"
        assert invoke(capsys, "numeric", "inc", "--m", "7", "--d", "3")[1] == "16\n"
        assert invoke(capsys, "numeric", "shadow", "--m", "7", "--d", "3")[1] == "9\n"

    def test_fvector_check(self, capsys, stdin):
        stdin("[3, 3, 1]")
        assert invoke(capsys, "fvector", "check")[0] == EXIT_OK
        stdin("[1, 1]")
        code, out, _ = invoke(capsys, "fvector", "check")
        assert code == EXIT_VIOLATION
        assert out.startswith("infeasible")


class TestChainCommands:
    def test_check_fvector_chain(self, capsys, stdin):
        stdin("[[2], [2]]")
        code, _, _ = invoke(capsys, "chain", "check")
        assert code == EXIT_VIOLATION
        stdin("[[1], [2, 1], [3, 3, 1]]")
        assert invoke(capsys, "chain", "check")[0] == EXIT_OK

    def test_check_complex_chain(self, capsys, stdin):
        stdin('[{"grades": {"1": [[1]]}}, {"grades": {"1": [[1]]}}]')
        code, out, _ = invoke(capsys, "chain", "check", "--json")
        assert code == EXIT_VIOLATION
        assert json.loads(out)["kind"] == "complexes"

    def test_construct(self, capsys, stdin):
        stdin("[[2], [3]]")
        code, out, _ = invoke(capsys, "chain", "construct", "--json")
        assert code == EXIT_OK
        assert json.loads(out) == [{"grades": {"1": [[1], [2]]}}, {"grades": {"1": [[1], [2], [3]]}}]

    def test_construct_infeasible(self, capsys, stdin):
        stdin("[[2], [2]]")
        assert invoke(capsys, "chain", "construct")[0] == EXIT_VIOLATION

    def test_iterate_then_stabilize(self, capsys, stdin):
        stdin('{"grades": {"1": [[1], [2]], "2": [[1, 2]]}}')
        code, out, _ = invoke(capsys, "chain", "iterate", "--steps", "2", "--json")
        assert code == EXIT_OK
        stdin(out)
        code, out, _ = invoke(capsys, "chain", "stabilize", "--json")
        assert code == EXIT_OK
        assert json.loads(out) == [True, True]


class TestComplexCommands:
    def test_closure(self, capsys, stdin):
        stdin('{"grades": {"2": [[1, 2]], "1": [[2]]}}')
        code, out, _ = invoke(capsys, "complex", "closure")
        assert code == EXIT_VIOLATION
        assert out == "missing face (1)\n"

    def test_inc_and_fvector(self, capsys, stdin):
        stdin('{"grades": {"1": [[1], [2]], "2": [[1, 2]]}}')
        code, out, _ = invoke(capsys, "complex", "inc", "--json")
        assert json.loads(out) == {"grades": {"1": [[1], [2], [3]], "2": [[1, 2], [1, 3], [2, 3]]}}
        stdin(out)
        assert invoke(capsys, "complex", "fvector")[1] == "(3,3)\n"

    def test_nonfaces(self, capsys, stdin):
        stdin('{"grades": {"1": [[1], [2]]}}')
        code, out, _ = invoke(capsys, "complex", "nonfaces", "--n", "2", "--json")
        assert json.loads(out) == {"grades": {"1": [], "2": [[1, 2]]}}


class TestVerifyCommands:
    def test_verify_main(self, capsys):
        code, out, _ = invoke(capsys, "verify", "main", "--n", "4", "--d", "2", "--m", "2", "--json")
        assert code == EXIT_OK
        data = json.loads(out)
        assert data["checked"] == 15
        assert data["minimum"] == {"2": 5}
        assert data["compressed"] == {"2": 5}
        assert data["compressed_is_minimizer"] == {"2": True}
        assert "elapsed" not in data

    def test_verify_main_table(self, capsys):
        code, out, _ = invoke(capsys, "verify", "main", "--n", "4", "--d", "2", "--all-m")
        assert code == EXIT_OK
        assert "verified: checked=64 violations=0" in out

    def test_verify_segments(self, capsys):
        assert invoke(capsys, "verify", "segments", "--max-elem", "5", "--max-d", "3")[0] == EXIT_OK

    def test_verify_identities_on_family(self, capsys, tmp_path):
        path = tmp_path / "f.json"
        path.write_text(EXAMPLE_JSON, encoding="utf-8")
        code, out, _ = invoke(capsys, "verify", "identities", "-i", str(path), "--json")
        assert code == EXIT_OK
        assert json.loads(out) == {"failures": []}

    def test_verify_identities_sweep(self, capsys):
        args = ("verify", "identities", "--samples", "30", "--grades", "2", "3", "--max-elem", "6")
        assert invoke(capsys, *args)[0] == EXIT_OK

    def test_verify_equality(self, capsys):
        code, out, _ = invoke(capsys, "verify", "equality", "--n", "4", "--d", "2", "--m", "2", "--json")
        families = json.loads(out)
        assert [[1, 2], [1, 3]] in families
        assert [[1, 4], [2, 4]] in families

    def test_search(self, capsys):
        code, out, _ = invoke(capsys, "search", "shift-noninclusion", "--n", "6", "--d", "2", "--max-m", "2", "--json")
        assert code == EXIT_OK
        data = json.loads(out)
        assert data["witness"]["family"] == [[1, 3]]
        assert data["witness"]["i"] == 4
        assert data["shift_shadow_failures"] == 0

    def test_search_without_witness(self, capsys):
        code, out, _ = invoke(capsys, "search", "shift-noninclusion", "--n", "6", "--d", "2", "--max-m", "0", "--json")
        assert code == EXIT_VIOLATION
        assert json.loads(out) == {"witness": None, "shift_shadow_failures": 0}


class TestErrors:
    def test_usage_error(self, capsys):
        assert invoke(capsys, "inc", "image", "--bogus")[0] == EXIT_USAGE
        assert invoke(capsys, "nonexistent")[0] == EXIT_USAGE

    def test_parse_error_names_line(self, capsys, stdin):
        stdin("1 2\n1 2 3\n")
        code, _, err = invoke(capsys, "inc", "image")
        assert code == EXIT_USAGE
        assert "第 2 行" in err

    def test_json_error_names_field(self, capsys, stdin):
        stdin('{"d": 2, "members": [[1, 2], [2, "x"]]}')
        code, _, err = invoke(capsys, "compress")
        assert code == EXIT_USAGE
        assert "members[1]" in err

    def test_precondition_error(self, capsys, stdin):
        stdin("1 5\n")
        assert invoke(capsys, "compress", "--above", "1")[0] == EXIT_USAGE


class TestConfigIntegration:
    def test_jobs_precedence(self, monkeypatch):
        config = Config()
        monkeypatch.delenv("INC_KK_JOBS", raising=False)
        assert resolve_jobs(None, config) == 1
        monkeypatch.setenv("INC_KK_JOBS", "3")
        assert resolve_jobs(None, config) == 3
        assert resolve_jobs(2, config) == 2
        monkeypatch.setenv("INC_KK_JOBS", "many")
        with pytest.raises(InputFormatError):
            resolve_jobs(None, config)

    def test_config_file_defaults(self, capsys, tmp_path):
        path = tmp_path / "config.toml"
        path.write_text('[inner]\nversion = "0.1.0"\n[verify]\nn = 4\nd = 2\n', encoding="utf-8")
        code, out, _ = invoke(capsys, "verify", "main", "--m", "2", "--config", str(path), "--json")
        assert code == EXIT_OK
        assert json.loads(out)["universe"] == {"n": 4, "d": 2, "m": 2}

    def test_bad_config(self, capsys, tmp_path):
        path = tmp_path / "config.toml"
        path.write_text("[verify]\nunknown_key = 1\n", encoding="utf-8")
        assert invoke(capsys, "config", "show", "--config", str(path))[0] == EXIT_USAGE

    def test_init_and_show(self, capsys, tmp_path):
        path = tmp_path / "new.toml"
        code, out, _ = invoke(capsys, "config", "init", str(path))
        assert code == EXIT_OK and path.exists()
        assert invoke(capsys, "config", "init", str(path))[1].startswith("exists")
        code, out, _ = invoke(capsys, "config", "show", "--config", str(path), "--json")
        assert json.loads(out)["identities"]["grades"] == [2, 3, 4]

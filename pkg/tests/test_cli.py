"""End-to-end tests of the dyck command line tool via main()."""

import pytest

from dycknum import bfile, sequence
from dycknum.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestCheck:
    def test_yes(self, capsys):
        code, out, _ = run(capsys, "check", "21")
        assert (code, out) == (0, "yes\n")

    def test_no_names_the_suffix(self, capsys):
        code, out, _ = run(capsys, "check", "9")
        assert (code, out) == (1, "no (violating suffix 001)\n")

    def test_zero_is_a_member(self, capsys):
        assert run(capsys, "check", "0")[:2] == (0, "yes\n")

    def test_hex_input(self, capsys):
        assert run(capsys, "check", "0x15")[:2] == (0, "yes\n")


class TestSucc:
    def test_single(self, capsys):
        assert run(capsys, "succ", "11")[:2] == (0, "13\n")

    def test_count(self, capsys):
        code, out, _ = run(capsys, "succ", "--count", "3", "11")
        assert code == 0
        assert out == "13\n15\n19\n"

    def test_binary_output(self, capsys):
        assert run(capsys, "succ", "31", "--binary")[:2] == (0, "100111\n")

    def test_non_dyck_input_fails(self, capsys):
        code, _, err = run(capsys, "succ", "9")
        assert code == 1
        assert err.startswith("error:")
        assert "suffix 001" in err

    def test_count_matches_library_stream(self, capsys):
        from itertools import islice

        _, out, _ = run(capsys, "succ", "--count", "7", "0")
        expected = list(islice(sequence.iter_from(1), 7))
        assert [int(line) for line in out.split()] == expected


class TestRange:
    def test_list(self, capsys):
        assert run(capsys, "range", "5", "--list")[:2] == (0, "19 21 23 27 29 31\n")

    def test_stats_line(self, capsys):
        code, out, _ = run(capsys, "range", "5")
        assert code == 0
        assert out == "range 5: first=19 last=31 size=6 expected=6 match=yes\n"

    def test_list_and_stats_conflict(self, capsys):
        with pytest.raises(SystemExit) as exc_info:
            main(["range", "5", "--list", "--stats"])
        assert exc_info.value.code == 2

    def test_rejects_zero(self, capsys):
        with pytest.raises(SystemExit):
            main(["range", "0"])


class TestEnumerate:
    def test_defaults(self, capsys):
        code, out, _ = run(capsys, "enumerate")
        lines = out.split()
        assert code == 0
        assert len(lines) == 20
        assert lines[:3] == ["0", "1", "3"]

    def test_skip_zero(self, capsys):
        _, out, _ = run(capsys, "enumerate", "--skip-zero", "--count", "3")
        assert out == "1\n3\n5\n"

    def test_start(self, capsys):
        _, out, _ = run(capsys, "enumerate", "--start", "31", "--count", "2")
        assert out == "31\n39\n"

    def test_bad_start(self, capsys):
        code, _, err = run(capsys, "enumerate", "--start", "9")
        assert code == 1
        assert "not a Dyck number" in err


class TestConvert:
    def test_word(self, capsys):
        assert run(capsys, "convert", "5", "--to", "word")[:2] == (0, "UDUD\n")

    def test_long_word(self, capsys):
        _, out, _ = run(capsys, "convert", "2893215", "--to", "word")
        assert out == "UUDUDDUUUUDUUDUDDUUDDDDD\n"

    def test_heights(self, capsys):
        assert run(capsys, "convert", "5", "--to", "heights")[:2] == (0, "1 0 1\n")

    def test_standard(self, capsys):
        assert run(capsys, "convert", "3", "--to", "standard")[:2] == (0, "12\n")
        assert run(capsys, "convert", "3", "--to", "standard", "--binary")[:2] == (
            0,
            "1100\n",
        )

    def test_zero(self, capsys):
        assert run(capsys, "convert", "0", "--to", "word")[:2] == (0, "\n")
        assert run(capsys, "convert", "0", "--to", "heights")[:2] == (0, "\n")

    def test_target_is_required(self, capsys):
        with pytest.raises(SystemExit) as exc_info:
            main(["convert", "5"])
        assert exc_info.value.code == 2

    def test_non_dyck_input_fails(self, capsys):
        code, _, err = run(capsys, "convert", "9", "--to", "word")
        assert code == 1
        assert err.startswith("error:")


class TestVerifyConjecture:
    def test_holds(self, capsys):
        code, out, _ = run(capsys, "verify-conjecture", "--max-range", "5")
        lines = out.splitlines()
        assert code == 0
        assert lines[0] == "range 1: size=1 expected=1 match"
        assert lines[-1] == "conjecture holds for ranges 1..5"

    def test_max_range_required(self, capsys):
        with pytest.raises(SystemExit):
            main(["verify-conjecture"])


class TestBFileCommand:
    def test_default_emission(self, capsys):
        code, out, _ = run(capsys, "bfile")
        lines = out.splitlines()
        assert code == 0
        assert len(lines) == 20
        assert lines[0] == "1 0"

    def test_count(self, capsys):
        assert run(capsys, "bfile", "--count", "3")[:2] == (0, "1 0\n2 1\n3 3\n")

    def test_offset(self, capsys):
        _, out, _ = run(capsys, "bfile", "--count", "2", "--offset", "14")
        assert out == "14 31\n15 39\n"

    def test_check_match(self, capsys, tmp_path):
        from itertools import islice

        terms = list(islice(sequence.iter_from(), 25))
        path = tmp_path / "b036991.txt"
        path.write_text(bfile.emit_bfile(terms))
        code, out, _ = run(capsys, "bfile", "--check", str(path))
        assert (code, out) == (0, "match: 25 terms agree\n")

    def test_check_mismatch(self, capsys, tmp_path):
        from itertools import islice

        terms = list(islice(sequence.iter_from(), 6))
        text = bfile.emit_bfile(terms).replace("5 7", "5 9")
        path = tmp_path / "bad.txt"
        path.write_text(text)
        code, out, _ = run(capsys, "bfile", "--check", str(path))
        assert code == 1
        assert out == "mismatch at index 5: expected 9, got 7\n"

    def test_check_with_offset_window(self, capsys, tmp_path):
        path = tmp_path / "window.txt"
        path.write_text(bfile.emit_bfile([31, 39], offset=14))
        code, out, _ = run(capsys, "bfile", "--check", str(path))
        assert (code, out) == (0, "match: 2 terms agree\n")

    def test_check_conflicts_with_emission_options(self, capsys, tmp_path):
        path = tmp_path / "any.txt"
        path.write_text("1 0\n")
        with pytest.raises(SystemExit) as exc_info:
            main(["bfile", "--check", str(path), "--count", "5"])
        assert exc_info.value.code == 2

    def test_check_missing_file(self, capsys):
        code, _, err = run(capsys, "bfile", "--check", "/nonexistent/b.txt")
        assert code == 1
        assert err.startswith("error:")

    def test_check_malformed_file(self, capsys, tmp_path):
        path = tmp_path / "broken.txt"
        path.write_text("1 0\n9 9\n")
        code, _, err = run(capsys, "bfile", "--check", str(path))
        assert code == 1
        assert "index gap" in err


class TestOracleSucc:
    def test_value(self, capsys):
        assert run(capsys, "oracle-succ", "31")[:2] == (0, "39\n")


class TestParsing:
    def test_version(self, capsys):
        with pytest.raises(SystemExit) as exc_info:
            main(["--version"])
        assert exc_info.value.code == 0

    def test_command_required(self, capsys):
        with pytest.raises(SystemExit) as exc_info:
            main([])
        assert exc_info.value.code == 2

    def test_unknown_command(self, capsys):
        with pytest.raises(SystemExit):
            main(["frobnicate"])

    def test_non_numeric_argument(self, capsys):
        with pytest.raises(SystemExit) as exc_info:
            main(["check", "abc"])
        assert exc_info.value.code == 2

    def test_negative_argument(self, capsys):
        with pytest.raises(SystemExit):
            main(["succ", "--count", "0", "1"])


class TestBrokenPipe:
    def test_stream_into_closed_pipe_is_silent(self):
        # enough output to outlive head's three lines and the pipe buffer
        import shlex
        import subprocess
        import sys

        pipeline = (
            f"{shlex.quote(sys.executable)} -m dycknum.cli "
            "enumerate --count 20000 | head -3"
        )
        proc = subprocess.run(
            ["bash", "-c", pipeline], capture_output=True, text=True, timeout=60
        )
        assert proc.returncode == 0
        assert proc.stdout.split() == ["0", "1", "3"]
        assert proc.stderr == ""


class TestDeterminism:
    @pytest.mark.parametrize(
        "argv",
        [
            ["succ", "--count", "10", "0"],
            ["range", "8", "--list"],
            ["bfile", "--count", "30"],
        ],
    )
    def test_repeat_runs_are_byte_identical(self, capsys, argv):
        first = run(capsys, *argv)
        second = run(capsys, *argv)
        assert first == second

import io
import random
from pathlib import Path

from framelex.cli import build_parser, run

DATA_DIR = Path(__file__).resolve().parent / "data" / "fixture17"


def cli(*args, stdin=""):
    out, err = io.StringIO(), io.StringIO()
    code = run(
        ["--data", str(DATA_DIR), *args],
        stdin=io.StringIO(stdin),
        stdout=out,
        stderr=err,
    )
    return code, out.getvalue(), err.getvalue()


def test_frame_subcommand_matches_golden(golden):
    code, out, err = cli("frame", "Revenge")
    assert code == 0
    assert out == golden("frame_revenge.txt")
    assert err == ""


def test_frame_by_numeric_id():
    code, out, _ = cli("frame", "347")
    assert code == 0
    assert out.startswith("frame (347): Revenge")


def test_frames_listing():
    code, out, _ = cli("frames", "(?i)creat")
    assert code == 0
    assert out.splitlines() == [
        "(268) Cooking_creation",
        "(1658) Create_physical_artwork",
    ]


def test_frames_ids_listing():
    code, out, _ = cli("frames", "(?i)creat", "--ids")
    assert code == 0
    assert out.splitlines() == [
        "268\tCooking_creation",
        "1658\tCreate_physical_artwork",
    ]


def test_global_flags_accepted_before_subcommand():
    code_a, out_a, _ = cli("--ids", "frames", "(?i)creat")
    code_b, out_b, _ = cli("frames", "(?i)creat", "--ids")
    assert (code_a, out_a) == (code_b, out_b)


def test_lus_ids_sorted():
    code, out, _ = cli("lus", r".+en\.v", "--ids")
    assert code == 0
    ids = [int(line.split("\t")[0]) for line in out.splitlines()]
    assert ids == sorted(ids)
    assert {5331, 7544} <= set(ids)


def test_lu_subcommand_golden(golden):
    code, out, _ = cli("lu", "6067")
    assert code == 0
    assert out == golden("lu_6067.txt")


def test_doc_subcommand_golden(golden):
    code, out, _ = cli("doc", "23802")
    assert code == 0
    assert out == golden("doc_tiger.txt")


def test_stats_counts():
    code, out, _ = cli("stats")
    assert code == 0
    got = dict(line.split(": ") for line in out.splitlines())
    assert got["frames"] == "10"
    assert got["lexical units"] == "41"
    assert got["frame elements"] == "45"
    assert got["semantic types"] == "10"
    assert got["documents"] == "2"
    assert got["exemplar sentences"] == "23"
    assert got["frame annotation sets"] == "29"


def test_semtypes_and_relations_listings():
    code, out, _ = cli("semtypes")
    assert code == 0
    assert "(5) Sentient <sent> under Animate_being" in out
    code, out, _ = cli("relations", "--frame", "Revenge")
    assert code == 0
    assert out.strip() == (
        "<Parent=Rewards_and_punishments -- Inheritance -> Child=Revenge>"
    )


def test_propagate_subcommand():
    code, out, _ = cli("propagate-semtypes")
    assert code == 0
    assert "4" in out


def test_not_found_exit_code():
    code, out, err = cli("frame", "NoSuchFrame")
    assert code == 1
    assert out == ""
    assert "NoSuchFrame" in err


def test_lookup_failures_each_form():
    assert cli("lu", "1")[0] == 1
    assert cli("semtype", "X")[0] == 1
    assert cli("doc", "99999")[0] == 1


def test_bad_pattern_exit_code():
    code, _, err = cli("frames", "(unclosed")
    assert code == 2
    assert "pattern" in err


def test_usage_error_exit_code():
    out, err = io.StringIO(), io.StringIO()
    code = run(["no-such-command"], stdin=io.StringIO(), stdout=out, stderr=err)
    assert code == 2


def test_data_error_exit_code(tmp_path):
    out, err = io.StringIO(), io.StringIO()
    code = run(
        ["--data", str(tmp_path / "nowhere"), "stats"],
        stdin=io.StringIO(),
        stdout=out,
        stderr=err,
    )
    assert code == 3


def test_help_exits_zero():
    out, err = io.StringIO(), io.StringIO()
    code = run(["--help"], stdin=io.StringIO(), stdout=out, stderr=err)
    assert code == 0


def test_parser_covers_every_query_surface():
    parser = build_parser()
    subcommands = set()
    for action in parser._actions:
        if hasattr(action, "choices") and action.choices:
            subcommands.update(action.choices)
    assert {
        "frame", "frames", "lu", "lus", "fes", "relations", "relation-types",
        "fe-relations", "semtypes", "semtype", "propagate-semtypes",
        "annotations", "exemplars", "ft-sents", "doc", "docs", "stats", "browse",
    } <= subcommands


# ------------------------------------------------------------ the REPL


def test_repl_drilldown_matches_golden(golden):
    script = "frame Revenge\nlu revenge.n\nexemplar 20\nquit\n"
    code, out, _ = cli("browse", stdin=script)
    assert code == 0
    assert golden("sent_929548.txt") in out
    assert golden("frame_revenge.txt") in out
    # the prompt tracks the context path
    assert "Revenge/revenge.n> " in out
    assert "Revenge/revenge.n/929548> " in out


def test_repl_document_path(golden):
    script = "doc 23802\nsent 2\nannoset 2\nquit\n"
    code, out, _ = cli("browse", stdin=script)
    assert code == 0
    assert golden("sent_4148528.txt") in out
    assert "Tiger_Of_San_Pedro/4148528> " in out


def test_repl_up_and_errors():
    script = (
        "fe Avenger\n"          # no frame context yet
        "frame Revenge\n"
        "fe Avenger\n"
        "up\n"
        "lu nosuch.lu\n"
        "frames (broken\n"
        "help\n"
        "quit\n"
    )
    code, out, _ = cli("browse", stdin=script)
    assert code == 0
    assert "not found" in out or "error" in out


def test_repl_eof_is_clean_exit():
    code, _, _ = cli("browse", stdin="frame Revenge\n")
    assert code == 0


def test_repl_survives_fuzz():
    rng = random.Random(408)
    alphabet = (
        "abcdefghijklmnopqrstuvwxyz ABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789"
        "()[]{}<>|&;\"'`$*?.^\\/-_\t\x00\x1b\x07"
    )
    lines = []
    for _ in range(1000):
        n = rng.randint(0, 60)
        lines.append("".join(rng.choice(alphabet) for _ in range(n)))
    lines.append("quit")
    code, _, _ = cli("browse", stdin="\n".join(lines) + "\n")
    assert code == 0

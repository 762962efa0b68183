import json

import pytest

from argagg.cli import main

AF_S = "arg A\narg B\narg C\natt B A\natt B C\natt C B\n"
P64 = "6: A=in,B=out,C=in\n4: A=out,B=in,C=out\n"
P55 = "5: A=in,B=out,C=in\n5: A=out,B=in,C=out\n"


@pytest.fixture
def files(tmp_path):
    paths = {}
    for name, text in {"af_s.txt": AF_S, "p64.txt": P64, "p55.txt": P55, "bad.txt": "att X Y\n"}.items():
        p = tmp_path / name
        p.write_text(text)
        paths[name] = str(p)
    return paths


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_semantics(files, capsys):
    code, out, _ = run(capsys, "semantics", files["af_s.txt"])
    assert code == 0
    assert out.splitlines() == ["A=in B=out C=in", "A=out B=in C=out", "A=undec B=undec C=undec"]


def test_semantics_grounded_and_admissible(files, capsys):
    assert run(capsys, "semantics", files["af_s.txt"], "--kind", "grounded")[1] == "A=undec B=undec C=undec\n"
    assert len(run(capsys, "semantics", files["af_s.txt"], "--kind", "admissible")[1].splitlines()) == 5


@pytest.mark.parametrize(
    "rule,extra,expected",
    [
        ("awpr", [], "A=in B=out C=in"),
        ("so", [], "A=undec B=undec C=undec"),
        ("co", [], "A=undec B=undec C=undec"),
        ("sco", [], "A=undec B=undec C=undec"),
        ("supermajority", ["--k", "6"], "A=in B=out C=in"),
        ("supermajority", ["--k", "7"], "A=undec B=undec C=undec"),
    ],
)
def test_aggregate(files, capsys, rule, extra, expected):
    code, out, _ = run(capsys, "aggregate", "--rule", rule, *extra, files["af_s.txt"], files["p64.txt"])
    assert code == 0 and out.strip() == expected


def test_aggregate_tie(files, capsys):
    code, out, _ = run(capsys, "aggregate", "--rule", "awpr", files["af_s.txt"], files["p55.txt"])
    assert code == 2 and out.strip() == "TIE: A B C"
    code, out, _ = run(capsys, "aggregate", "--rule", "awpr", "--json", files["af_s.txt"], files["p55.txt"])
    assert code == 2 and json.loads(out)["tie"]["A"] == {"in_": 5, "out": 5, "undec": 0}


@pytest.mark.parametrize(
    "argv",
    [
        ["aggregate", "--rule", "supermajority", "AF", "P64"],
        ["aggregate", "--rule", "supermajority", "--k", "3", "AF", "P64"],
        ["semantics", "BAD"],
        ["semantics", "/nonexistent/file"],
        ["explore", "AF", "--conclusion", "Z", "--voters", "2"],
    ],
)
def test_runtime_errors_exit_1(files, capsys, argv):
    lookup = {"AF": files["af_s.txt"], "P64": files["p64.txt"], "BAD": files["bad.txt"]}
    code, _, err = run(capsys, *[lookup.get(a, a) for a in argv])
    assert code == 1 and "error" in err


@pytest.mark.parametrize("argv", [["aggregate", "--rule", "borda", "a", "b"], ["frobnicate"], []])
def test_usage_errors_exit_1(capsys, argv):
    with pytest.raises(SystemExit) as exc:
        main(argv)
    assert exc.value.code == 1


def test_postulates(capsys):
    code, out, _ = run(capsys, "postulates", "--rule", "awpr")
    assert code == 0
    lines = out.splitlines()
    assert [line.split("\t")[1:3] for line in lines] == [
        ["collective_rationality", "violated"],
        ["compatibility", "violated"],
        ["unanimity", "holds_on_tested_space"],
        ["independence", "holds_on_tested_space"],
    ]
    assert "witness=triangle" in lines[0]


def test_postulates_json(capsys):
    code, out, _ = run(capsys, "postulates", "--rule", "so", "--json")
    obj = json.loads(out)
    assert obj["postulates"]["unanimity"]["verdict"] == "violated"


def test_explore(files, capsys):
    code, out, _ = run(capsys, "explore", files["af_s.txt"], "--conclusion", "A", "--voters", "3")
    assert code == 0
    assert out.splitlines() == ["rule\tagree\tdisagree\tties\ttotal", "so\t5\t4\t1\t10", "co\t5\t4\t1\t10", "sco\t5\t4\t1\t10"]


def test_replicate(capsys):
    code, out, _ = run(capsys, "replicate", "--scenario", "marconi", "--ratio", "9:1")
    assert code == 0
    assert out.splitlines()[1] == "marconi\t9:1\tyes\tin\tundec\tundec\tundec"


def test_replicate_json_stable(capsys):
    _, first, _ = run(capsys, "replicate", "--json")
    _, second, _ = run(capsys, "replicate", "--json")
    assert first == second
    data = json.loads(first)
    assert len(data) == 12 and all(d["conclusion"]["awpr"] == "in" for d in data)


@pytest.mark.parametrize(
    "argv",
    [
        ["semantics", "AF", "--json"],
        ["aggregate", "--rule", "sco", "--json", "AF", "P64"],
        ["explore", "AF", "--conclusion", "A", "--voters", "2", "--json"],
    ],
)
def test_json_byte_stable(files, capsys, argv):
    argv = [files["af_s.txt"] if a == "AF" else files["p64.txt"] if a == "P64" else a for a in argv]
    _, a, _ = run(capsys, *argv)
    _, b, _ = run(capsys, *argv)
    assert a == b
    json.loads(a)

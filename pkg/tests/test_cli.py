import json

import pytest

from tetk import jsonio
from tetk.cli import main
from tetk.cochain import Cochain, standard_cyclic_3cocycle
from tetk.fixtures import z2_worked_example


@pytest.fixture(scope="module")
def files(tmp_path_factory):
    root = tmp_path_factory.mktemp("cli")

    def write(name, obj):
        path = root / name
        path.write_text(json.dumps(obj))
        return str(path)

    alpha = standard_cyclic_3cocycle(2, 1)
    chain = z2_worked_example()
    ext = chain["extension"]
    bad_alpha = Cochain(alpha.groupoid, 3, 2, [0, 0, 0, 1, 0, 0, 0, 0])
    from tetk.cochain import coboundary, is_normalized

    beta = Cochain(alpha.groupoid, 2, 2, [1, 0, 1, 0])
    unnorm = alpha.add(coboundary(beta))
    assert not is_normalized(unnorm)
    return {
        "alpha_unnorm": write("alpha_unnorm.json", jsonio.dump_cochain(unnorm)),
        "root": root,
        "alpha": write("alpha.json", jsonio.dump_cochain(alpha)),
        "bad_alpha": write("bad_alpha.json", jsonio.dump_cochain(bad_alpha)),
        "z2": write("z2.json", {"kind": "cyclic", "n": 2}),
        "point_z2": write("point_z2.json",
                          {"group": {"kind": "cyclic", "n": 2},
                           "points": 1, "act": [[0, 0]]}),
        "extension": write("extension.json", jsonio.dump_extension(ext)),
        "series": write("series.json", jsonio.dump_series(chain["series"])),
        "rep": write("rep.json", jsonio.dump_rep(chain["rep"], 2)),
        "theta1": write("theta1.json",
                        jsonio.dump_cochain(chain["theta1"],
                                            include_groupoid=False)),
    }


def test_cocycle_check_pass(files, capsys):
    assert main(["cocycle", "check", "--in", files["alpha"]]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["is_cocycle"] is True


def test_cocycle_check_fail_exit_1(files, capsys):
    assert main(["cocycle", "check", "--in", files["bad_alpha"]]) == 1
    report = json.loads(capsys.readouterr().out)
    assert report["is_cocycle"] is False
    assert "witness" in report


def test_cocycle_normalize(files, capsys):
    assert main(["cocycle", "normalize", "--in", files["alpha"]]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["already_normalized"] is True


def test_group_show_fixture(capsys):
    assert main(["group", "show", "--name", "s3"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["order"] == 6
    assert [c["size"] for c in report["conjugacy_classes"]] == [1, 3, 2]


def test_group_show_unknown_fixture(capsys):
    assert main(["group", "show", "--name", "monster"]) == 2


def test_cohomology_command(files, capsys):
    assert main(["cohomology", "--in", files["z2"],
                 "--degree", "3", "--modulus", "2"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["elementary_divisors"] == [2]
    assert report["order"] == 2


def test_cohomology_budget_exit_3(files, capsys):
    assert main(["cohomology", "--in", files["z2"], "--degree", "3",
                 "--modulus", "2", "--budget", "3"]) == 3


def test_transgress_command(files, capsys, tmp_path):
    out = tmp_path / "theta.json"
    assert main(["transgress", "--alpha", files["alpha"],
                 "--action", files["point_z2"], "--out", str(out)]) == 0
    report = json.loads(out.read_text())
    assert report["theta_is_cocycle"] is True
    assert report["input_was_normalized"] is True
    assert report["classes"]["1"]["theta"]["entries"] == [0, 0, 0, 1]
    assert report["classes"]["0"]["theta"]["entries"] == [0, 0, 0, 0]


def test_transgress_normalizes_on_the_fly(files, capsys):
    # a cohomologous non-normalized input routes through normalization and
    # lands on the same transgressed class restrictions
    assert main(["transgress", "--alpha", files["alpha_unnorm"],
                 "--action", files["point_z2"]]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["input_was_normalized"] is False
    assert report["theta_is_cocycle"] is True
    assert report["classes"]["1"]["theta"]["entries"] == [0, 0, 0, 1]


def test_extension_build(files, capsys):
    assert main(["extension", "build", "--in", files["extension"]]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["order"] == 4
    assert report["lift_orders"]["1"] == 4


def test_rep_verify(files, capsys):
    assert main(["rep", "verify", "--rep", files["rep"],
                 "--theta", files["theta1"]]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["twisted_law_holds"] is True


def test_tate_decompose_and_check(files, capsys):
    assert main(["tate", "decompose", "--extension", files["extension"],
                 "--lift", "1,0"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["denominator"] == 4
    assert report["rotation_check"] is True

    assert main(["tate", "check", "--series", files["series"],
                 "--extension", files["extension"], "--lift", "1,0"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["rotation_check"] and report["moonshine_transform_check"]
    assert report["checks_agree"] is True


def test_malformed_json_exit_2(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text('{"degree": 3,')
    assert main(["cocycle", "check", "--in", str(bad)]) == 2
    err = capsys.readouterr().err
    assert "line" in err


def test_reports_are_deterministic(files, capsys):
    main(["group", "show", "--name", "q8"])
    first = capsys.readouterr().out
    main(["group", "show", "--name", "q8"])
    second = capsys.readouterr().out
    assert first == second


def test_markdown_output(files, capsys):
    assert main(["cohomology", "--in", files["z2"], "--degree", "3",
                 "--modulus", "2", "--output", "markdown"]) == 0
    out = capsys.readouterr().out
    assert out.startswith("# tetk cohomology")


def test_modulus_override_embeds_cochain(files, capsys):
    assert main(["cocycle", "check", "--in", files["alpha"],
                 "--modulus", "6"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["modulus"] == 6 and report["is_cocycle"] is True
    # a non-multiple is an input error
    assert main(["cocycle", "check", "--in", files["alpha"],
                 "--modulus", "3"]) == 2


def test_budget_env_fallback(files, monkeypatch):
    monkeypatch.setenv("TETK_BUDGET", "3")
    assert main(["cohomology", "--in", files["z2"],
                 "--degree", "3", "--modulus", "2"]) == 3


def test_suite_command_runs_every_criterion(files, capsys):
    from tetk.acceptance import CRITERIA

    assert main(["suite"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["passed"] == len(CRITERIA)
    assert report["failed"] == 0
    assert len(report["criteria"]) == len(CRITERIA)
    assert all(line.startswith("PASS") for line in report["criteria"])


def test_suite_reports_are_deterministic(files, capsys):
    # seeded sweeps and no raw timings: identical (config, seed) -> identical bytes
    main(["suite", "--seed", "7"])
    first = capsys.readouterr().out
    main(["suite", "--seed", "7"])
    second = capsys.readouterr().out
    assert first == second

import json
import shutil

from paritymark.cli import main
from paritymark.harness.corpus import bundled_dir


def _copy(tmp_path, name="050"):
    dst = tmp_path / f"{name}.py"
    shutil.copy(bundled_dir() / f"{name}.py", dst)
    return dst


def test_embed_detect(tmp_path, capsys):
    src = _copy(tmp_path)
    out = tmp_path / "out.py"
    assert main(["embed", str(src), "--message", "01", "--org", "O2", "--out", str(out)]) == 0
    report = json.loads((tmp_path / "out.py.report.json").read_text())
    assert report["formal"]["case"] == "Case1-BCH"
    assert report["formal"]["w"] in {"0101", "0111", "1101"}
    capsys.readouterr()
    assert main(["detect", str(out), "--all-orgs"]) == 0
    found = json.loads(capsys.readouterr().out)[0]
    assert found["combined"] and found["formal"]["m"] == "01" and found["attribution"] == ["O2"]


def test_detect_clean_strict(tmp_path, capsys):
    src = _copy(tmp_path)
    main(["detect", str(src), "--org", "O1", "--strict"])
    assert json.loads(capsys.readouterr().out)[0]["verdict"] is False


def test_zero_anchor_file(tmp_path):
    src = _copy(tmp_path, "000")
    out = tmp_path / "o.py"
    assert main(["embed", str(src), "-m", "01", "--org", "O1", "-o", str(out)]) == 2
    assert out.read_text() == src.read_text()


def test_errors(tmp_path, capsys):
    src = _copy(tmp_path)
    assert main(["embed", str(src), "-m", "011", "--org", "O1"]) == 1
    assert "2 bits" in capsys.readouterr().err
    assert main(["embed", str(src), "-m", "01", "--org", "nobody"]) == 1
    assert "unknown org" in capsys.readouterr().err
    bad = tmp_path / "bad.py"
    bad.write_text("def f(:\n")
    assert main(["embed", str(bad), "-m", "01", "--org", "O1"]) == 1
    assert "line 1" in capsys.readouterr().err
    assert main(["detect", str(bad), str(src)]) == 0
    results = json.loads(capsys.readouterr().out)
    assert "error" in results[0] and "combined" in results[1]


def test_org_registry(tmp_path, capsys):
    reg = tmp_path / "reg.json"
    assert main(["org", "init", "--id", "O1", "--seed", "7", "--registry", str(reg)]) == 0
    assert main(["org", "init", "--id", "O1", "--seed", "7", "--registry", str(reg)]) == 0
    main(["org", "list", "--registry", str(reg)])
    assert capsys.readouterr().out.count("O1\tseed=7") == 1


def test_attack_reformat(tmp_path, capsys):
    from paritymark import parse
    src = _copy(tmp_path)
    main(["attack", str(src), "--attack", "reformat:1.0", "--seed", "3"])
    assert parse(capsys.readouterr().out).structure() == parse(src.read_text()).structure()


def test_determinism(tmp_path):
    src = _copy(tmp_path)
    for name in ("a.py", "b.py"):
        main(["embed", str(src), "-m", "10", "--org", "O1", "--seed", "4", "-o", str(tmp_path / name)])
    assert (tmp_path / "a.py").read_text() == (tmp_path / "b.py").read_text()


def test_eval_command(tmp_path, capsys):
    corpus = tmp_path / "c"
    corpus.mkdir()
    for i in range(40, 46):
        for ext in (".py", ".tests.json"):
            shutil.copy(bundled_dir() / f"{i:03d}{ext}", corpus)
    csv_path, js = tmp_path / "e.csv", tmp_path / "e.json"
    assert main(["eval", "--corpus", str(corpus), "--attack", "rename:1.0",
                 "--csv", str(csv_path), "--summary", str(js), "--indist", str(tmp_path / "ind")]) == 0
    assert "tpr=" in capsys.readouterr().out
    assert json.loads(js.read_text())["VariableRename:1"]["tpr"] >= 0.0
    assert (tmp_path / "ind_jsd.csv").exists() and (tmp_path / "ind_similarity_01.csv").exists()

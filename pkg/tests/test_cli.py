import json

from mwkit.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_gw_json_report(capsys):
    code, out, err = run_cli(capsys, "gw", "--ring", "Z/4", "--kind", "reduced", "--out", "json")
    assert code == 0 and not err
    report = json.loads(out)
    assert report["rank"] == 2
    assert report["torsion"] == []
    assert report["minus_one_is_one"] is False
    assert report["split"] == {
        "plus_rank": 1, "minus_rank": 1, "plus_torsion_odd": [], "minus_torsion_odd": [],
    }


def test_sumsq_json_report(capsys):
    code, out, _ = run_cli(capsys, "sumsq", "--ring", "Z/4")
    assert code == 0
    report = json.loads(out)
    assert report["minus_one_exponent"] is None
    assert report["exponents"] == {"1": 0}


def test_ringinfo(capsys):
    code, out, _ = run_cli(capsys, "ringinfo", "--ring", "Z/12")
    assert code == 0
    report = json.loads(out)
    assert report["cardinality"] == 12
    assert report["units"] == ["1", "5", "7", "11"]


def test_prove_success_exit_zero(capsys):
    code, out, err = run_cli(
        capsys, "prove", "--mode", "hopf-steinberg",
        "--hyp", "unit(a),unit(1-a)", "<a>+<1-a> = 1+<a*(1-a)>",
    )
    assert code == 0, err
    report = json.loads(out)
    assert report["status"] == "proved"
    assert report["checked"] is True
    assert report["steps"]
    for step in report["steps"]:
        assert {"axiom", "direction", "pos", "instance"} == set(step)


def test_prove_unknown_exit_two(capsys):
    code, out, _ = run_cli(capsys, "prove", "--depth", "2", "<a> = <-1>")
    assert code == 2
    assert json.loads(out)["status"] == "unknown"


def test_prove_reads_file(tmp_path, capsys):
    path = tmp_path / "identity.txt"
    path.write_text("eta h = 0\n")
    code, out, _ = run_cli(capsys, "prove", "--file", str(path))
    assert code == 0
    assert json.loads(out)["status"] == "proved"


def test_parse_error_exit_one(capsys):
    code, out, err = run_cli(capsys, "prove", "<a> +")
    assert code == 1
    assert not out
    assert "error:" in err and "column" in err


def test_ring_error_exit_one(capsys):
    code, out, err = run_cli(capsys, "gw", "--ring", "Z/1")
    assert code == 1
    assert "error:" in err


def test_compare_and_validate(capsys):
    code, out, _ = run_cli(capsys, "compare", "--ring", "Z/16")
    assert code == 0
    report = json.loads(out)
    assert isinstance(report["extra_relations_implied"], bool)

    code, out, _ = run_cli(capsys, "validate", "--ring", "Z/7")
    assert code == 0
    report = json.loads(out)
    assert report["lattices_equal"] is True
    assert (report["rank"], report["torsion"]) == (1, [2])


def test_byte_identical_reruns(capsys):
    outputs = []
    for _ in range(2):
        code, out, _ = run_cli(capsys, "gw", "--ring", "GF(3^2)", "--kind", "hopf")
        assert code == 0
        outputs.append(out)
    assert outputs[0] == outputs[1]
    outputs = []
    for _ in range(2):
        code, out, _ = run_cli(capsys, "sumsq", "--ring", "GR(4,2)", "--out", "csv")
        assert code == 0
        outputs.append(out)
    assert outputs[0] == outputs[1]


def test_table_family(tmp_path, capsys):
    family = tmp_path / "family.txt"
    family.write_text("# odd prime fields\nZ/3\nZ/5\nZ/4\n")
    code, out, _ = run_cli(capsys, "table", "--family", str(family), "--metrics", "units,sumsq")
    assert code == 0
    rows = json.loads(out)
    assert [r["ring"] for r in rows] == ["Z/3", "Z/5", "Z/4"]
    assert [r["minus_one_exponent"] for r in rows] == [1, 0, None]
    assert [r["n_units"] for r in rows] == [2, 4, 2]


def test_table_galois_ring_minus_one(tmp_path, capsys):
    family = tmp_path / "family.txt"
    family.write_text("GR(4,2)\nGR(4,3)\n")
    code, out, _ = run_cli(capsys, "table", "--family", str(family), "--metrics", "sumsq")
    assert code == 0
    rows = json.loads(out)
    # -1 is a sum of two Teichmueller squares in GR(4,2); in GR(4,3) no
    # pair of squares reaches it and the fixpoint needs a second round
    assert [r["minus_one_exponent"] for r in rows] == [1, 2]


def test_table_power_of_two_family(tmp_path, capsys):
    family = tmp_path / "family.txt"
    family.write_text("Z/4\nZ/8\nZ/16\n")
    code, out, _ = run_cli(capsys, "table", "--family", str(family), "--metrics", "sumsq")
    assert code == 0
    rows = json.loads(out)
    assert [r["minus_one_exponent"] for r in rows] == [None, None, None]


def test_table_row_errors_are_isolated(tmp_path, capsys):
    family = tmp_path / "family.txt"
    family.write_text("Z/3\nZ/1\nZ/5\n")
    code, out, _ = run_cli(capsys, "table", "--family", str(family), "--metrics", "units")
    assert code == 1
    rows = json.loads(out)
    assert rows[0]["n_units"] == 2
    assert "error" in rows[1]
    assert rows[2]["n_units"] == 4


def test_table_markdown_and_csv(tmp_path, capsys):
    family = tmp_path / "family.txt"
    family.write_text("Z/3\nZ/5\n")
    code, out, _ = run_cli(capsys, "table", "--family", str(family),
                           "--metrics", "units", "--out", "markdown")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0].startswith("| ring |")
    assert len(lines) == 4
    code, out, _ = run_cli(capsys, "table", "--family", str(family),
                           "--metrics", "units", "--out", "csv")
    assert code == 0
    assert out.splitlines()[0] == "ring,n_units"


def test_version_flag(capsys):
    code, out, _ = run_cli(capsys, "--version")
    assert code == 0
    assert out.startswith("mwkit ")


def test_gw_full_table_for_small_family(tmp_path, capsys):
    family = tmp_path / "family.txt"
    family.write_text("Z/3\nZ/4\n")
    code, out, _ = run_cli(capsys, "table", "--family", str(family))
    assert code == 0
    rows = json.loads(out)
    assert rows[0]["reduced_rank"] == 1
    assert rows[0]["reduced_torsion"] == [2]
    assert rows[1]["reduced_rank"] == 2
    assert rows[1]["plus_rank"] == 1 and rows[1]["minus_rank"] == 1
    assert rows[0]["comparison"] is True

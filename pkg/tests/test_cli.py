import json
import random

from tropdimer.cli import run


def invoke(capsys, *argv):
    code = run(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_kasteleyn_honeycomb_exact_output(capsys):
    code, out, _ = invoke(capsys, "kasteleyn", "catalog:honeycomb", "--gauge", "paper")
    assert code == 0
    assert out == "3 - z1 - z2 - z1^-1*z2^-1\n"


def test_gauge_variants_accepted(capsys):
    for gauge in ("trivial", "random:7"):
        code, out, _ = invoke(capsys, "kasteleyn", "catalog:honeycomb", "--gauge", gauge)
        assert code == 0 and out.strip()


def test_validate_catalog_entries(capsys):
    code, out, _ = invoke(capsys, "validate", "catalog:honeycomb")
    assert code == 0 and out.startswith("ok")
    code, out, _ = invoke(capsys, "validate", "catalog:pants-min", "--json")
    assert code == 0
    assert json.loads(out) == {"ok": True, "immersed": True}


def test_unknown_subcommand_is_usage_error(capsys):
    code, _, _ = invoke(capsys, "frobnicate")
    assert code == 2


def test_malformed_json_reports_position(tmp_path, capsys):
    doc = tmp_path / "bad.json"
    doc.write_text('{\n  "schema": ,\n}')
    code, _, err = invoke(capsys, "validate", str(doc))
    assert code == 2
    assert "line 2" in err and "column" in err


def test_schema_violation_is_usage_error(tmp_path, capsys):
    doc = tmp_path / "bad.json"
    doc.write_text('{"schema": "tropdimer/9"}')
    code, _, err = invoke(capsys, "validate", str(doc))
    assert code == 2 and "error:" in err


def test_invalid_dimer_is_domain_failure(tmp_path, capsys):
    doc = tmp_path / "lonely.json"
    doc.write_text(
        json.dumps(
            {
                "schema": "tropdimer/1",
                "denominator": 1,
                "polytopes": [
                    {"color": "white", "vertices": [[0, 0], [1, 0], [0, 1]]},
                    {"color": "black", "vertices": [[0, 0], [1, 0], [1, 1]]},
                ],
                "weights": {},
            }
        )
    )
    code, out, _ = invoke(capsys, "validate", str(doc))
    assert code == 1
    assert "FAIL" in out


def test_mutate_writes_dimer_and_reports_immersion(tmp_path, capsys):
    out_path = tmp_path / "mut.json"
    code, out, _ = invoke(capsys, "mutate", "catalog:honeycomb", "--face", "0", "--out", str(out_path))
    assert code == 0
    assert out == "immersed: true\n"
    code, out, _ = invoke(capsys, "validate", str(out_path), "--json")
    assert code == 0 and json.loads(out)["immersed"]


def test_mutate_out_of_range_face(capsys):
    code, _, err = invoke(capsys, "mutate", "catalog:honeycomb", "--face", "9")
    assert code == 1 and "face not found" in err


def test_fan_and_zigzags_and_euler(capsys):
    code, out, _ = invoke(capsys, "fan", "catalog:honeycomb", "--json")
    assert code == 0
    assert sorted(map(tuple, (tuple(r) for r, _ in json.loads(out)))) == [
        (-1, -1),
        (-1, 2),
        (2, -1),
    ]
    code, out, _ = invoke(capsys, "zigzags", "catalog:honeycomb", "--json")
    assert code == 0 and len(json.loads(out)) == 3
    code, out, _ = invoke(capsys, "euler", "catalog:cp2-seed")
    assert code == 0 and out.strip() == "0"


def test_matchings_count(capsys):
    code, out, _ = invoke(capsys, "matchings", "catalog:honeycomb")
    assert code == 0 and out.strip() == "6"


def test_compare_seed(capsys):
    code, out, _ = invoke(capsys, "compare-seed", "catalog:cp2-seed", "cp2")
    assert code == 0 and out.startswith("[[")


def test_genus(capsys):
    code, out, _ = invoke(capsys, "genus", "5")
    assert code == 0 and out.strip() == "6"


def test_catalog_listing(capsys):
    code, out, _ = invoke(capsys, "catalog")
    assert code == 0
    names = out.split()
    assert "honeycomb" in names and "bl3-seed" in names


def test_render_polygon_and_zigzag_counts(tmp_path, capsys):
    svg = tmp_path / "h.svg"
    code, _, _ = invoke(capsys, "render", "catalog:honeycomb", "--out", str(svg))
    assert code == 0
    body = svg.read_text()
    assert body.count("<polygon") == 6
    code, _, _ = invoke(capsys, "render", "catalog:honeycomb", "--show", "zigzags", "--out", str(svg))
    assert code == 0
    assert svg.read_text().count('<g class="zigzag"') == 3


def test_render_is_deterministic(capsys):
    code1, out1, _ = invoke(capsys, "render", "catalog:honeycomb", "--show", "edges,zigzags")
    code2, out2, _ = invoke(capsys, "render", "catalog:honeycomb", "--show", "edges,zigzags")
    assert code1 == code2 == 0
    assert out1 == out2


def test_color_env_toggles_ansi(capsys, monkeypatch):
    monkeypatch.setenv("TROPDIMER_COLOR", "1")
    _, out, _ = invoke(capsys, "validate", "catalog:honeycomb")
    assert "\x1b[32m" in out
    monkeypatch.setenv("TROPDIMER_COLOR", "0")
    _, out, _ = invoke(capsys, "validate", "catalog:honeycomb")
    assert "\x1b[" not in out


def test_atf_round_trip_via_cli(capsys):
    code, out, _ = invoke(capsys, "atf", "exchange", "cp2")
    assert code == 0
    assert "admissible: true" in out


def test_fuzzed_input_never_crashes(tmp_path, capsys):
    rng = random.Random(20240817)
    doc = tmp_path / "fuzz.json"
    for _ in range(1000):
        blob = bytes(rng.randrange(256) for _ in range(rng.randrange(60)))
        doc.write_bytes(blob)
        code, _, _ = invoke(capsys, "validate", str(doc))
        assert code in (0, 1, 2)

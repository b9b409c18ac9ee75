import json
import os
import sys

import pytest

module_dir = os.environ.get("BSTACK_MODULE_DIR")
if module_dir:
    sys.path.insert(0, module_dir)

try:
    import _bstack as bstack
except ImportError:  # installed package layout
    import bstack


def test_catalog_lists():
    assert "H3" in bstack.catalog_examples()
    assert any(f.startswith("S") for f in bstack.catalog_families())


def test_group_info():
    info = bstack.group_info("catalog:B3")
    assert info["order"] == 48
    assert info["dim"] == 3


def test_analyze_s3_is_trivial():
    report = bstack.analyze("catalog:S3")
    assert report["verdict"]["verdict"] == "trivial"
    assert report["phi"] == ["-1", "0", "1"]
    assert report["ekedahl_identity"]["holds"] is True
    assert report["orbit_poset"]["size"] == 3


def test_analyze_i2_4_chi():
    report = bstack.analyze("catalog:I2_4")
    assert report["orbit_poset"]["chi"] == ["1", "-2", "1"]
    assert report["verdict"]["verdict"] == "trivial"


def test_rotations_are_unresolved(tmp_path):
    group = {
        "name": "C3-rotations",
        "dim": 2,
        "zeta_order": 3,
        "generators": [
            {
                "rows": 2,
                "cols": 2,
                "entries": [
                    [{"m": 3, "coeffs": ["0/1", "1/1"]}, 0],
                    [0, {"m": 3, "coeffs": ["-1/1", "-1/1"]}],
                ],
            }
        ],
    }
    path = tmp_path / "c3.json"
    path.write_text(json.dumps(group))
    report = bstack.analyze(str(path))
    assert report["verdict"]["verdict"] == "unresolved"
    assert report["verdict"]["reason"] == "not generated by reflections"


def test_count_points():
    report = bstack.count_points("catalog:S3", 5)
    assert report["agree"] is True
    assert report["point_count"] == 12


def test_export_poset():
    dot = bstack.export_poset("catalog:S3")
    assert "digraph" in dot
    data = bstack.export_poset("catalog:S3", format="json")
    assert len(data["nodes"]) == 3


def test_theorem_c():
    cert = bstack.theorem_c("catalog:C4", 2)
    assert cert["verdict"] == "trivial"
    with pytest.raises(ValueError):
        bstack.theorem_c("catalog:S3", 2)


def test_bad_input_raises():
    with pytest.raises(ValueError):
        bstack.analyze("catalog:NOPE")

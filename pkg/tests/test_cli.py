import json
import os
import subprocess
import sys

import pytest

from pdwpf.cli import main
from pdwpf.exactnum import parse_scalar


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, json.loads(out)


def test_dwpf_single_vertex(capsys):
    code, doc = run(capsys, "compute", "--object", "dwpf", "--scheme", "rational", "--x", "2", "--y", "0")
    assert code == 0 and doc["value"] == "1/3" and doc["object"] == "dwpf"


def test_kostov_equals_hybrid(capsys):
    _, a = run(capsys, "compute", "--object", "pdwpf-kostov", "--x", "3", "--y", "0,1/2")
    _, b = run(capsys, "compute", "--object", "pdwpf-hybrid", "--x", "3", "--y", "0,1/2")
    assert a["value"] == b["value"]


def test_oracle_count(capsys):
    code, doc = run(capsys, "compute", "--object", "oracle-count", "--family", "dwbc", "--N", "3")
    assert code == 0 and doc["value"] == "7"
    code, doc = run(capsys, "oracle", "--family", "dwbc", "--N", "4")
    assert doc["value"] == "42"


@pytest.mark.parametrize("obj", ["pdwpf-sum", "zeta1", "zeta2", "oracle-pdw-topsum", "tau"])
def test_values_round_trip(capsys, obj):
    code, doc = run(capsys, "compute", "--object", obj, "--x", "1/2,3", "--y", "0,-2/3,5")
    assert code == 0
    parse_scalar(doc["value"])


def test_trig_objects(capsys):
    args = ["--ex", "3", "--ey", "2,5", "--eg", "2"]
    _, a = run(capsys, "compute", "--object", "pdwpf-trig-hybrid", *args)
    _, b = run(capsys, "compute", "--object", "oracle-pdw-topsum", "--scheme", "trigonometric", *args)
    assert a["value"] == b["value"]


def test_scalar_product_paths(capsys):
    code, doc = run(capsys, "compute", "--object", "scalar-product", "--x", "3", "--y", "0,0", "--b=-1/2")
    assert code == 0
    _, oracle = run(capsys, "compute", "--object", "oracle-scalar-product", "--x", "3", "--y", "0,0",
                    "--b=-1/2")
    assert doc["value"] == oracle["value"]
    code, doc = run(capsys, "compute", "--object", "scalar-product", "--x", "3", "--y", "0,2")
    assert code == 0 and doc["numeric"] is True and abs(float(doc["value"]) + 0.25) < 1e-12


def test_gv_det(capsys):
    code, doc = run(capsys, "compute", "--object", "gv-det", "--x", "3,1/2", "--N", "4", "--g2", "1")
    assert code == 0 and set(doc) >= {"g0", "g2_coefficient", "value"}


def test_exit_codes(capsys):
    code, doc = run(capsys, "compute", "--object", "pdwpf-hybrid", "--x", "1,1", "--y", "0,2")
    assert code == 3 and doc["error"] == "degenerate-rapidities"
    code, doc = run(capsys, "compute", "--object", "pdwpf-hybrid", "--x", "1/0", "--y", "0")
    assert code == 2 and doc["error"] == "malformed-input"
    code, doc = run(capsys, "compute", "--object", "scalar-product", "--x", "3", "--y", "0,0", "--b", "1")
    assert code == 3 and doc["error"] == "not-bethe-roots"
    code, doc = run(capsys, "compute", "--object", "pdwpf-hybrid", "--x", "1")
    assert code == 2
    with pytest.raises(SystemExit) as exc:
        main(["compute", "--object", "nonsense"])
    assert exc.value.code == 2


def test_verify_exit_zero_and_zero_residuals(capsys):
    code, doc = run(capsys, "verify", "--suite", "kp", "--seed", "7")
    assert code == 0 and doc["passed"]
    residuals = [c for c in doc["cases"] if "hirota-miwa" in c["id"]]
    assert residuals and all(c["actual"] == "0" for c in residuals)


def test_verify_izergin_small(capsys):
    code, doc = run(capsys, "verify", "--suite", "izergin", "--max-N", "4", "--seed", "1")
    assert code == 0 and doc["summary"]["failed"] == 0
    ids = [c["id"] for c in doc["cases"]]
    assert ids == sorted(ids)


def test_text_output(capsys):
    code = main(["verify", "--suite", "limits", "--output", "text"])
    out = capsys.readouterr().out
    assert code == 0 and out.strip().endswith("passed")


def test_module_entry_point():
    env = dict(os.environ, PDWPF_THREADS="1")
    res = subprocess.run([sys.executable, "-m", "pdwpf", "compute", "--object", "dwpf", "--x", "2", "--y", "0"],
                         capture_output=True, text=True, env=env, check=False)
    assert res.returncode == 0 and json.loads(res.stdout)["value"] == "1/3"

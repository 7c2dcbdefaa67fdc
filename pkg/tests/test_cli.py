import io
import json
import subprocess
import sys

import pytest

from twhitehead.cli import run, verify
from twhitehead.polyring import LaurentPoly, variables

M, L = variables("M L")
K1 = L ** 2 * M ** 4 - L * M ** 4 + 4 * L * M ** 2 - L + 1


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def test_apoly_json():
    code, out, _ = call("apoly", "--k", "1", "--json")
    assert code == 0
    obj = json.loads(out)
    assert LaurentPoly.from_json(obj["canonical_factor"]) == K1
    assert obj["newton_polygon"]["slopes"] == ["1/4", "inf"]


def test_apoly_text():
    code, out, _ = call("apoly", "--k", "2")
    assert code == 0
    assert "non-hyperbolic factor: M^2*L - 1" in out


def test_riley_k0_warns():
    code, out, err = call("riley", "--k", "0")
    assert code == 0
    assert "not hyperbolic" in err
    assert "riley (x, y, z): z" in out


def test_riley_two_bridge():
    code, out, _ = call("riley", "--two-bridge", "8,3", "--json")
    assert code == 0
    assert json.loads(out)["two_bridge"] == [8, 3]


def test_canonical_and_newton():
    assert call("canonical", "--k", "3")[0] == 0
    code, out, _ = call("newton", "--k", "1")
    assert code == 0
    assert "slopes: 1/4, inf" in out


def test_verify_odd_passes():
    code, out, _ = call("verify", "--k", "3", "--trials", "5")
    assert code == 0
    assert "FAIL" not in out


def test_verify_even_total_framing_passes():
    code, out, _ = call("verify", "--k", "2", "--trials", "5", "--framing", "total")
    assert code == 0, out


def test_verify_even_preferred_reports_failure():
    # the closed form sits in the framing shifted by the linking number
    code, out, _ = call("verify", "--k", "2", "--trials", "5")
    assert code == 1
    assert "FAIL  elimination oracle" in out
    assert "PASS  riley matrices" in out


def test_verify_rows():
    rows = verify(1, trials=4)
    assert all(passed for _, passed, _ in rows)


def test_volume_outputs():
    code, out, _ = call("volume", "--k", "1", "--alpha", "2.0")
    assert code == 0
    assert out.startswith("Vol E(W_1, alpha=2) = ")
    code, out, _ = call("volume", "--k", "1", "--alpha", "2.0", "--csv")
    assert out.splitlines()[0] == "omega,re_z,im_z,integrand"
    code, out, _ = call("volume", "--k", "1", "--alpha", "2.0", "--json")
    assert json.loads(out)["k"] == 1


def test_cover_and_alpha_bound():
    code, out, _ = call("cover", "--k", "1", "--r", "5", "--json")
    assert code == 0 and json.loads(out)["r"] == 5
    code, out, _ = call("alpha-bound", "--k", "1")
    assert code == 0 and out.startswith("alpha_W1 = 2.507")


def test_deterministic_output():
    a = call("verify", "--k", "1", "--trials", "3", "--json")
    b = call("verify", "--k", "1", "--trials", "3", "--json")
    assert a == b
    assert call("volume", "--k", "2", "--alpha", "1.5", "--csv") == \
        call("volume", "--k", "2", "--alpha", "1.5", "--csv")


@pytest.mark.parametrize("argv", [
    ["apoly"],
    ["volume", "--k", "1"],
    ["cover", "--k", "1"],
    ["nosuch"],
    ["apoly", "--k", "-1"],
    ["apoly", "--k", "x"],
    ["riley", "--two-bridge", "9,3"],
    ["volume", "--k", "1", "--alpha", "1", "--json", "--csv"],
])
def test_usage_errors(argv):
    assert call(*argv)[0] == 2


@pytest.mark.parametrize("argv", [
    ["cover", "--k", "1", "--r", "2"],
    ["apoly", "--k", "0"],
    ["volume", "--k", "1", "--alpha", "4"],
])
def test_computation_errors(argv):
    code, _, err = call(*argv)
    assert code == 1
    assert err.startswith("error:")


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "twhitehead.cli", "canonical", "--k", "1"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert "M^4*L^2 - M^4*L + 4*M^2*L - L + 1" in proc.stdout

"""End-to-end checks of the ave-lab command line tool.

Usage: test_cli.py <path to ave-lab> <data directory>
"""

import csv
import json
import subprocess
import sys
import tempfile
import unittest
from pathlib import Path

EXE = ""
DATA = Path()


def run(*args, cwd=None):
    return subprocess.run([EXE, *map(str, args)], capture_output=True, text=True, cwd=cwd, timeout=300)


def results(*args):
    proc = run(*args)
    if proc.returncode != 0:
        raise AssertionError(f"{args} exited {proc.returncode}: {proc.stderr}")
    doc = json.loads(proc.stdout)
    assert doc["schema"] == "ave-lab/1"
    return doc["results"]


class Spectrum(unittest.TestCase):
    def test_B(self):
        r = results("spectrum", DATA / "B.json")
        self.assertAlmostEqual(r["rho_a"], 0.0, delta=1e-9)
        self.assertAlmostEqual(r["rho_R"], 2.0, delta=1e-9)
        self.assertFalse(r["degenerate"])

    def test_identity_is_degenerate(self):
        self.assertTrue(results("spectrum", DATA / "identity.json")["degenerate"])


class Degree(unittest.TestCase):
    def test_examples(self):
        self.assertEqual(results("degree", DATA / "B.json")["degree"], 1)
        self.assertEqual(results("degree", DATA / "C.json")["degree"], 0)

    def test_undefined_degree_warns(self):
        proc = run("degree", DATA / "identity.json")
        self.assertEqual(proc.returncode, 0)
        self.assertIsNone(json.loads(proc.stdout)["results"]["degree"])
        self.assertIn("degenerate", proc.stderr)


class Solve(unittest.TestCase):
    def test_2I(self):
        r = results("solve", DATA / "C.json", "--rhs", "-1,-1")
        self.assertEqual(r["count"], 4)
        self.assertEqual(r["orientation_sum"], 0)


class QCheck(unittest.TestCase):
    def test_reduced_B_is_Q(self):
        r = results("qcheck", "--from-ave", DATA / "B.json", "--sigma", "++")
        self.assertEqual(r["verdict"], "Q")
        self.assertEqual(r["method"], "exact_2d")
        self.assertEqual(r["M"]["rows"], [[3.0, -2.0], [2.0, -1.0]])

    def test_negative_identity_is_not_Q(self):
        self.assertEqual(results("qcheck", DATA / "neg_identity.json")["verdict"], "not_Q")


class Trace(unittest.TestCase):
    def trace(self, matrix, ts, samples=360):
        out = Path(tempfile.mkdtemp())
        r = results("trace", DATA / matrix, "--t", ",".join(map(str, ts)), "--samples", samples, "--out", out)
        return out, {tr["t"]: tr for tr in r["traces"]}

    def test_csv_layout(self):
        out, traces = self.trace("B.json", [1.0], samples=64)
        with open(out / traces[1.0]["csv"], newline="") as f:
            rows = list(csv.reader(f))
        self.assertEqual(rows[0], ["theta", "x1", "x2", "fx1", "fx2"])
        self.assertEqual(len(rows) - 1, 64)
        for row in rows[1:]:
            theta, x1, x2, fx1, fx2 = map(float, row)
            self.assertAlmostEqual(x1 * x1 + x2 * x2, 1.0, delta=1e-12)
            # B |x| = (|x1| - |x2|) (1, 1)
            d = abs(x1) - abs(x2)
            self.assertAlmostEqual(fx1, x1 - d, delta=1e-12)
            self.assertAlmostEqual(fx2, x2 - d, delta=1e-12)
        self.assertTrue((out / "trace_report.json").exists())

    def test_winding_numbers(self):
        _, b = self.trace("B.json", [1.0, 0.4])
        self.assertEqual(b[1.0]["winding_number"], 1)
        self.assertEqual(b[0.4]["winding_number"], 1)
        _, c = self.trace("C.json", [0.4, 1.0])
        self.assertEqual(c[0.4]["winding_number"], 1)
        self.assertEqual(c[1.0]["winding_number"], 0)


class Determinism(unittest.TestCase):
    def test_byte_identical(self):
        for args in (("degree", DATA / "B.json"), ("compare", DATA / "nonneg3.json", "--restarts", "8")):
            self.assertEqual(run(*args).stdout, run(*args).stdout)

    def test_trace_files_identical(self):
        a, b = Path(tempfile.mkdtemp()), Path(tempfile.mkdtemp())
        for out in (a, b):
            run("trace", DATA / "C.json", "--t", "0.4", "--out", out)
        self.assertEqual((a / "trace_t0.4.csv").read_bytes(), (b / "trace_t0.4.csv").read_bytes())


class ExitCodes(unittest.TestCase):
    def test_parse_error(self):
        with tempfile.NamedTemporaryFile("w", suffix=".json", delete=False) as f:
            f.write("{not json")
        self.assertEqual(run("spectrum", f.name).returncode, 2)
        self.assertEqual(run("spectrum", DATA / "missing.json").returncode, 2)

    def test_dimension_cap(self):
        n = 21
        rows = [[0.0] * n for _ in range(n)]
        with tempfile.NamedTemporaryFile("w", suffix=".json", delete=False) as f:
            json.dump({"n": n, "rows": rows}, f)
        self.assertEqual(run("degree", f.name).returncode, 3)

    def test_trace_requires_2x2(self):
        self.assertEqual(run("trace", DATA / "nonneg3.json", "--t", "1").returncode, 4)

    def test_unknown_subcommand(self):
        self.assertNotEqual(run("frobnicate").returncode, 0)


class Suites(unittest.TestCase):
    def test_ker_im_suite_passes(self):
        r = results("suite", "ker-im")
        self.assertEqual(r["failed"], 0)
        self.assertEqual(r["passed"], 50)


if __name__ == "__main__":
    EXE = str(Path(sys.argv[1]).resolve())
    DATA = Path(sys.argv[2]).resolve()
    unittest.main(argv=sys.argv[:1], verbosity=2)

import csv
import io
import json
import os
import subprocess
import tempfile
import unittest

FLOAT_FIELDS = ["trig_rel_err", "oracle_rel_err"]


class TestCmd(unittest.TestCase):
    def _remove_fields_from_json(self, json_file):
        _dict = json.loads(json_file)
        for row in _dict.get("rows", []):
            for del_item in FLOAT_FIELDS:
                if del_item in row:
                    del row[del_item]

        for del_item in FLOAT_FIELDS:
            if del_item in _dict.get("results", {}):
                del _dict["results"][del_item]

        for check in _dict["checks"]:
            if "rel_err" in check["name"]:
                del check["detail"]

        return _dict

    def _remove_fields_from_csv(self, csv_file):
        rows = list(csv.DictReader(io.StringIO(csv_file)))
        for row in rows:
            for del_item in FLOAT_FIELDS:
                if del_item in row:
                    del row[del_item]
        return rows

    def _check_ref(self, hyp_dir, _file, ref_dir, extensions, option=""):
        self.maxDiff = None
        for ext in extensions:
            hyp = os.path.join(hyp_dir, _file) + ext
            ref = os.path.join(ref_dir, _file) + ext

            with open(ref, "r", newline="") as fh_r, open(hyp, "r", newline="") as fh_h:
                r = fh_r.read()
                h = fh_h.read()

                if ext == ".json":
                    r = self._remove_fields_from_json(r)
                    h = self._remove_fields_from_json(h)
                elif ext == ".csv":
                    self.assertEqual(r.splitlines()[0], h.splitlines()[0], f"header on {option}")
                    r = self._remove_fields_from_csv(r)
                    h = self._remove_fields_from_csv(h)
                self.assertEqual(r, h, f"failed {ext} on {option}")

    def _exit_code(self, cmd):
        return subprocess.run(cmd, shell=True, capture_output=True).returncode

    def test_table(self):
        options = [
            "",
            "--workers 1",
            "--workers 4",
            "--verbose True",
        ]

        for option in options:
            with tempfile.TemporaryDirectory() as directory:
                _file = "table"
                for ext in ("csv", "json"):
                    cmd = f"quot-degrees table --g-range 2-3 --p-range 3-7 --format {ext} --pretty_json {option} --out {directory}/{_file}.{ext}"
                    os.system(cmd)
                self._check_ref(directory, _file, "e2e-tests/ref-table/", [".csv", ".json"], option)

    def test_versch(self):
        with tempfile.TemporaryDirectory() as directory:
            _file = "versch"
            cmd = f"quot-degrees versch --g 2 --p 3 --format json --pretty_json --out {directory}/{_file}.json"
            os.system(cmd)
            self._check_ref(directory, _file, "e2e-tests/ref-versch/", [".json"])

    def test_poly(self):
        with tempfile.TemporaryDirectory() as directory:
            _file = "poly"
            cmd = f"quot-degrees poly --g 3 --format json --pretty_json --out {directory}/{_file}.json"
            os.system(cmd)
            self._check_ref(directory, _file, "e2e-tests/ref-poly/", [".json"])

    def test_exit_codes(self):
        self.assertEqual(0, self._exit_code("quot-degrees holla --n 6 --d 4 --r 2 --g 2"))
        self.assertEqual(3, self._exit_code("quot-degrees holla --n 3 --d 1 --r 1 --g 2"))
        self.assertEqual(2, self._exit_code("quot-degrees versch --g 5 --p 3"))
        self.assertEqual(2, self._exit_code("quot-degrees versch --g 2 --p 2"))
        self.assertEqual(2, self._exit_code("QUOTDEG_TOL=abc quot-degrees versch --g 2 --p 3"))
        self.assertEqual(0, self._exit_code("quot-degrees verify --g-max 4 --p-max 13"))
        self.assertEqual(1, self._exit_code("quot-degrees verify --g-max 3 --p-max 7 --tol 1e-30"))

    def test_empty_table(self):
        with tempfile.TemporaryDirectory() as directory:
            cmd = f"quot-degrees table --g-range 2-3 --p-range 8-10 --out {directory}/table.csv"
            self.assertEqual(0, self._exit_code(cmd))
            with open(f"{directory}/table.csv", newline="") as fh:
                self.assertEqual("g,p,bound_exact,quotF_degree,trig_rel_err,g2_exact,gap\n", fh.read())

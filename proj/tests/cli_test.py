#!/usr/bin/env python3
# Copyright 2026 The sido Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Exit-code and output contract of the sido command line tool.

Usage: cli_test.py <sido binary> <fixtures dir>
"""

import json
import math
import os
import subprocess
import sys
import tempfile
import unittest

SIDO = None
FIXTURES = None


def run(*args):
    proc = subprocess.run([SIDO, *args], capture_output=True, text=True, timeout=120)
    return proc.returncode, proc.stdout, proc.stderr


def fx(*parts):
    return os.path.join(FIXTURES, *parts)


class ValidateTest(unittest.TestCase):
    def test_valid_decompositions(self):
        for name in sorted(os.listdir(fx("decompositions"))):
            code, out, _ = run("validate", fx("decompositions", name))
            self.assertEqual(code, 0, name)
            self.assertEqual(json.loads(out)["violations"], [])

    def test_semantic_failures_exit_1(self):
        expected = {
            "markov_running_intersection.json": "running_intersection",
            "td_uncovered_edges.json": "uncovered_edge",
            "strong_condition2_c4.json": "condition2_intersection_not_forest",
            "strong_condition3_c5.json": "condition3_no_isomorphism",
        }
        for name, kind in expected.items():
            code, out, _ = run("validate", fx("negative", name))
            self.assertEqual(code, 1, name)
            kinds = [v["kind"] for v in json.loads(out)["violations"]]
            self.assertIn(kind, kinds)

    def test_input_errors_exit_2(self):
        self.assertEqual(run("validate", fx("negative", "malformed.json"))[0], 2)
        self.assertEqual(run("validate", fx("does_not_exist.json"))[0], 2)
        self.assertEqual(run("no-such-command")[0], 2)


class AssocTest(unittest.TestCase):
    def test_four_cycle_on_triangle(self):
        code, out, _ = run("assoc", fx("decompositions", "c4_1strong.json"), fx("graphs", "k3.json"))
        self.assertEqual(code, 0)
        doc = json.loads(out)
        self.assertEqual(doc["atoms"], 18)
        self.assertAlmostEqual(doc["report"]["entropy_bits"], 4.0849625007, delta=1e-9)
        self.assertEqual(len(doc["glue_steps"]), 1)

    def test_deterministic_and_out_file(self):
        args = ("assoc", fx("decompositions", "book_2strong.json"), fx("graphs", "k3.json"))
        first = run(*args)
        self.assertEqual(first, run(*args))
        with tempfile.TemporaryDirectory() as tmp:
            path = os.path.join(tmp, "dist.json")
            code, out, _ = run(*args, "--out", path)
            self.assertEqual(code, 0)
            self.assertEqual(json.loads(out)["distribution_file"], path)
            with open(path) as f:
                self.assertEqual(json.load(f), json.loads(first[1])["distribution"])

    def test_edgeless_target_exits_1(self):
        code, _, err = run("assoc", fx("decompositions", "book_2strong.json"), fx("graphs", "edgeless3.json"))
        self.assertEqual(code, 1)
        self.assertIn("no edges", err)

    def test_invalid_decomposition_is_refused(self):
        code, _, _ = run("assoc", fx("negative", "strong_condition3_c5.json"), fx("graphs", "k3.json"))
        self.assertEqual(code, 1)


class GlueTest(unittest.TestCase):
    def test_given_distributions(self):
        code, out, _ = run("glue", fx("markov", "two_edges.json"),
                           fx("distributions", "k3_edges_01.json"), fx("distributions", "k3_edges_12.json"))
        self.assertEqual(code, 0)
        doc = json.loads(out)
        self.assertEqual(doc["atoms"], 12)
        self.assertAlmostEqual(doc["entropy_bits"], math.log2(12), delta=1e-9)
        self.assertAlmostEqual(doc["entropy_bits"], doc["formula_bits"], delta=1e-9)

    def test_seeded_random_is_reproducible(self):
        a = run("glue", fx("markov", "two_edges.json"), "--seed", "5", "--target-size", "3")
        b = run("glue", fx("markov", "two_edges.json"), "--seed", "5", "--target-size", "3")
        self.assertEqual(a[0], 0)
        self.assertEqual(a, b)

    def test_inconsistent_marginals_exit_1(self):
        code, out, _ = run("glue", fx("markov", "two_edges.json"),
                           fx("distributions", "k3_edges_01.json"), fx("distributions", "k3_edges_01.json"))
        self.assertNotEqual(code, 0)

    def test_invalid_markov_tree_exit_1(self):
        self.assertEqual(run("glue", fx("negative", "markov_running_intersection.json"))[0], 1)


class MinSubdecTest(unittest.TestCase):
    def test_four_cycle(self):
        code, out, _ = run("min-subdec", fx("decompositions", "c4_1strong.json"), "--u", "0,2")
        self.assertEqual(code, 0)
        doc = json.loads(out)
        self.assertEqual(doc["vertices"], [0, 1, 2])
        self.assertEqual(doc["decomposition"]["level"], 0)

    def test_out_of_range_vertex_exit_1(self):
        self.assertEqual(run("min-subdec", fx("decompositions", "c4_1strong.json"), "--u", "9")[0], 1)


class SweepTest(unittest.TestCase):
    def test_four_cycle_text(self):
        code, out, _ = run("sidorenko-sweep", fx("decompositions", "c4_1strong.json"), "--max-n", "3",
                           "--format", "text")
        self.assertEqual(code, 0)
        self.assertIn("2/81", out)
        self.assertIn("all gaps nonnegative", out)

    def test_json(self):
        code, out, _ = run("sidorenko-sweep", fx("decompositions", "path3_0strong.json"), "--max-n", "4")
        self.assertEqual(code, 0)
        doc = json.loads(out)
        self.assertTrue(doc["all_nonnegative"])
        self.assertEqual(len(doc["rows"]), 1 + 2 + 6)

    def test_refuses_large_targets(self):
        self.assertEqual(run("sidorenko-sweep", fx("decompositions", "c4_1strong.json"), "--max-n", "20")[0], 2)
        self.assertEqual(run("sidorenko-sweep", fx("decompositions", "c4_1strong.json"), "--max-n", "1")[0], 2)


class EntropyReportTest(unittest.TestCase):
    def test_four_cycle_on_triangle(self):
        code, out, _ = run("entropy-report", fx("decompositions", "c4_1strong.json"), fx("graphs", "k3.json"))
        self.assertEqual(code, 0)
        doc = json.loads(out)
        self.assertEqual(doc["hom_count"], 18)
        self.assertTrue(doc["degree_ok"])

    def test_degree_condition_failure_exit_1(self):
        code, _, _ = run("entropy-report", fx("decompositions", "c4_1strong.json"), fx("graphs", "star5.json"))
        self.assertEqual(code, 1)


if __name__ == "__main__":
    SIDO, FIXTURES = sys.argv[1], sys.argv[2]
    unittest.main(argv=sys.argv[:1], verbosity=2)

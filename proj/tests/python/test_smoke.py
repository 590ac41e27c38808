"""Smoke tests for the revpref python module (all payloads are JSON strings)."""

import json
import unittest

import revpref


class FixtureTests(unittest.TestCase):
    def test_fixture_names(self):
        self.assertEqual(
            revpref.fixture_names(),
            ["example1", "example2", "luce-raiffa", "set-reference"],
        )

    def test_fixture_payload(self):
        data = json.loads(revpref.fixture("example1"))
        self.assertEqual(data["alternatives"], ["a", "b", "k", "d"])
        self.assertEqual(len(data["observations"]), 7)


class AnalyzeTests(unittest.TestCase):
    def test_example1(self):
        report = json.loads(revpref.analyze(revpref.fixture("example1")))
        axioms = report["axioms"]
        self.assertEqual(axioms["tau"]["status"], "satisfied")
        self.assertEqual(axioms["rho"]["status"], "violated")
        self.assertEqual(
            axioms["rho"]["witnesses"][0],
            {"x": "d", "y": "a", "B": ["b", "k"], "direction": "backward"},
        )
        self.assertTrue(report["preference"]["strict_is_preference"])
        self.assertEqual(report["rationalization"]["status"], "failure")
        self.assertEqual(
            report["rationalization"]["failures"][0],
            {"menu": ["a", "b", "k", "d"], "expected": ["a"], "actual": ["a", "d"]},
        )

    def test_example2(self):
        report = json.loads(revpref.analyze(revpref.fixture("example2")))
        axioms = report["axioms"]
        self.assertEqual(axioms["tau"]["status"], "violated")
        self.assertEqual(
            axioms["tau"]["witnesses"][0], {"x": "a", "z": "b", "y": "k"}
        )
        self.assertEqual(axioms["rho"]["status"], "satisfied")
        self.assertEqual(report["rationalization"]["status"], "success")

    def test_reference_points(self):
        report = json.loads(revpref.analyze(revpref.fixture("luce-raiffa")))
        self.assertEqual(report["reference_points"], [{"z": "z", "x": "x", "y": "y"}])

    def test_completion_policy(self):
        report = json.loads(
            revpref.analyze(revpref.fixture("example1"), complete="full-menu")
        )
        self.assertEqual(report["completion"], "full-menu")
        self.assertTrue(report["dataset"]["total"])
        self.assertEqual(report["axioms"]["v_axiom"]["status"], "violated")

    def test_check_axiom(self):
        verdict = json.loads(
            revpref.check_axiom(revpref.fixture("luce-raiffa"), "rho")
        )
        self.assertEqual(verdict["status"], "violated")


class VerifyTests(unittest.TestCase):
    def test_prop_tau_n2(self):
        report = json.loads(revpref.verify("prop-tau", 2))
        self.assertTrue(report["verified"])
        self.assertEqual(report["instances_checked"], 3)

    def test_counts(self):
        self.assertEqual(revpref.correspondence_count(3), 189)
        with self.assertRaises(revpref.ChoiceError):
            revpref.correspondence_count(5)

    def test_n5_refused(self):
        with self.assertRaises(revpref.ChoiceError):
            revpref.verify("theorem1", 5)


class GeneratorTests(unittest.TestCase):
    def test_sample_determinism(self):
        self.assertEqual(revpref.sample(3, 5, 42), revpref.sample(3, 5, 42))

    def test_enumerate_range(self):
        batch = revpref.enumerate_range(3, 0, 5)
        self.assertEqual(len(batch), 5)
        self.assertEqual(len(set(batch)), 5)


class ErrorTests(unittest.TestCase):
    def test_bad_dataset(self):
        with self.assertRaises(revpref.ChoiceError):
            revpref.analyze("not json")
        with self.assertRaises(revpref.ChoiceError):
            revpref.analyze(
                '{"alternatives": ["a", "b"], "observations": '
                '[{"menu": ["a", "b"], "choice": []}]}'
            )


if __name__ == "__main__":
    unittest.main()

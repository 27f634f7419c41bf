#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Tests for the homnorm command line: exit codes, output formats and result files
"""

import json
import os
import sys
import unittest
from pathlib import Path
from unittest import mock

from click.testing import CliRunner

sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), "..", "src")))

from homnorm import __version__
from homnorm.bar import bar
from homnorm.crossed import decide_normal
from homnorm.groups import regular_right_action
from homnorm.homnorm import _theme_name, cli, console, err_console
from homnorm.models import CrossedModuleModel, GammaModel, HomotopyActionModel, RigidActionModel
from homnorm.output import theme_for
from homnorm.serialization import dumps, load, write
from homnorm.simplicial import FinSetMap

from fixtures import Z2, a3_into_s3, swap_action, transposition_into_s3, z4_onto_z2


class CliTestCase(unittest.TestCase):
    """Runs every command inside an isolated working directory"""

    def setUp(self):
        self.runner = CliRunner()
        self._fs = self.runner.isolated_filesystem()
        self.cwd = Path(self._fs.__enter__())
        os.environ["HOMNORM_CONFIG"] = str(self.cwd / "homnorm.yaml")
        (self.cwd / "homnorm.yaml").write_text("", encoding="utf-8")

    def tearDown(self):
        os.environ.pop("HOMNORM_CONFIG", None)
        self._fs.__exit__(None, None, None)

    def invoke(self, *args):
        return self.runner.invoke(cli, list(args))

    def invoke_json(self, *args):
        result = self.invoke(*args, "--format", "json")
        return result, json.loads(result.stdout)


class TestGeneral(CliTestCase):
    """Global options"""

    def test_version(self):
        result = self.invoke("--version")
        self.assertEqual(result.exit_code, 0)
        self.assertIn(__version__, result.output)

    def test_help(self):
        result = self.invoke("--help")
        self.assertEqual(result.exit_code, 0)
        self.assertIn("normal-check", result.output)

    def test_command_help(self):
        result = self.invoke("gamma", "--help")
        self.assertEqual(result.exit_code, 0)
        self.assertIn("--levels", result.output)

    def test_groups(self):
        result, payload = self.invoke_json("groups", "--max-order", "6")
        self.assertEqual(result.exit_code, 0)
        self.assertIn({"name": "S3", "order": 6, "abelian": False}, payload)

    def test_invalid_config(self):
        (self.cwd / "bad.yaml").write_text("levels: 0\n", encoding="utf-8")
        result = self.invoke("--config", "bad.yaml", "nerve", "Z2")
        self.assertEqual(result.exit_code, 2)

    def test_unknown_group(self):
        result = self.invoke("nerve", "Q9")
        self.assertEqual(result.exit_code, 2)
        self.assertIn("Q8", result.output)

    def test_missing_file(self):
        result = self.invoke("segal", "missing.json")
        self.assertEqual(result.exit_code, 2)


class TestTheme(CliTestCase):
    """The console theme comes from --theme, else from the settings"""

    def pushed(self, *args):
        with mock.patch.object(console, "push_theme", wraps=console.push_theme) as out, \
                mock.patch.object(err_console, "push_theme", wraps=err_console.push_theme) as err:
            result = self.invoke(*args, "groups", "--max-order", "2")
        self.assertEqual(result.exit_code, 0, result.output)
        self.assertEqual(out.call_count, 1)
        self.assertEqual(err.call_count, 1)
        return out.call_args.args[0].styles, err.call_args.args[0].styles

    def test_configured_theme(self):
        (self.cwd / "homnorm.yaml").write_text("theme: light\n", encoding="utf-8")
        light = theme_for("light").styles
        self.assertEqual(self.pushed(), (light, light))

    def test_flag_wins(self):
        (self.cwd / "homnorm.yaml").write_text("theme: light\n", encoding="utf-8")
        dark = theme_for("dark").styles
        self.assertEqual(self.pushed("--theme", "dark"), (dark, dark))

    def test_broken_config_falls_back(self):
        (self.cwd / "bad.yaml").write_text("theme: sepia\n", encoding="utf-8")
        self.assertEqual(_theme_name(None, str(self.cwd / "bad.yaml")), "dark")
        self.assertEqual(self.invoke("--config", "bad.yaml", "nerve", "Z2").exit_code, 2)


class TestNormalCheck(CliTestCase):
    """normal-check exit codes and certificates"""

    def test_normal(self):
        write("hom.json", a3_into_s3())
        result = self.invoke("normal-check", "hom.json", "--out", "cert.json")
        self.assertEqual(result.exit_code, 0, result.output)
        self.assertIn("homotopy normal", result.output)
        cm = load("cert.json", CrossedModuleModel)
        self.assertEqual(cm.boundary, a3_into_s3())

    def test_normal_json(self):
        write("hom.json", z4_onto_z2())
        result, payload = self.invoke_json("normal-check", "hom.json")
        self.assertEqual(result.exit_code, 0)
        self.assertEqual(payload["verdict"], "normal")
        self.assertFalse(payload["injective"])
        self.assertIn("certificate", payload)

    def test_not_normal(self):
        write("hom.json", transposition_into_s3())
        result = self.invoke("normal-check", "hom.json")
        self.assertEqual(result.exit_code, 1)
        self.assertIn("not homotopy-normal", result.output)
        self.assertIn("candidates_examined", result.output)

    def test_budget(self):
        write("hom.json", a3_into_s3())
        result = self.invoke("normal-check", "hom.json", "--budget", "0.5")
        self.assertEqual(result.exit_code, 2)

    def test_malformed(self):
        Path("hom.json").write_text('{"source": "Z4", "target": "Z2"}', encoding="utf-8")
        self.assertEqual(self.invoke("normal-check", "hom.json").exit_code, 2)
        Path("hom.json").write_text('{"source": "Z4", "target": "Z2", "map": [0, 1, 1, 0]}', encoding="utf-8")
        self.assertEqual(self.invoke("normal-check", "hom.json").exit_code, 2)


class TestConstructions(CliTestCase):
    """bar, nerve, cech and segal"""

    def test_nerve(self):
        result, payload = self.invoke_json("nerve", "Z2", "--levels", "3")
        self.assertEqual(result.exit_code, 0)
        self.assertEqual(payload["level_sizes"], [1, 2, 4, 8])

    def test_cech(self):
        write("map.json", FinSetMap(3, 2, (0, 0, 1)))
        result, payload = self.invoke_json("cech", "map.json", "--levels", "3")
        self.assertEqual(result.exit_code, 0)
        self.assertEqual(payload["level_sizes"], [3, 5, 9, 17])

    def test_bar_of_gset_and_hom(self):
        write("swap.json", swap_action())
        write("hom.json", a3_into_s3())
        result, payload = self.invoke_json("bar", "swap.json", "--levels", "2")
        self.assertEqual(result.exit_code, 0)
        self.assertEqual(payload["level_sizes"], [2, 4, 8])
        result, payload = self.invoke_json("bar", "--hom", "hom.json", "--levels", "2")
        self.assertEqual(result.exit_code, 0)
        self.assertEqual(payload["level_sizes"], [6, 18, 54])

    def test_bar_needs_one_input(self):
        self.assertEqual(self.invoke("bar").exit_code, 2)

    def test_segal(self):
        result = self.invoke("nerve", "S3", "--levels", "3", "--out", "nerve.json")
        self.assertEqual(result.exit_code, 0)
        result = self.invoke("segal", "nerve.json")
        self.assertEqual(result.exit_code, 0, result.output)
        write("free.json", bar(regular_right_action(Z2), Z2, 3))
        result = self.invoke("segal", "free.json")
        self.assertEqual(result.exit_code, 1)

    def test_segal_json(self):
        self.invoke("nerve", "S3", "--levels", "3", "--out", "nerve.json")
        result, payload = self.invoke_json("segal", "nerve.json")
        self.assertTrue(payload["ok"])
        self.assertEqual(payload["recovered_group"], {"order": 6, "identified_as": "S3"})


class TestGammaAndHomotopy(CliTestCase):
    """gamma and homotopy"""

    def setUp(self):
        super().setUp()
        write("cert.json", decide_normal(a3_into_s3()))

    def test_gamma(self):
        result = self.invoke("gamma", "cert.json", "--levels", "3", "--out", "gamma.json")
        self.assertEqual(result.exit_code, 0, result.output)
        model = GammaModel.model_validate_json(Path("gamma.json").read_text(encoding="utf-8"))
        self.assertTrue(model.report["ok"])
        self.assertEqual(model.simplicial_set.level_sizes, [6, 18, 54, 162])

    def test_homotopy(self):
        result, payload = self.invoke_json("homotopy", "cert.json", "--levels", "3")
        self.assertEqual(result.exit_code, 0)
        self.assertEqual([row["order"] for row in payload["pi"]], [2, 1])
        self.assertEqual(payload["pi"][0]["identified_as"], "Z2")
        self.assertEqual(payload["two_type"]["pi2"]["order"], 1)

    def test_homotopy_from_gamma_file(self):
        self.invoke("gamma", "cert.json", "--levels", "2", "--out", "gamma.json")
        result, payload = self.invoke_json("homotopy", "gamma.json", "--levels", "2")
        self.assertEqual(result.exit_code, 0)
        self.assertEqual([row["order"] for row in payload["pi"]], [2])

    def test_invalid_crossed_module(self):
        data = json.loads(dumps(decide_normal(z4_onto_z2())))
        data["action"] = [[0, 1, 2, 3], [0, 3, 2, 1]]
        Path("bad.json").write_text(json.dumps(data), encoding="utf-8")
        self.assertEqual(self.invoke("gamma", "bad.json", "--levels", "2").exit_code, 2)


class TestActions(CliTestCase):
    """from-bar, rigidify and roundtrip"""

    def test_from_bar_then_rigidify(self):
        write("swap.json", swap_action())
        result = self.invoke("from-bar", "swap.json", "--levels", "3", "--out", "action.json")
        self.assertEqual(result.exit_code, 0, result.output)
        load("action.json", HomotopyActionModel)
        result = self.invoke("rigidify", "action.json", "--out", "rigid.json")
        self.assertEqual(result.exit_code, 0, result.output)
        rigid = load("rigid.json", RigidActionModel)
        self.assertEqual(rigid.action.act, ((0, 1), (1, 0)))

    def test_roundtrip(self):
        write("swap.json", swap_action())
        result, payload = self.invoke_json("roundtrip", "swap.json", "--levels", "3")
        self.assertEqual(result.exit_code, 0)
        self.assertTrue(payload["ok"])

    def test_from_bar_low_truncation(self):
        write("swap.json", swap_action())
        self.assertEqual(self.invoke("from-bar", "swap.json", "--levels", "2").exit_code, 2)


class TestCatalog(CliTestCase):
    """The catalog run"""

    def test_catalog_json(self):
        result, payload = self.invoke_json("catalog", "--max-order", "2", "--levels", "3", "--out", "run.json")
        self.assertEqual(result.exit_code, 0)
        self.assertTrue(payload["ok"])
        self.assertEqual(payload["verdicts"]["homs"], 5)
        self.assertTrue(Path("run.json").is_file())

    def test_catalog_text(self):
        result = self.invoke("catalog", "--max-order", "2", "--levels", "3", "--abelian-only")
        self.assertEqual(result.exit_code, 0, result.output)
        self.assertIn("5 homomorphisms", result.output)


if __name__ == "__main__":
    unittest.main()

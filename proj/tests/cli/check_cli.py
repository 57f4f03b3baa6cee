#!/usr/bin/env python3
"""Runs the rfi-coexist executable as a subprocess: schema checks on every
JSON output, byte-level determinism of simulate, and the exit-code contract."""

import json
import pathlib
import subprocess
import sys
import tempfile

import jsonschema

EXE = sys.argv[1]
SRC = pathlib.Path(sys.argv[2])
SCHEMAS = SRC / "schemas"
DATA = SRC / "data"

failures = []


def run(*args, env=None):
    return subprocess.run([EXE, *args], capture_output=True, text=True, env=env, check=False)


def check(name, ok, detail=""):
    print(("PASS  " if ok else "FAIL  ") + name + (f"  {detail}" if detail else ""))
    if not ok:
        failures.append(name)


def schema(name):
    return json.loads((SCHEMAS / f"{name}.schema.json").read_text())


def validate(name, proc, schema_name):
    if proc.returncode != 0:
        check(name, False, f"exit {proc.returncode}: {proc.stderr.strip()}")
        return None
    try:
        doc = json.loads(proc.stdout)
        jsonschema.validate(doc, schema(schema_name))
    except (json.JSONDecodeError, jsonschema.ValidationError) as exc:
        check(name, False, str(exc).splitlines()[0])
        return None
    check(name, True)
    return doc


validate("geometry.schema", run("geometry"), "geometry")
validate("analytic.schema", run("analytic"), "analytic")
validate("analytic.schema.order8", run("analytic", "--lobe", "side", "--max-order", "8"),
         "analytic")
sim_args = ("simulate", "--trials", "4000", "--seed", "42")
first = run(*sim_args, "--workers", "1")
validate("simulate.schema", first, "simulate")
validate("simulate.schema.few_trials", run("simulate", "--trials", "3", "--lobe", "main"),
         "simulate")
check("simulate.repeatable", run(*sim_args, "--workers", "1").stdout == first.stdout)
check("simulate.workers_invariant", run(*sim_args, "--workers", "4").stdout == first.stdout)
check("simulate.seed_sensitive",
      run("simulate", "--trials", "4000", "--seed", "43").stdout != first.stdout)

with tempfile.TemporaryDirectory() as tmp:
    csv = pathlib.Path(tmp) / "sweep.csv"
    summary = validate("sweep.schema", run("sweep", "--out", str(csv), "--svg"), "sweep_summary")
    if summary is not None:
        header = csv.read_text().splitlines()[0]
        check("sweep.csv_header", header == "alpha,lambda_bs,lobe,mean_K,std_K,skewness,"
              "excess_kurtosis,exceeds_tau,mc_mean_K,mc_se_mean_K,mc_std_K", header)
        check("sweep.svg_written", (pathlib.Path(tmp) / "sweep.svg").is_file())

    bad = pathlib.Path(tmp) / "bad.csv"
    proc = run("sweep", "--spec", str(DATA / "empty_grid.json"), "--out", str(bad))
    check("exit.sweep_empty_grid", proc.returncode == 2 and "empty_grid" in proc.stderr,
          f"exit {proc.returncode}")
    check("sweep.no_partial_output", not bad.exists() and not pathlib.Path(f"{bad}.partial").exists())

expect = [
    ("exit.help", ["--help"], 0),
    ("exit.no_subcommand", [], 2),
    ("exit.unknown_flag", ["analytic", "--bogus"], 2),
    ("exit.missing_scenario", ["analytic", "--scenario", "/nonexistent.json"], 2),
    ("exit.analytic_alpha_two", ["analytic", "--scenario", str(DATA / "alpha_two.json")], 3),
    ("exit.geometry_alpha_two", ["geometry", "--scenario", str(DATA / "alpha_two.json")], 3),
    ("exit.simulate_one_trial", ["simulate", "--trials", "1"], 3),
    ("exit.validate_alpha_two", ["validate", "--scenario", str(DATA / "alpha_two.json")], 3),
    ("exit.validate_corrupt_gain", ["validate", "--scenario",
                                    str(DATA / "corrupt_side_lobe.json")], 2),
    ("exit.sweep_without_out", ["sweep"], 2),
]
for name, args, code in expect:
    proc = run(*args)
    check(name, proc.returncode == code, f"expected {code}, got {proc.returncode}")

proc = run("analytic", "--scenario", "/nonexistent.json")
check("diagnostic.on_stderr", proc.stdout == "" and "io_error" in proc.stderr)

env = {"RFI_COEXIST_SCENARIO": str(DATA / "alpha_two.json"), "PATH": "/usr/bin:/bin"}
check("env.scenario_fallback", run("analytic", env=env).returncode == 3)

print(f"{len(failures)} failed")
sys.exit(1 if failures else 0)

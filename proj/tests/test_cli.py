#!/usr/bin/env python3
"""End-to-end contract test for the wpb command-line tool.

Usage: test_cli.py /path/to/wpb

Covers exit codes, JSON schema and field order, CSV shapes, determinism
across reruns and thread counts, and flag validation.  Prints one line per
group and exits nonzero on the first failure.
"""

import json
import os
import re
import subprocess
import sys
import tempfile

FAILURES = []


def run(args, env_extra=None, timeout=600):
    env = dict(os.environ)
    if env_extra:
        env.update(env_extra)
    proc = subprocess.run(
        [WPB] + args,
        stdout=subprocess.PIPE,
        stderr=subprocess.PIPE,
        env=env,
        timeout=timeout,
        text=True,
    )
    return proc


def check(name, cond, detail=""):
    if cond:
        print(f"ok: {name}")
    else:
        print(f"FAIL: {name} {detail}")
        FAILURES.append(name)


def strip_wall_time(text):
    return re.sub(r'"wall_time": [0-9.eE+-]+', '"wall_time": X', text)


def test_help_and_version():
    p = run(["--help"])
    check("help exits 0", p.returncode == 0, f"rc={p.returncode}")
    check("help lists subcommands", "certify" in p.stdout and "plotdata" in p.stdout)
    p = run(["--version"])
    check("version exits 0", p.returncode == 0, f"rc={p.returncode}")
    check("version names the tool", p.stdout.startswith("wpbounds"), p.stdout)
    p = run(["frobnicate"])
    check("unknown subcommand exits 2", p.returncode == 2, f"rc={p.returncode}")
    p = run([])
    check("missing subcommand exits 2", p.returncode == 2, f"rc={p.returncode}")


def test_certify():
    p = run(["certify", "--check", "nope"])
    check("unknown check id exits 2", p.returncode == 2, f"rc={p.returncode}")
    check("unknown check id names the problem", "unknown check id" in p.stderr,
          p.stderr)

    p = run(["certify", "--check", "K_eq_C_at_eps2", "--json"])
    check("single certified check exits 0", p.returncode == 0,
          f"rc={p.returncode} stderr={p.stderr}")
    doc = json.loads(p.stdout)
    check("json has the expected top-level keys",
          list(doc.keys()) == ["tool_version", "seed", "checks", "summary",
                               "wall_time"], str(list(doc.keys())))
    rec = doc["checks"][0]
    check("record key order is stable",
          list(rec.keys())[:6] == ["check_id", "target", "interval", "claim",
                                   "enclosure", "status"], str(list(rec.keys())))
    check("record is certified", rec["status"] == "certified", rec["status"])
    check("summary tallies one certificate",
          doc["summary"] == {"certified": 1, "violated": 0, "inconclusive": 0},
          str(doc["summary"]))

    p = run(["certify", "--check", "m_sup", "--depth", "6"])
    check("starved depth exits 3", p.returncode == 3, f"rc={p.returncode}")


def test_constants():
    p = run(["constants"])
    check("constants exits 1 at default tolerance", p.returncode == 1,
          f"rc={p.returncode}")
    p = run(["constants", "--json"])
    doc = json.loads(p.stdout)
    bad = [c["check_id"] for c in doc["checks"] if c["status"] == "violated"]
    check("exactly one printed constant deviates", bad == ["sqrt_2eps2_C_eps2"],
          str(bad))
    p = run(["constants", "--tol", "2e-4"])
    check("constants exits 0 at 2e-4", p.returncode == 0, f"rc={p.returncode}")


def test_verify_random():
    p = run(["verify-random", "--trials", "20", "--seed", "5", "--json"])
    check("verify-random exits 0", p.returncode == 0,
          f"rc={p.returncode} stderr={p.stderr}")
    q = run(["verify-random", "--trials", "20", "--seed", "5", "--json"])
    check("same seed reproduces the report byte-for-byte",
          strip_wall_time(p.stdout) == strip_wall_time(q.stdout))

    r = run(["verify-random", "--trials", "20", "--seed", "6", "--json"])
    check("different seed changes the report",
          strip_wall_time(p.stdout) != strip_wall_time(r.stdout))

    one = run(["verify-random", "--trials", "20", "--seed", "5", "--json"],
              env_extra={"WPB_THREADS": "1"})
    four = run(["verify-random", "--trials", "20", "--seed", "5", "--json"],
               env_extra={"WPB_THREADS": "4"})
    check("report is independent of the thread count",
          strip_wall_time(one.stdout) == strip_wall_time(four.stdout))

    p = run(["verify-random", "--trials", "0"])
    check("zero trials exits 2", p.returncode == 2, f"rc={p.returncode}")
    p = run(["verify-random", "--Lmax", "5"])
    check("core length beyond 2*eps2 exits 2", p.returncode == 2,
          f"rc={p.returncode}")


def test_plotdata():
    p = run(["plotdata", "--functions", "H,C", "--samples", "10",
             "--rmin", "0.01"])
    check("plotdata exits 0", p.returncode == 0, f"rc={p.returncode}")
    lines = p.stdout.strip().splitlines()
    check("plotdata header matches the function list", lines[0] == "r,H,C",
          lines[0])
    check("plotdata emits one row per sample", len(lines) == 11, str(len(lines)))
    last = lines[-1].split(",")
    check("grid ends at rmax", abs(float(last[0]) - 0.5493061443340548457) < 1e-12,
          last[0])

    p = run(["plotdata", "--functions", "bogus"])
    check("unknown plot function exits 2", p.returncode == 2, f"rc={p.returncode}")

    p = run(["plotdata", "--functions", "m", "--rmax", "0.6"])
    check("m beyond its domain exits 2", p.returncode == 2, f"rc={p.returncode}")

    with tempfile.TemporaryDirectory() as tmp:
        path = os.path.join(tmp, "curves.csv")
        p = run(["plotdata", "--functions", "H", "--samples", "5", "--rmin",
                 "0.01", "--out", path])
        check("plotdata --out exits 0", p.returncode == 0, f"rc={p.returncode}")
        check("plotdata --out leaves stdout empty", p.stdout == "", repr(p.stdout))
        with open(path, encoding="utf-8") as fh:
            content = fh.read().strip().splitlines()
        check("written CSV has header and rows",
              content[0] == "r,H" and len(content) == 6, str(content[:2]))


def test_sharpness():
    p = run(["sharpness", "--L", "0.3", "--points", "10", "--modes", "16"])
    check("sharpness exits 0", p.returncode == 0, f"rc={p.returncode}")
    lines = p.stdout.strip().splitlines()
    check("sharpness header is the documented sweep schema",
          lines[0] == "r,extremal_ratio,G,sqrt_inv_r,wolpert_target,"
                      "ratio_extremal_over_G", lines[0])
    check("sharpness emits one row per point", len(lines) == 11, str(len(lines)))
    ratios = [float(row.split(",")[5]) for row in lines[1:]]
    check("extremal ratio never exceeds its bound",
          all(x <= 1.0 + 1e-9 for x in ratios), str(max(ratios)))

    p = run(["sharpness", "--L", "2.0"])
    check("core length beyond the sweep domain exits 2", p.returncode == 2,
          f"rc={p.returncode}")
    p = run(["sharpness", "--constraint", "sideways"])
    check("unknown constraint exits 2", p.returncode == 2, f"rc={p.returncode}")


def test_curvature():
    p = run(["curvature", "--genus", "2", "--systole", "0.1", "--json"])
    check("curvature exits 0", p.returncode == 0, f"rc={p.returncode}")
    doc = json.loads(p.stdout)
    by_id = {c["check_id"]: c for c in doc["checks"]}
    check("thin regime is reported", by_id["regime"]["target"] == "thin",
          by_id["regime"]["target"])
    check("scalar lower bound is -110",
          abs(by_id["sca_lo"]["enclosure"][0] + 110.0) < 1e-9,
          str(by_id["sca_lo"]["enclosure"]))
    check("orthogonal sectional bound is -4",
          by_id["sec_perp_lo"]["enclosure"][0] == -4.0,
          str(by_id["sec_perp_lo"]["enclosure"]))

    p = run(["curvature", "--genus", "0", "--punctures", "3"])
    check("inadmissible surface type exits 2", p.returncode == 2,
          f"rc={p.returncode}")


def test_delta():
    p = run(["delta", "--eps", "1e-3"])
    check("delta exits 0", p.returncode == 0, f"rc={p.returncode}")
    check("delta reports the admissible length", "0.10623" in p.stdout,
          p.stdout[:200])
    p = run(["delta", "--eps", "-1"])
    check("negative eps exits 2", p.returncode == 2, f"rc={p.returncode}")
    p = run(["delta", "--eps", "100"])
    check("eps beyond the envelope range exits 2", p.returncode == 2,
          f"rc={p.returncode}")


def main():
    test_help_and_version()
    test_certify()
    test_constants()
    test_verify_random()
    test_plotdata()
    test_sharpness()
    test_curvature()
    test_delta()
    if FAILURES:
        print(f"{len(FAILURES)} group(s) failed: {', '.join(FAILURES)}")
        return 1
    print("all CLI contract groups passed")
    return 0


if __name__ == "__main__":
    if len(sys.argv) != 2:
        print("usage: test_cli.py /path/to/wpb", file=sys.stderr)
        sys.exit(2)
    WPB = sys.argv[1]
    sys.exit(main())

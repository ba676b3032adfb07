"""End-to-end tests of the command-line tool: exit codes, report content,
fault injection, exports, and byte-level determinism."""

import json
import subprocess
import sys
import tempfile
from pathlib import Path


def run(binary, *args, env=None):
    return subprocess.run([binary, *args], capture_output=True, text=True,
                          env=env, timeout=300)


def check(condition, message):
    if not condition:
        raise AssertionError(message)


def main():
    binary = sys.argv[1]
    tmp = Path(tempfile.mkdtemp(prefix="octaharm_cli_"))

    # --- verify: full run passes and names the closure check -----------------
    res = run(binary, "--outdir", str(tmp), "verify", "--report", "report.txt")
    check(res.returncode == 0, f"verify exit code: {res.returncode}\n{res.stdout}\n{res.stderr}")
    check("G order 1152: PASS" in res.stdout, "verify report names the closure order")
    report = (tmp / "report.txt").read_text()
    check(report == res.stdout, "report file matches stdout")
    check("coverage complete: yes" in report, "full run covers every table")
    check("overall: PASS" in report, "overall verdict")

    # --- verify restricted to N5 runs only N5 checks -------------------------
    res = run(binary, "verify", "--manifold", "N5")
    check(res.returncode == 0, "restricted verify passes")
    check("(N5)" in res.stdout, "N5 checks present")
    check("(N4)" not in res.stdout and "(N6)" not in res.stdout,
          "other manifolds filtered out")
    check("coverage complete: no" in res.stdout, "restricted run is partial")

    # --- fault injection: corrupted stored alpha1 fails naming table 6.1 -----
    res = run(binary, "verify", "--inject-fault", "table6.1")
    check(res.returncode != 0, "fault injection must fail")
    check("table 6.1 generators (N6): FAIL" in res.stdout,
          "failure names table 6.1")

    # --- spectrum -------------------------------------------------------------
    res = run(binary, "--outdir", str(tmp), "spectrum", "--jmax", "6")
    check(res.returncode == 0, "spectrum exit code")
    spectrum = (tmp / "spectrum.csv").read_text()
    lines = spectrum.strip().splitlines()
    check(lines[0] == "manifold,two_j,multiplicity", "spectrum header")
    check("N4,0,1" in lines, "m(0) = 1")
    check("N4,1,0" in lines, "half-integer row zero")
    check("N5,1,0" in lines and "N6,1,0" in lines, "all manifolds half-integer zero")
    check("N4,6,3" in lines, "N4 m(j=3) = 3")
    check(len([l for l in lines if l.startswith("N4,")]) == 13, "rows 0..12")

    # --- spectrum jmax over the cap is a usage error --------------------------
    res = run(binary, "spectrum", "--jmax", "17")
    check(res.returncode == 2, "jmax cap yields usage exit code")

    # --- basis ---------------------------------------------------------------
    res = run(binary, "--outdir", str(tmp), "basis", "--manifold", "N4", "--j", "2")
    check(res.returncode == 0, f"basis exit code: {res.stderr}")
    numeric = json.loads((tmp / "basis_N4_twoJ4.json").read_text())
    check(numeric["count"] == 2, "N4 j=2 basis has 2 vectors")
    check(numeric["frame"] == "original", "numeric frame")
    check(numeric["closed_form_span_matches"] is True, "span verdict true")
    closed = json.loads((tmp / "basis_N4_twoJ4_closed_form.json").read_text())
    check(closed["frame"] == "c-rotated", "closed-form frame")
    check(len(closed["labels"]) == 2, "closed-form labels")

    res = run(binary, "--outdir", str(tmp), "basis", "--manifold", "N6", "--j", "0")
    check(res.returncode == 0, "N6 j=0 basis")
    doc = json.loads((tmp / "basis_N6_twoJ0.json").read_text())
    check(doc["count"] == 1, "single constant vector")

    res = run(binary, "--outdir", str(tmp), "basis", "--manifold", "N5", "--j", "1.5")
    check(res.returncode == 0, "half-integer basis export")
    doc = json.loads((tmp / "basis_N5_twoJ3.json").read_text())
    check(doc["count"] == 0, "half-integer basis empty")
    check("note" in doc and "half-integer" in doc["note"], "explanatory note")

    res = run(binary, "--outdir", str(tmp), "basis", "--manifold", "N4",
              "--j", "3", "--frame", "rotated")
    check(res.returncode == 0, "rotated-frame export")
    rotated = json.loads((tmp / "basis_N4_twoJ6_rotated.json").read_text())
    check(rotated["frame"] == "c-rotated", "rotated frame tag")
    check(len(rotated["labels"]) == 3, "rotated labels for j=3")
    res = run(binary, "--outdir", str(tmp), "basis", "--manifold", "N6",
              "--j", "2", "--frame", "rotated")
    check(res.returncode == 2, "rotated frame restricted to N4")

    # --- centers ---------------------------------------------------------------
    res = run(binary, "--outdir", str(tmp), "centers")
    check(res.returncode == 0, "centers exit code")
    centers = (tmp / "centers.csv").read_text()
    check(centers.splitlines()[0] == "manifold,index,x0,x1,x2,x3", "centers header")
    check(",1,0,0,0" in centers, "identity center present")
    allowed = (0.0, 0.5, 1.0, 0.5 ** 0.5)
    for line in centers.splitlines()[1:]:
        if line.startswith("match,"):
            continue
        for field in line.split(",")[2:]:
            value = abs(float(field))
            check(any(abs(value - a) < 1e-9 for a in allowed),
                  f"center coordinate {field} outside the allowed value set")
    match_lines = [l for l in centers.splitlines() if l.startswith("match,N4,N6,")]
    check(len(match_lines) == 24, "24 matching rows")
    targets = sorted(int(l.split(",")[-1]) for l in match_lines)
    check(targets == list(range(24)), "N4->N6 match is a bijection")

    # --- decks -----------------------------------------------------------------
    res = run(binary, "--outdir", str(tmp), "decks", "--manifold", "N6")
    check(res.returncode == 0, "decks exit code")
    deck = json.loads((tmp / "deck_N6.json").read_text())
    check(deck["order"] == 24 and len(deck["elements"]) == 24, "deck json")

    # --- determinism: identical bytes across reruns ----------------------------
    tmp2 = Path(tempfile.mkdtemp(prefix="octaharm_cli2_"))
    run(binary, "--outdir", str(tmp2), "spectrum", "--jmax", "6")
    check((tmp2 / "spectrum.csv").read_text() == spectrum, "spectrum deterministic")
    run(binary, "--outdir", str(tmp2), "centers")
    check((tmp2 / "centers.csv").read_text() == centers, "centers deterministic")
    run(binary, "--outdir", str(tmp2), "basis", "--manifold", "N4", "--j", "2")
    check((tmp2 / "basis_N4_twoJ4.json").read_text() ==
          (tmp / "basis_N4_twoJ4.json").read_text(), "basis deterministic")
    run(binary, "--outdir", str(tmp2), "decks", "--manifold", "N6")
    check((tmp2 / "deck_N6.json").read_text() ==
          (tmp / "deck_N6.json").read_text(), "deck json deterministic")

    # --- OCTAHARM_OUTDIR environment override ----------------------------------
    import os
    tmp3 = Path(tempfile.mkdtemp(prefix="octaharm_env_"))
    env = dict(os.environ, OCTAHARM_OUTDIR=str(tmp3))
    res = run(binary, "spectrum", "--jmax", "1", env=env)
    check(res.returncode == 0 and (tmp3 / "spectrum.csv").exists(),
          "OCTAHARM_OUTDIR is honored")

    # --- tolerance override: an impossible tolerance must fail ------------------
    res = run(binary, "verify", "--manifold", "N6", "--tol-table", "1e-20")
    check(res.returncode == 1, "tightened table tolerance fails the run")
    res = run(binary, "verify", "--manifold", "N6", "--tol-table", "1e-12")
    check(res.returncode == 0, "default-strength tolerance passes")

    # --- usage errors -----------------------------------------------------------
    res = run(binary, "basis", "--manifold", "N4")
    check(res.returncode == 2, "missing --j is a usage error")
    res = run(binary, "nonsense")
    check(res.returncode == 2, "unknown subcommand")
    res = run(binary, "verify", "--manifold", "N9")
    check(res.returncode == 2, "unknown manifold")
    blocker = tmp / "blocker"
    blocker.write_text("not a directory")
    res = run(binary, "--outdir", str(blocker / "sub"), "spectrum")
    check(res.returncode == 2, "unwritable output is an i/o error")

    print("cli tests: all checks passed")
    return 0


if __name__ == "__main__":
    sys.exit(main())

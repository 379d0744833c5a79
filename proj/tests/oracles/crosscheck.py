#!/usr/bin/env python3
"""Runs the command-line tool on small windows and compares its reports with
the brute-force values computed by oracle.py. Usage: crosscheck.py <w1g>"""

import json
import os
import subprocess
import sys
import tempfile

sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))
import oracle  # noqa: E402

failures = 0


def cli(binary, *args):
    out = subprocess.run([binary, *args], capture_output=True, text=True)
    return out.returncode, json.loads(out.stdout)


def expect(name, got, want):
    global failures
    ok = got == want
    failures += not ok
    print(f"{'PASS' if ok else 'FAIL'} {name}: got {got}, want {want}")


def main(binary):
    for flavor, mode, key in (("tensor", "finite-support", "system_g1_R1_S1_tensor"),
                              ("tensor", "strict", "system_g1_R1_S1_tensor_strict"),
                              ("wedge", "finite-support", "system_g1_R1_S1_wedge")):
        want = oracle.COMPUTATIONS[key]()
        _, rep = cli(binary, "kernel", "--genus", "1", "--domain-radius", "1", "--value-radius", "1",
                     "--flavor", flavor, "--truncation", mode)
        r = rep["result"]
        expect(key, {"vars": r["num_vars"], "rows": r["num_equations"], "kernel_dim": r["kernel_dim"]}, want)

    want = oracle.classification(1, 1, 2, "tensor")
    _, rep = cli(binary, "classify", "--genus", "1", "--domain-radius", "1", "--value-radius", "2",
                 "--flavor", "tensor")
    r = rep["result"]
    expect("classify_g1_R1_S2_tensor", {k: r[k] for k in want}, want)

    for mode in ("finite-support", "strict"):
        want = oracle.propagate_zero(1, 2, 2, "tensor", "prime_prime", mode)
        _, rep = cli(binary, "propagate", "--genus", "1", "--domain-radius", "2", "--value-radius", "2",
                     "--flavor", "tensor", "--component", "prime_prime", "--truncation", mode)
        r = rep["result"]
        sol = r.get("interior_solution")
        got = {"vars": r["num_vars"], "interior_vars": r["interior_vars"], "undetermined": r["interior_undetermined"],
               "consistent": r["consistent"],
               "nonzero_interior_values": len(sol["entries"]) if sol else want["nonzero_interior_values"]}
        expect(f"propagate_g1_R2_S2_pp_{mode}", got, want)

    want = oracle.turaev(2, 1)
    _, rep = cli(binary, "turaev", "--genus", "2", "--value-radius", "1")
    r = rep["result"]
    expect("turaev_g2_S1", {"pairs_checked": r["pairs_checked"], "nonzero": r["nonzero"],
                            "target": [r["target"]["u"], r["target"]["v"]]}, want)

    want = oracle.soundness(1, 2)
    _, rep = cli(binary, "certificate-scan", "--genus", "1", "--value-radius", "2")
    r = rep["result"]
    expect("soundness_g1_r2", {k: r[k] for k in want}, want)

    with tempfile.TemporaryDirectory() as tmp:
        kpath = os.path.join(tmp, "k.json")
        with open(kpath, "w") as f:
            json.dump({"genus": 1, "values": [{"exp": [1, 1], "value": "1"}]}, f)
        _, made = cli(binary, "make-cochain", "--kind", "delta", "--genus", "1", "--domain-radius", "1", "-i", kpath)
        dpath = os.path.join(tmp, "d.json")
        with open(dpath, "w") as f:
            json.dump(made, f)
        code, rep = cli(binary, "residual-scan", "-i", dpath)
        got = [[w["Z1"], w["Z2"]] for w in rep["result"]["witnesses"]]
        expect("residual_xy_indicator_R1", got, oracle.residual_witnesses(1, 1, (1, 1), 1))
        expect("residual_exit_code", code, 1)

    print(f"{failures} failure(s)")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main(sys.argv[1]))

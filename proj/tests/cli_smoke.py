"""Smoke tests for the cgr command line: exit codes, JSON shape, determinism."""

import json
import subprocess
import sys

CGR = sys.argv[1]
failures = []


def run(*args):
    p = subprocess.run([CGR, *args], capture_output=True, text=True, timeout=600)
    return p.returncode, p.stdout, p.stderr


def expect(name, cond, detail=""):
    print(("PASS " if cond else "FAIL ") + name + ("" if cond else ": " + detail))
    if not cond:
        failures.append(name)


def run_json(*args):
    code, out, err = run(*args, "--json")
    try:
        return code, json.loads(out), out
    except json.JSONDecodeError:
        return code, None, out + err


code, j, _ = run_json("ring", "describe", "<g1,g2|>")
expect("ring free rank 2", code == 0 and j["variables"] == ["lambda1", "lambda2", "m12"]
       and j["free_relations"] == [] and j["dimension"] is None, str(j))

code, j, _ = run_json("ring", "describe", "<g1,g2,g3|>")
expect("ring free rank 3", code == 0 and len(j["variables"]) == 7 and len(j["free_relations"]) == 1, str(j))

code, j, _ = run_json("ring", "describe", "<g1|g1^4>")
expect("ring C_4 dimension", code == 0 and j["dimension"] == 3, str(j))

code, j, _ = run_json("ideal", "--kind", "bullet", "<g1|>", "--word", "g1")
expect("bullet ideal", code == 0 and j["generators"] == ["-lambda1 + 1"], str(j))

code, j, _ = run_json("ideal", "--kind", "hashhash", "<g1,g2|>")
expect("empty hashhash ideal", code == 0 and j["zero"] is True, str(j))

code, _, _ = run("normalgen", "<g1,g2|g1^2,g2^3>", "--word", "g1*g2*g1*g2")
expect("normalgen certified", code == 0)
code, _, _ = run("normalgen", "<g1|>", "--word", "g1")
expect("normalgen inconclusive exit 2", code == 2)

code, j, out1 = run_json("boyer", "--s", "2", "--t", "3", "--r", "2", "--word", "g1*g2")
expect("boyer certificate", code == 0 and j["degree"] == 1 and j["conclusion"] is not None
       and j["order"].startswith("block(x >"), str(j))
_, _, out2 = run_json("boyer", "--s", "2", "--t", "3", "--r", "2", "--word", "g1*g2")
expect("boyer json deterministic", out1 == out2)

code, _, err = run("boyer", "--s", "2", "--t", "3", "--r", "2", "--word", "g1^2*g2")
expect("boyer rejects bad exponent sums", code == 1 and "not 1 modulo" in err, err)

code, j, _ = run_json("sw", "verify", "--r", "2", "--s", "3", "--t", "5", "--word", "g1*g2*g3", "--properness",
                      "--timeout", "600")
expect("sw verify", code == 0 and all(c["passed"] for c in j["checks"]) and j["properness"] == "proper", str(j))

code, j, _ = run_json("sw", "static-checks")
expect("sw static checks", code == 0 and j["passed"] is True, str(j))

code, j, out1 = run_json("sw", "probe", "--trials", "3", "--seed", "4")
expect("sw probe", code == 0 and j["seed"] == 4 and j["counterexamples"] == [], str(j))
_, _, out2 = run_json("sw", "probe", "--trials", "3", "--seed", "4")
expect("sw probe deterministic", out1 == out2)

code, j, out1 = run_json("oracle", "fuzz", "--trials", "500", "--seed", "7")
expect("oracle fuzz", code == 0 and j["seed"] == 7 and j["mismatches"] == [], str(j)[:300])
_, _, out2 = run_json("oracle", "fuzz", "--trials", "500", "--seed", "7")
expect("oracle fuzz deterministic", out1 == out2)

code, j, _ = run_json("identity", "selftest", "--seed", "1", "--samples", "3")
expect("identity selftest", code == 0 and j["seed"] == 1 and j["passed"] is True, str(j)[:300])

code, _, err = run("ring", "describe", "<g1,g2|g1^2,g3>")
expect("parse error exit 1", code == 1 and "position" in err, err)

code, _, _ = run("sw", "verify", "--r", "2", "--s", "3", "--t", "5", "--word", "g1*g2*g3", "--properness",
                 "--timeout", "0.000001")
expect("timeout exit 3", code == 3)

sys.exit(1 if failures else 0)

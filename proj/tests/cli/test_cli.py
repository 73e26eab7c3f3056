"""Exit codes, JSON shape and worked examples of the minvar command line."""
import json
import subprocess
import sys

CLI = sys.argv[1]
failures = []


def run(args, stdin=None):
    p = subprocess.run([CLI, *args], input=stdin, capture_output=True, text=True, timeout=120)
    return p.returncode, p.stdout, p.stderr


def check(cond, label):
    print(("ok   " if cond else "FAIL ") + label)
    if not cond:
        failures.append(label)


def job(n, p, gens, **options):
    spec = {"n": n, "p": p, "generators": gens}
    if options:
        spec["options"] = options
    return json.dumps(spec)


minus_i3 = [[[-1, 0, 0], [0, -1, 0], [0, 0, -1]]]
g1 = [[[-1, 0, 0], [0, 0, 1], [0, 1, 0]]]

code, out, _ = run(["classify"], job(3, 2, minus_i3))
report = json.loads(out)
check(code == 0 and report["status"] == "NotCM" and report["rule"] == "R5", "classify -I_3 at p=2 is NotCM via R5")
check(json.loads(json.dumps(report)) == report, "classify report round-trips")

code, out, _ = run(["classify", "--audit"], job(3, 2, minus_i3))
audit = {a["rule"]: a for a in json.loads(out)["audit"]}
check(audit["R6"]["applicable"] and audit["R6"]["status"] == "NotCM", "audit: R6 agrees on -I_3")

code, out, _ = run(["analyze"], job(3, 2, g1))
a = json.loads(out)
check(code == 0 and a["height_ir"] == 2, "analyze G_1: height_ir = 2")
check([s["order"] for s in a["isotropy"]["subgroups"]] == [1, 2], "analyze G_1: isotropy {1, G}")
check(a["mu"] == {"value": 1, "exact": True}, "analyze G_1: mu = 1")

code, out, _ = run(["cohomology", "--group", "S3", "--p", "3", "--depth", "6"])
c = json.loads(out)
check(code == 0 and c["betti"] == [1, 0, 0, 1, 1, 0, 0], "cohomology S3 p=3 depth 6")
check(c["mu_p"] == {"value": 3, "exact": True}, "cohomology S3 p=3: mu_p = 3")

code, out, _ = run(["invariants", "--ball", "2"], job(1, 2, [[[-1]]]))
inv = json.loads(out)
check(code == 0 and inv["dim"] == 3 and inv["burnside"] == 3, "invariants inversion n=1, B=2")
check(inv["basis"][0]["orbit_sum"] == [{"coeff": 1, "exponents": [-2]}, {"coeff": 1, "exponents": [2]}],
      "orbit sums serialize as exponent/coeff records")

code, out, _ = run(["invariants"], job(2, 3, [], ball=1))
check(code == 0 and json.loads(out)["dim"] == 9, "options.ball is honoured and empty generator list means trivial group")

# deterministic output apart from timings
_, o1, _ = run(["analyze", "--group", "S4", "--p", "2"])
_, o2, _ = run(["analyze", "--group", "S4", "--p", "2"])
check(o1 == o2, "analyze output is byte-identical across runs")
check(o1 == json.dumps(json.loads(o1), indent=2, sort_keys=True) + "\n", "keys are sorted")

# errors
check(run(["classify"], "not json")[0] == 2, "malformed JSON exits 2")
check(run(["classify"], job(3, 4, minus_i3))[0] == 2, "non-prime p exits 2")
check(run(["classify"], job(2, 2, minus_i3))[0] == 2, "wrong generator size exits 2")
check(run(["classify"], job(2, 2, [[[2, 0], [0, 1]]]))[0] == 2, "non-unimodular generator exits 2")
check(run(["classify"], job(2, 2, [[[-1, 0], [0, -1]]], ball=99))[0] == 2, "option out of range exits 2")
check(run(["classify"], json.dumps({"n": 2, "p": 2, "generators": [], "extra": 1}))[0] == 2, "unknown field exits 2")
check(run(["classify", "--group", "nosuch"])[0] == 2, "unknown builtin exits 2")
check(run(["frobnicate"])[0] == 2, "unknown command exits 2")
check(run(["classify"], job(2, 2, [[[1, 1], [0, 1]]], max_group_order=50))[0] == 3, "infinite group exits 3")
check(run(["cohomology", "--group", "S4", "--p", "2", "--depth", "4"],)[0] == 0, "S4 cohomology fits the default bound")
big = [[[0, 1, 0, 0, 0], [0, 0, 1, 0, 0], [0, 0, 0, 1, 0], [0, 0, 0, 0, 1], [1, 0, 0, 0, 0]],
       [[0, 1, 0, 0, 0], [1, 0, 0, 0, 0], [0, 0, 1, 0, 0], [0, 0, 0, 1, 0], [0, 0, 0, 0, 1]]]
check(run(["cohomology", "--depth", "3"], job(5, 2, big))[0] == 3, "cohomology of S5 exceeds the group bound, exits 3")

code, out, _ = run(["selftest"])
st = json.loads(out)
check(code == 0 and st["passed"] and len(st["criteria"]) == 9, "selftest passes all nine criteria")

code, out, _ = run(["classify", "--group", "inversion2", "--human"])
check(code == 0 and "status       CM" in out, "--human renders a table")

sys.exit(1 if failures else 0)

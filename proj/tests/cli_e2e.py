"""End-to-end checks of the oramsey executable: exit codes, output formats
and JSON schema conformance."""

import csv
import io
import json
import pathlib
import subprocess
import sys
import tempfile

import jsonschema

CLI = sys.argv[1]
SCHEMAS = pathlib.Path(sys.argv[2])
failures = []


def run(*args):
    p = subprocess.run([CLI, *args], capture_output=True, text=True, timeout=600)
    return p.returncode, p.stdout, p.stderr


def expect(name, cond, info=""):
    print(("ok   " if cond else "FAIL ") + name + (f"  ({info})" if info and not cond else ""))
    if not cond:
        failures.append(name)


def schema(name):
    return json.loads((SCHEMAS / f"{name}.schema.json").read_text())


def valid(doc, name):
    try:
        jsonschema.validate(doc, schema(name))
        return True
    except jsonschema.ValidationError as e:
        print("     ", e.message)
        return False


with tempfile.TemporaryDirectory() as tmp:
    tmp = pathlib.Path(tmp)

    # verify
    code, out, _ = run("verify", "w14")
    expect("verify w14 exits 0", code == 0)
    expect("verify w14 reports 42 arcs", "arcs: 42" in out)
    expect("verify w14 reports alpha 3", "independence number: 3" in out)
    code, out, _ = run("verify", "all")
    expect("verify all exits 0", code == 0)
    expect("verify all has three sections", out.count("== W") == 3)
    again = run("verify", "all")[1]
    expect("verify all is idempotent", again == out)
    code, out, _ = run("verify", "all", "--format", "json")
    expect("verify json validates", code == 0 and valid(json.loads(out), "verify_report"))
    code, out, _ = run("verify", "all", "--format", "csv")
    rows = list(csv.DictReader(io.StringIO(out)))
    expect("verify csv has three rows", len(rows) == 3 and all(r["passed"] == "true" for r in rows))
    expect("verify w99 exits 2", run("verify", "w99")[0] == 2)

    # construct and check
    w8 = tmp / "w8.arcs"
    code, _, _ = run("construct", "w8", "--out", str(w8))
    expect("construct --out writes a file", code == 0 and w8.read_text().startswith("n 8\n"))
    code, out, _ = run("check", str(w8), "--m", "3", "--n", "3")
    expect("check w8 (3,3) exits 0", code == 0 and out.strip() == "free")
    code, out, _ = run("check", str(w8), "--m", "2", "--n", "3", "--format", "json")
    doc = json.loads(out)
    expect("check w8 (2,3) exits 1", code == 1)
    expect("check json validates", valid(doc, "check_report"))
    expect("certificate is an independent pair",
           doc["certificate"]["kind"] == "independent-set" and len(doc["certificate"]["vertices"]) == 2)
    bad = tmp / "malformed.arcs"
    bad.write_text("n 3\n0 1\n1 0\n")
    code, _, err = run("check", str(bad), "--m", "2", "--n", "3")
    expect("malformed file exits 2", code == 2)
    expect("diagnostic names the line", "line 3" in err, err)
    expect("missing file exits 2", run("check", str(tmp / "none.arcs"), "--m", "2", "--n", "3")[0] == 2)
    code, out, _ = run("construct", "--spec", "k=14; all=+1,-2; even=+4; odd=-6", "--format", "json")
    expect("construct json validates", code == 0 and valid(json.loads(out), "construct"))
    expect("construct spec gives 42 arcs", len(json.loads(out)["arcs"]) == 42)
    expect("construct with a clash exits 2", run("construct", "--spec", "k=4; all=2")[0] == 2)

    # bounds
    code, out, _ = run("bounds", "--m-max", "5", "--n-max", "3", "--format", "csv")
    rows = {(r["m"], r["n"]): r for r in csv.DictReader(io.StringIO(out))}
    expect("bounds exits 0", code == 0)
    expect("bounds (4,3) exact 15", rows[("4", "3")]["lower"] == "15" and rows[("4", "3")]["exact"] == "true")
    expect("bounds (5,3) exact 23", rows[("5", "3")]["upper"] == "23" and rows[("5", "3")]["exact"] == "true")
    code, out, _ = run("bounds", "--m-max", "2", "--n-max", "6", "--format", "csv")
    row = [r for r in csv.DictReader(io.StringIO(out)) if r["n"] == "6"][0]
    expect("bounds (2,6) is 28 exact", (row["lower"], row["upper"], row["exact"]) == ("28", "28", "true"))
    code, out, _ = run("bounds", "--m-max", "8", "--n-max", "8", "--format", "csv")
    expect("csv header", out.splitlines()[0] == "m,n,lower,upper,exact,lower_src,upper_src")
    code, out, _ = run("bounds", "--m-max", "8", "--n-max", "8", "--format", "json")
    expect("bounds json validates", valid(json.loads(out), "bounds"))
    expect("bounds above 20 exits 2", run("bounds", "--m-max", "21")[0] == 2)

    # search
    code, out, err = run("search", "--m", "3", "--n", "3", "--max-order", "9", "--format", "json")
    doc = json.loads(out)
    expect("search (3,3) exits 0", code == 0)
    expect("search json validates", valid(doc, "search_report"))
    expect("search (3,3) extremal order 8", doc["extremal_order"] == 8)
    expect("search (3,3) one class at 8", [l["classes"] for l in doc["per_order"] if l["order"] == 8] == [1])
    expect("progress goes to stderr", "order 9: 0 classes" in err and "order 9" not in out.split("per_order")[0])
    one = run("search", "--m", "3", "--n", "3", "--max-order", "9", "--format", "json", "--threads", "1")[1]
    many = run("search", "--m", "3", "--n", "3", "--max-order", "9", "--format", "json", "--threads", "4")[1]
    strip = lambda s: {k: v for k, v in json.loads(s).items() if k != "stats"}
    expect("thread count does not change the report", strip(one) == strip(many))
    code, out, _ = run("search", "--m", "2", "--n", "3", "--max-order", "5")
    expect("search (2,3) extremal order 3", code == 0 and "extremal order: 3" in out)
    code, out, _ = run("search", "--m", "4", "--n", "3", "--max-order", "8", "--class-cap", "100",
                       "--format", "json")
    doc = json.loads(out)
    expect("guard exits 3", code == 3)
    expect("guard report is partial", valid(doc, "search_report") and not doc["complete"])
    expect("prove-empty at 9 exits 0",
           run("search", "--m", "3", "--n", "3", "--max-order", "9", "--mode", "prove-empty")[0] == 0)
    expect("prove-empty at 8 exits 1",
           run("search", "--m", "3", "--n", "3", "--max-order", "8", "--mode", "prove-empty")[0] == 1)
    expect("find-any at 9 exits 1",
           run("search", "--m", "3", "--n", "3", "--max-order", "9", "--mode", "find-any")[0] == 1)
    expect("max order 11 exits 2", run("search", "--m", "3", "--n", "3", "--max-order", "11")[0] == 2)

    # cayley
    code, out, _ = run("cayley", "--group", "cyclic", "--order", "14", "--m", "4", "--n", "3", "--format", "json")
    doc = json.loads(out)
    expect("cayley cyclic 14 exits 0", code == 0)
    expect("cayley json validates", valid(doc, "cayley_report"))
    expect("cayley cyclic 14: 729 scanned, 0 free", (doc["scanned"], doc["free"]) == (729, 0))
    code, out, _ = run("cayley", "--group", "dihedral", "--order", "14", "--m", "4", "--n", "3")
    expect("cayley dihedral 14: 27 scanned", code == 0 and "27 oriented Cayley digraphs scanned, 0" in out)

    # usage
    expect("no subcommand exits 2", run()[0] == 2)
    expect("unknown flag exits 2", run("verify", "all", "--bogus")[0] == 2)
    expect("bad format exits 2", run("verify", "all", "--format", "xml")[0] == 2)
    expect("help exits 0", run("--help")[0] == 0)

print(f"{len(failures)} failure(s)")
sys.exit(1 if failures else 0)

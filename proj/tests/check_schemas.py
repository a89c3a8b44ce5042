import json
import subprocess
import sys
from pathlib import Path

import jsonschema

thhseg, schema_dir = sys.argv[1], Path(sys.argv[2])


def run(*args):
    out = subprocess.run([thhseg, *args], capture_output=True, text=True)
    assert out.returncode == 0, (args, out.stderr)
    return json.loads(out.stdout)


def validate(doc, name):
    jsonschema.validate(doc, json.loads((schema_dir / name).read_text()))


validate(run("verify", "--suite", "kappa"), "report.v1.json")
validate(run("verify", "--suite", "segal", "--spectrum", "bp", "--k-max", "2", "--degree-max", "12", "--floor", "-6"),
         "report.v1.json")
validate(run("chart", "--floor", "-6", "--degree-max", "10"), "chart.v1.json")
validate(run("chart", "--page", "2", "--spectrum", "bp", "--floor", "-4", "--degree-max", "8"), "chart.v1.json")
validate(run("chart", "--floor", "0", "--s-max", "-1"), "chart.v1.json")
validate(run("eval", "--op", "gamma", "--class", "s(xi1)", "--spectrum", "bp", "--format", "json"), "eval.v1.json")
validate(run("tate-ss", "page", "--spectrum", "thh-bp", "--k-max", "2", "--floor", "-4", "--degree-max", "12"),
         "page.v1.json")
print("schemas ok")

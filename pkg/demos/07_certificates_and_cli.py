"""
Certificate files and the command line
======================================

Certificates serialize to a small JSON record that anyone can re-check. The
same operations are available as ``antiramsey`` subcommands.
"""

import json
import tempfile
from pathlib import Path

from antiramsey import certfile
from antiramsey.cli import run
from antiramsey.constructions import k23_special

cert = k23_special(6)
text = certfile.dumps(cert)
print(text, end="")

with tempfile.TemporaryDirectory() as tmp:
    good = Path(tmp) / "k23.json"
    certfile.write(cert, good)
    print("verify exit code:", run(["verify", str(good)]))

    # a tampered file: make every edge its own color
    record = json.loads(text)
    record["edge_colors"] = list(range(15))
    record["claimed_colors"] = 15
    bad = Path(tmp) / "bad.json"
    bad.write_text(json.dumps(record))
    print("tampered exit code:", run(["verify", str(bad)]))

    run(["compute", "--n", "5", "--target", "house", "--cache-dir", tmp])
    run(["compute", "--n", "5", "--target", "house", "--cache-dir", tmp])  # served from the cache
    run(["classify", "--target", "bull", "--n-max", "7"])

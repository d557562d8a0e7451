# Writing your own claims
# -----------------------
# Claims can be written one per line as
#     claim <name> : sum <expression in k> (<=|>=) <expression in n>
# and checked from Python or with `factineq check <file>`.

import subprocess
import sys
import tempfile
from pathlib import Path

from factineq import parse_claims, search_counterexample
from factineq.harness import Registry, run_all, to_table

text = """
# a true bound and a false one
claim basel_tail : sum 1/k^2 <= 2 - 1/n
claim too_strong : sum 1/k! >= 2 - 1/n
"""
claims = parse_claims(text)
registry = Registry()
registry.add_claims(claims)
for claim in claims.claims:
    print(claim.id, "->", search_counterexample(claim.id, 100, registry))

reports = [r for r in run_all(30, registry=registry) if r.subject_id.startswith("user.")]
print(to_table(reports))

# The same through the command line.
with tempfile.TemporaryDirectory() as tmp:
    path = Path(tmp) / "mine.ineq"
    path.write_text(text, encoding="utf-8")
    proc = subprocess.run([sys.executable, "-m", "factineq", "check", str(path), "--n-max", "30", "--format", "table"],
                          capture_output=True, text=True)
    print(proc.stdout)
    print("exit code", proc.returncode)

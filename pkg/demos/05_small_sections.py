"""
Small smooth sections on P^1 and on a plane conic, with certificates that
are checked again from scratch.
"""
import json
from pathlib import Path

from arithbertini import documents
from arithbertini.arithseek import find_small_smooth_section, verify_certificate

here = Path(__file__).resolve().parent

for name in ("p1_worked.json", "conic.json"):
    P = documents.problem_from_doc(json.loads((here / "data" / name).read_text()))
    cert = find_small_smooth_section(P)
    print(f"--- {name}")
    for entry in cert.log:
        print(f"  m = {entry['m']}: norm {entry.get('norm')}")
    print("  section:", cert.section, " norm:", cert.norm_value)
    for line in verify_certificate(cert, P).lines():
        print("  " + line)

import sys
import time

import numpy as np

from stabtopo.codelib import builtin
from stabtopo.pipeline import analyze

jobs = [
    ("toric", "toric", {}, 8),
    ("double_semion", "double_semion", {}, 8),
    ("css_double_semion", "css_double_semion", {}, 8),
    ("six_semion", "six_semion", {}, 8),
    ("color", "color", {}, 8),
    ("modified_a", "modified_a", {}, 8),
    ("modified_b", "modified_b", {}, 8),
    ("modified_c", "modified_c", {}, 8),
    ("modified_d", "modified_d", {}, 8),
    ("modified_b@12", "modified_b", {}, 12),
]

for label, name, kw, nmax in jobs:
    t0 = time.time()
    code = builtin(name, **kw)
    th = analyze(code, nmax=nmax)
    dt = time.time() - t0
    print(f"=== {label} nmax={nmax} ({dt:.1f}s)")
    print(f"  to={th.to_condition} counts={th.counts} chosen_n={th.chosen_n} ny={th.ny}")
    print(f"  orders={th.orders} spins={th.spins}")
    if th.braiding is not None:
        print("  braiding=")
        for row in np.asarray(th.braiding):
            print("   ", list(int(v) for v in row))
    print(f"  em_pairs={th.em_pairs} em_error={th.em_error}")
    sys.stdout.flush()
print("ALL DONE")

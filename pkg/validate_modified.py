"""Scratch driver: full analyses of the modified color-code family."""
import time

import numpy as np

from stabtopo.codelib import builtin
from stabtopo.pipeline import analyze

for name, nmax in (
    ("modified_c", 8),
    ("modified_d", 8),
    ("modified_a", 8),
    ("modified_b", 12),
):
    t0 = time.time()
    th = analyze(builtin(name), nmax=nmax)
    print(name, "counts", th.counts, "chosen", th.chosen_n, "ny", th.ny)
    print("  orders", th.orders)
    print("  spins", th.spins)
    print("  braiding:\n", th.braiding)
    print("  em_pairs:", None if th.em_pairs is None else len(th.em_pairs),
          "em_error:", th.em_error)
    print("  %.1fs" % (time.time() - t0), flush=True)

"""Run the full analysis over every bundled code and print a survey.

Covers the whole zoo in one sitting: verdicts, anyon counts per step,
orders, spins, braiding tables, and charge/flux pairings where they
exist.  The one deliberately broken code is included to show what a
failed topological-order check looks like.  Takes a few minutes; the
two d=4 twisted codes dominate the runtime.
"""

import time

from stabtopo import analyze, builtin, builtin_names, poly_format

# modified_b needs a deeper sweep before all 16 of its anyons appear
SWEEP_DEPTH = {"modified_b": 12}


def survey(name):
    t0 = time.time()
    th = analyze(builtin(name), nmax=SWEEP_DEPTH.get(name, 8))
    dt = time.time() - t0
    print("=" * 60)
    print("%s  (d=%d, %d qudits per cell)  %.1fs" % (name, th.code.d, th.code.w, dt))
    if not th.to_condition:
        print("  NOT topologically ordered; %d witnesses, e.g.:" % len(th.witnesses))
        w = th.witnesses[0]
        for i, f in enumerate(w.entries[: w.w]):
            if f.terms:
                print("    X%d: %s" % (i, poly_format(f)))
        for i, f in enumerate(w.entries[w.w :]):
            if f.terms:
                print("    Z%d: %s" % (i, poly_format(f)))
        return
    print("  anyons per step:", th.counts, " chosen n=%d" % th.chosen_n)
    if not th.basis:
        print("  no nontrivial anyons (product phase)")
        return
    print("  y-step ny=%d  orders: %s  spins: %s" % (th.ny, th.orders, th.spins))
    print("  braiding exponents:")
    for row in th.braiding:
        print("    ", [int(e) for e in row])
    if th.em_pairs is not None:
        print("  charge/flux pairs:", len(th.em_pairs))
    else:
        print("  no charge/flux splitting:", th.em_error)


def main():
    for name in sorted(builtin_names()):
        survey(name)


if __name__ == "__main__":
    main()

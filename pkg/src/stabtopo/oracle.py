"""Brute-force checks on finite L x L tori.

Everything here works with explicit numpy matrices instead of Laurent
polynomials: generators are wrapped onto the torus, commutation is
re-verified with a finite symplectic product, string operators are
materialized cell by cell and their syndromes inspected directly.  This
gives an independent path to the same physics the infinite-lattice
pipeline computes, and is what the test-suite leans on as ground truth.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .laurent import LaurentPoly
from .matrixlab import mge
from .symplectic import PauliVector, Syndrome


@dataclass(frozen=True, eq=False)
class TorusInstance:
    """A stabilizer code wrapped onto an L x L torus.

    stab_matrix has one row per translated generator (t * L**2 rows) and
    one column per Pauli slot and cell (2 * w * L**2 columns); exponents
    are reduced mod L.  Column order: slot-major, then cell a + b * L.
    """

    L: int
    code: object
    stab_matrix: np.ndarray

    @property
    def cells(self):
        return self.L * self.L


def _scatter(L, d, entries, out=None):
    """Materialize Laurent-coefficient slots onto torus cells."""
    n = len(entries)
    if out is None:
        out = np.zeros(n * L * L, dtype=np.int64)
    for s, poly in enumerate(entries):
        for (a, b), c in poly.terms.items():
            out[s * L * L + (a % L) + (b % L) * L] = (
                out[s * L * L + (a % L) + (b % L) * L] + c
            ) % d
    return out


def materialize_pauli(inst, op):
    """Finite vector (length 2w * L**2) for a PauliVector."""
    return _scatter(inst.L, inst.code.d, op.entries)


def materialize_syndrome(inst, syn):
    """Finite vector (length t * L**2) for a Syndrome."""
    return _scatter(inst.L, inst.code.d, syn.entries)


def instantiate_torus(code, L):
    """Wrap every generator translate onto the torus and re-verify
    commutation of the resulting finite rows."""
    r = code.range
    if L <= 2 * r:
        raise ValueError(
            "torus size %d too small: need L > %d for stabilizer range %d"
            % (L, 2 * r, r)
        )
    d, w, t = code.d, code.w, code.t
    n = L * L
    alpha = np.arange(n, dtype=np.int64) % L
    beta = np.arange(n, dtype=np.int64) // L
    M = np.zeros((t * n, 2 * w * n), dtype=np.int64)
    for i, gen in enumerate(code.generators):
        rows = i * n + alpha + beta * L
        for s, poly in enumerate(gen.entries):
            for (a, b), c in poly.terms.items():
                cols = s * n + (a + alpha) % L + ((b + beta) % L) * L
                M[rows, cols] = (M[rows, cols] + c) % d
    X = M[:, : w * n]
    Z = M[:, w * n :]
    comm = (X @ Z.T - Z @ X.T) % d
    if comm.any():
        i, j = np.argwhere(comm)[0]
        raise ValueError(
            "torus rows %d and %d fail to commute (exponent %d)"
            % (i, j, comm[i, j])
        )
    return TorusInstance(L=L, code=code, stab_matrix=M)


def torus_syndrome(inst, op):
    """Commutation exponent of op against every stabilizer row."""
    d, w = inst.code.d, inst.code.w
    n = inst.cells
    vec = op if isinstance(op, np.ndarray) else materialize_pauli(inst, op)
    X = inst.stab_matrix[:, : w * n]
    Z = inst.stab_matrix[:, w * n :]
    return (X @ vec[w * n :] - Z @ vec[: w * n]) % d


def torus_gsd(inst):
    """Ground-state degeneracy d**(w L^2) / |stabilizer group|.

    The group size comes from the echelon pivots of the stabilizer matrix
    over Z_d: each pivot value p contributes d // gcd(d, p) independent
    choices, which is the product of the lifted matrix's elementary
    divisors folded with d (the relation S**d = 1 included).
    """
    d = inst.code.d
    ech = mge(inst.stab_matrix, d)
    size = 1
    for _, _, p in ech.pivots:
        size *= d // math.gcd(d, int(p))
    dim = d ** (inst.code.w * inst.cells)
    gsd, rem = divmod(dim, size)
    assert rem == 0
    return gsd


def _stacked_string(s, length, axis):
    if axis == "x":
        op, da, db = s.px, s.nx, 0
    elif axis == "y":
        if s.py is None:
            raise ValueError("string operator has no y-direction part")
        op, da, db = s.py, 0, -s.ny
    else:
        raise ValueError("axis must be 'x' or 'y'")
    total = op * 0
    for j in range(length):
        total = total + op.shift(da * j, db * j)
    return total, (da * length, db * length)


def verify_string_endpoints(inst, s, length, axis="x"):
    """Check that a length-`length` stack of the string operator excites
    the code only near its two endpoints, with the advertised anyon.

    Returns False when the syndrome has bulk violations or disagrees with
    the expected endpoint pattern; raises when the stack wraps the torus.
    """
    if length < 1:
        raise ValueError("length must be >= 1")
    L, d = inst.L, inst.code.d
    step = length * (s.nx if axis == "x" else s.ny)
    if 2 * step >= L:
        raise ValueError(
            "string of extent %d wraps the %d-torus" % (step, L)
        )
    total, (ex, ey) = _stacked_string(s, length, axis)
    found = torus_syndrome(inst, total)
    mover = LaurentPoly(d, {(0, 0): 1, (ex, ey): -1})
    expected = materialize_syndrome(inst, s.anyon.scale(mover))
    if not np.array_equal(found, expected):
        return False
    # locality: violations may sit only around the endpoints, within the
    # stabilizer range plus the anyon's own footprint
    va, vb = s.anyon.radius_xy()
    rad = inst.code.range + max(va, vb)
    n = inst.cells
    for idx in np.flatnonzero(found):
        cell = idx % n
        a, b = cell % L, cell // L
        near = False
        for (pa, pb) in ((0, 0), (ex, ey)):
            dx = min((a - pa) % L, (pa - a) % L)
            dy = min((b - pb) % L, (pb - b) % L)
            if max(dx, dy) <= rad:
                near = True
                break
        if not near:
            return False
    return True

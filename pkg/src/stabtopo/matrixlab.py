"""Linear algebra over Z_d and Z for translation-invariant codes.

This module holds the numeric core: truncation of Laurent-polynomial
vectors to dense coefficient rows over a finite window, the translational
duplicate map, Gaussian elimination over prime fields, a modified Gaussian
elimination over Z_d with full relation tracking, span checking against an
echelon form, and Hermite/Smith normal forms over the integers.

Conventions
-----------
* A Region fixes the truncation window |a| <= kx, |b| <= ky together with
  the translation half-widths m (operators) and m' (stabilizers).
* The monomial x^a y^b in polynomial slot s maps to column
  s*(2kx+1)(2ky+1) + (a+kx) + (b+ky)(2kx+1).
* Truncation is lossy: terms outside the window are dropped.  Callers that
  need faithfulness must size the region so supports fit (RegionTooSmall
  is raised by higher layers, not here).
* mge reduces every row mod d after each operation; pivot values are the
  column gcds (with d) and always divide d.  The relation matrix tracks
  combinations of the ORIGINAL rows only; virtual d-rows contribute
  nothing to it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .laurent import LaurentPoly


class RegionTooSmall(ValueError):
    """A truncation window too small for the supports it must carry."""


@dataclass(frozen=True)
class Region:
    """Truncation window and translation half-widths.

    kx, ky: monomials with |a| <= kx and |b| <= ky are kept.
    m:      translation half-width for operator duplicates.
    mprime: translation half-width for stabilizer duplicates.

    A window-only region (m and mprime omitted) supports truncation but
    not the duplicate maps; when both are given they must satisfy
    0 <= m < m' <= min(kx, ky).
    """

    kx: int
    ky: int
    m: int = None
    mprime: int = None

    def __post_init__(self):
        for f in (self.kx, self.ky):
            if not isinstance(f, int) or f < 0:
                raise ValueError("window half-widths must be nonnegative integers")
        if (self.m is None) != (self.mprime is None):
            raise ValueError("m and m' must be given together")
        if self.m is not None:
            for f in (self.m, self.mprime):
                if not isinstance(f, int) or f < 0:
                    raise ValueError("translation half-widths must be nonnegative integers")
            if not (self.m < self.mprime <= min(self.kx, self.ky)):
                raise ValueError(
                    "need 0 <= m < m' <= min(kx, ky), got m=%d m'=%d kx=%d ky=%d"
                    % (self.m, self.mprime, self.kx, self.ky)
                )

    @property
    def cells(self):
        return (2 * self.kx + 1) * (2 * self.ky + 1)

    def contains(self, a, b):
        return abs(a) <= self.kx and abs(b) <= self.ky

    def col(self, slot, a, b):
        """Column of x^a y^b in slot s under the fixed layout."""
        return slot * self.cells + (a + self.kx) + (b + self.ky) * (2 * self.kx + 1)

    def monomial_of(self, col):
        """Inverse of col: returns (slot, a, b)."""
        slot, rem = divmod(col, self.cells)
        b, a = divmod(rem, 2 * self.kx + 1)
        return slot, a - self.kx, b - self.ky

    def grow(self, kx=None, ky=None):
        """A region with enlarged window, same m and m'."""
        return Region(
            max(self.kx, kx if kx is not None else 0),
            max(self.ky, ky if ky is not None else 0),
            self.m,
            self.mprime,
        )


def truncate(f, region, slot=0, nslots=1):
    """Coefficient row of f placed in the given slot of an nslots layout.

    Lossy: monomials outside the window are dropped.
    """
    if slot < 0 or slot >= nslots:
        raise ValueError("slot %d outside layout with %d slots" % (slot, nslots))
    row = np.zeros(nslots * region.cells, dtype=np.int64)
    for (a, b), c in f.terms.items():
        if region.contains(a, b):
            row[region.col(slot, a, b)] = c
    return row


def untruncate(row, region, d, slot=0):
    """Polynomial stored in one slot of a coefficient row."""
    row = np.asarray(row)
    nslots, rem = divmod(len(row), region.cells)
    if rem or slot >= nslots:
        raise ValueError("row length %d does not fit the layout" % len(row))
    terms = {}
    for b in range(-region.ky, region.ky + 1):
        for a in range(-region.kx, region.kx + 1):
            c = int(row[region.col(slot, a, b)])
            if c % d:
                terms[(a, b)] = c
    return LaurentPoly(d, terms)


def truncate_vector(vec, region):
    """Coefficient row of a polynomial vector, slot-major."""
    n = len(vec)
    row = np.zeros(n * region.cells, dtype=np.int64)
    for s, f in enumerate(vec):
        for (a, b), c in f.terms.items():
            if region.contains(a, b):
                row[region.col(s, a, b)] = c
    return row


def untruncate_vector(row, region, d):
    """Tuple of polynomials recovered from a slot-major coefficient row."""
    row = np.asarray(row)
    nslots, rem = divmod(len(row), region.cells)
    if rem:
        raise ValueError("row length %d does not fit the layout" % len(row))
    return tuple(untruncate(row, region, d, slot=s) for s in range(nslots))


def fits_region(vec, region):
    """True iff every support monomial lies inside the window."""
    rx, ry = vec.radius_xy()
    return rx <= region.kx and ry <= region.ky


def td_shifts(mx, my=None):
    """Shift list of the translational duplicate map: j-major, ascending."""
    if my is None:
        my = mx
    return [(i, j) for j in range(-my, my + 1) for i in range(-mx, mx + 1)]


def td(F, mx, my=None):
    """Translates x^i y^j F for |i| <= mx, |j| <= my, j-major.

    F may be any polynomial vector (or a bare polynomial); the first entry
    is the (-mx, -my) translate.
    """
    return [F.shift(i, j) for i, j in td_shifts(mx, my)]


@dataclass
class CoeffMatrix:
    """Dense coefficient matrix with its column layout."""

    entries: np.ndarray
    nslots: int
    region: Region

    @classmethod
    def from_vectors(cls, vectors, region):
        vectors = list(vectors)
        if not vectors:
            raise ValueError("no rows")
        n = len(vectors[0])
        rows = np.zeros((len(vectors), n * region.cells), dtype=np.int64)
        for k, v in enumerate(vectors):
            if len(v) != n:
                raise ValueError("inconsistent slot counts")
            rows[k] = truncate_vector(v, region)
        return cls(entries=rows, nslots=n, region=region)

    @property
    def rows(self):
        return self.entries.shape[0]

    @property
    def cols(self):
        return self.entries.shape[1]


def td_matrix(F, region, mx, my=None):
    """CoeffMatrix stacking the truncated translates of F."""
    return CoeffMatrix.from_vectors(td(F, mx, my), region)


# ---------------------------------------------------------------------------
# elimination
# ---------------------------------------------------------------------------


@dataclass
class EchelonResult:
    """Echelon form with relation tracking over the original rows.

    echelon: pivot rows (pivot columns strictly increasing), then one
      all-zero row per discovered relation.
    relation: same row count; relation @ original == echelon (mod d).
    pivots: list of (row, col, value); every value divides d.
    zero_rows: indices of the trailing all-zero echelon rows.
    """

    echelon: np.ndarray
    relation: np.ndarray
    pivots: list
    zero_rows: list
    d: int

    @property
    def rank(self):
        return len(self.pivots)

    @property
    def relations(self):
        """Combinations of original rows that vanish mod d."""
        return self.relation[self.zero_rows] if self.zero_rows else self.relation[:0]


def _entries_of(M):
    A = getattr(M, "entries", M)
    A = np.asarray(A)
    if A.ndim == 1:
        A = A.reshape(1, -1)
    if A.ndim != 2:
        raise ValueError("expected a 2D matrix")
    return A


def _gcd_with(d, values):
    g = d
    for v in values:
        g = math.gcd(g, int(v))
        if g == 1:
            break
    return g


def mge(M, d, exact=False, check=True, track=True):
    """Row echelon over Z_d with relation tracking.

    Per pivot column: a virtual row holding d at that column joins the
    active rows; a Euclid subtraction dance places the column gcd g on a
    pivot row; every other active row then clears its column entry with a
    single exact division step.  Rows that become zero retire: silently if
    their tracking is zero too, otherwise as a relation among the original
    rows.  The virtual row materializes only when the dance touches it or
    when g > 1 forces a closure row; its tracking is identically zero, so
    relations involve original rows only.

    exact=True carries entries as exact integers with no intermediate
    mod-d reduction (all zero tests and gcds still happen mod d); the
    returned result is reduced mod d either way.

    track=False skips relation tracking entirely: the result carries
    pivots and the pivot rows only (no relation rows), which roughly
    halves the work when only ranks or span sizes are needed.  track may
    also be a sequence of original-row indices: only those columns of the
    tracking matrix are carried, relation rows have that width, and rows
    vanishing with zero tracked part retire silently.
    """
    A0 = _entries_of(M)
    r0, c = A0.shape
    if d < 2:
        raise ValueError("modulus must be >= 2")

    dtype = object if exact else np.int64
    if track is True:
        tsel = list(range(r0))
    elif track is False or track is None:
        tsel = None
    else:
        tsel = [int(i) for i in track]
    twidth = len(tsel) if tsel is not None else 0
    # preallocated buffers with room for virtual rows (grown geometrically)
    cap = r0 + 16
    work = np.zeros((cap, c), dtype=dtype)
    trk = None
    if tsel is not None:
        trk = np.zeros((cap, twidth), dtype=dtype)
        for pos, i in enumerate(tsel):
            trk[i, pos] = 1
    work[:r0] = (A0 % d).astype(dtype)
    nrows = r0

    active = list(range(r0))  # kept ascending; virtual rows append at the end
    pivot_rows = []  # (work index, col, value)
    relation_idx = []  # work indices retired as relations, in retirement order

    def colval(i, col):
        return int(work[i, col])

    def retire(indices):
        arr = sorted(set(indices) & set(active))
        if not arr:
            return
        rows = work[arr] % d if exact else work[arr]
        zero = ~rows.astype(bool).any(axis=1)
        for pos, i in enumerate(arr):
            if not zero[pos]:
                continue
            active.remove(i)
            if trk is None:
                continue
            tr = trk[i] % d if exact else trk[i]
            if tr.astype(bool).any():
                relation_idx.append(i)

    def materialize(col):
        # the virtual row [0,..,d,..,0]: zero tracking, value d at col
        nonlocal work, trk, cap, nrows
        if nrows == cap:
            cap = 2 * cap
            nwork = np.zeros((cap, c), dtype=dtype)
            nwork[:nrows] = work[:nrows]
            if trk is not None:
                ntrk = np.zeros((cap, twidth), dtype=dtype)
                ntrk[:nrows] = trk[:nrows]
                trk = ntrk
            work = nwork
        k = nrows
        nrows += 1
        work[k, col] = d
        active.append(k)
        return k

    retire(range(r0))

    for col in range(c):
        if not active:
            break
        act = np.asarray(active, dtype=np.intp)
        colv = work[act, col]
        if exact:
            # entry-range control on the working column only: subtract
            # multiples of the virtual d-row (tracking-free) so the dance
            # sees canonical values; the rest of each row stays exact
            colv = colv % d
            work[act, col] = colv
        nzmask = colv.astype(bool)
        if not nzmask.any():
            continue
        g = _gcd_with(d, colv[nzmask])

        virtual_alive = True  # conceptual row d*e_col, not yet materialized
        last_modified = None
        modified = set()

        while True:
            act = np.asarray(active, dtype=np.intp)
            colv = work[act, col]
            nzmask = colv.astype(bool)
            vals = colv[nzmask]
            rows = act[nzmask]
            if int(vals.min()) == g:
                break
            # the untouched virtual ranks with value d: it dominates the
            # canonical entries and wins ties; among equal entries the
            # lowest work index wins
            o1 = int(np.argmax(vals))
            e1, i1 = int(vals[o1]), int(rows[o1])
            if virtual_alive:
                ia, eb, ib = -1, e1, i1
            else:
                if vals.size < 2:
                    raise AssertionError("subtraction dance orphaned a column")
                rest = np.ones(vals.size, dtype=bool)
                rest[o1] = False
                o2 = int(np.argmax(vals[rest]))
                eb = int(vals[rest][o2])
                ib = int(rows[rest][o2])
                ia = i1
            if ia == -1:
                ia = materialize(col)
                virtual_alive = False
            q = colval(ia, col) // eb
            work[ia] -= q * work[ib]
            if not exact:
                work[ia] %= d
            if trk is not None:
                trk[ia] -= q * trk[ib]
                if not exact:
                    trk[ia] %= d
            last_modified = ia
            modified.add(ia)

        if last_modified is not None and colval(last_modified, col) == g:
            piv = last_modified
        else:
            piv = int(rows[np.asarray(vals == g).astype(bool)].min())

        active.remove(piv)
        pivot_rows.append((piv, col, g))

        if active:
            act = np.asarray(active, dtype=np.intp)
            vals2 = work[act, col]
            qs = vals2 // g  # exact division: g divides every column entry
            mask = qs.astype(bool)
            sel = act[mask]
            if sel.size:
                qsel = qs[mask]
                work[sel] = work[sel] - qsel[:, None] * work[piv][None, :]
                if not exact:
                    work[sel] %= d
                if trk is not None:
                    trk[sel] = trk[sel] - qsel[:, None] * trk[piv][None, :]
                    if not exact:
                        trk[sel] %= d
                modified.update(int(i) for i in sel)

        if virtual_alive and g > 1:
            # closure: the virtual row minus (d/g) times the pivot survives
            # with a zero pivot-column entry and keeps later columns honest
            k = materialize(col)
            q = d // g
            work[k] = work[k] - q * work[piv]
            if not exact:
                work[k] %= d
            if trk is not None:
                trk[k] = trk[k] - q * trk[piv]
                if not exact:
                    trk[k] %= d
            modified.add(k)

        retire(modified)

    order = [i for i, _, _ in pivot_rows] + relation_idx
    if order:
        echelon = (work[order] % d).astype(np.int64)
    else:
        echelon = np.zeros((0, c), dtype=np.int64)
    if trk is not None and order:
        relation = (trk[order] % d).astype(np.int64)
    else:
        relation = np.zeros((len(order), twidth), dtype=np.int64)
    pivots = [(k, col, val) for k, (_, col, val) in enumerate(pivot_rows)]
    zero_rows = list(range(len(pivot_rows), len(order)))

    result = EchelonResult(
        echelon=echelon, relation=relation, pivots=pivots, zero_rows=zero_rows, d=d
    )
    if check and track is True and r0:
        recon = result.relation @ (A0 % d) % d
        if not np.array_equal(recon.astype(np.int64), result.echelon):
            raise AssertionError("relation tracking lost: relation @ M != echelon")
    return result


def _is_probable_prime(p):
    if p < 2:
        return False
    for q in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if p % q == 0:
            return p == q
    # deterministic Miller-Rabin for 64-bit inputs
    dd, s = p - 1, 0
    while dd % 2 == 0:
        dd //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, dd, p)
        if x in (1, p - 1):
            continue
        for _ in range(s - 1):
            x = x * x % p
            if x == p - 1:
                break
        else:
            return False
    return True


def ge_field(M, p, check=True, track=True):
    """Reduced row echelon over the prime field F_p with relation tracking.

    track=False skips the tracking matrix (result carries pivot rows only,
    no relation rows)."""
    if not _is_probable_prime(p):
        raise ValueError("%d is not prime" % p)
    A0 = _entries_of(M)
    r0, c = A0.shape
    work = (A0 % p).astype(np.int64)
    trk = np.eye(r0, dtype=np.int64) if track else None

    pivot_rows = []
    remaining = list(range(r0))
    rem_arr = np.arange(r0, dtype=np.intp)
    for col in range(c):
        nz = rem_arr[work[rem_arr, col] != 0]
        if nz.size == 0:
            continue
        piv = int(nz[0])
        inv = pow(int(work[piv, col]), -1, p)
        work[piv] = work[piv] * inv % p
        if trk is not None:
            trk[piv] = trk[piv] * inv % p
        others = np.nonzero(work[:, col])[0]
        others = others[others != piv]
        if others.size:
            qs = work[others, col]
            work[others] = (work[others] - qs[:, None] * work[piv][None, :]) % p
            if trk is not None:
                trk[others] = (trk[others] - qs[:, None] * trk[piv][None, :]) % p
        pivot_rows.append((piv, col, 1))
        remaining.remove(piv)
        rem_arr = np.asarray(remaining, dtype=np.intp)
        if not remaining:
            break

    zero_idx = [i for i in range(r0) if not work[i].any()]
    if trk is not None:
        for i in zero_idx:
            # canonical relations: leading coefficient 1
            lead = next((int(x) for x in trk[i] if x), 0)
            if lead > 1:
                trk[i] = trk[i] * pow(lead, -1, p) % p
    order = [i for i, _, _ in pivot_rows] + zero_idx
    echelon = work[order].copy() if order else np.zeros((0, c), dtype=np.int64)
    if trk is not None and order:
        relation = trk[order].copy()
    else:
        relation = np.zeros((len(order), r0), dtype=np.int64)
    pivots = [(k, col, 1) for k, (_, col, _) in enumerate(pivot_rows)]
    zero_rows = list(range(len(pivot_rows), len(order)))

    result = EchelonResult(
        echelon=echelon, relation=relation, pivots=pivots, zero_rows=zero_rows, d=p
    )
    if check and track and r0:
        recon = result.relation @ (A0 % p) % p
        if not np.array_equal(recon.astype(np.int64), result.echelon):
            raise AssertionError("relation tracking lost: relation @ M != echelon")
    return result


def span_check(ech, v):
    """Coefficients expressing v over the echelon rows, or None.

    Walks the pivots in column order; at each one the pivot value must
    divide the current entry in Z_d (integer divisibility of canonical
    representatives).  Returns alpha with alpha @ echelon == v (mod d)
    when v lies in the span.
    """
    d = ech.d
    v = np.asarray(v, dtype=np.int64) % d
    if ech.echelon.shape[0] and v.shape[0] != ech.echelon.shape[1]:
        raise ValueError("vector length does not match echelon width")
    coeffs = np.zeros(ech.echelon.shape[0], dtype=np.int64)
    for row, col, p in ech.pivots:
        val = int(v[col])
        if val % p:
            return None
        q = val // p
        if q:
            v = (v - q * ech.echelon[row]) % d
            coeffs[row] = q % d
    if v.any():
        return None
    return coeffs


# ---------------------------------------------------------------------------
# integer normal forms
# ---------------------------------------------------------------------------


def hnf(M):
    """Row Hermite normal form over Z: (H, U) with U @ M = H, U unimodular.

    H is upper staircase with positive pivots; entries above each pivot are
    reduced into [0, pivot).  Zero rows sink to the bottom; their U rows
    are integer relations among the input rows.
    """
    A = np.array(_entries_of(M), dtype=object)
    r, c = A.shape
    U = np.eye(r, dtype=object)
    ri = 0
    for col in range(c):
        if ri == r:
            break
        while True:
            rows = [i for i in range(ri, r) if A[i, col] != 0]
            if not rows:
                break
            p = min(rows, key=lambda i: (abs(A[i, col]), i))
            others = [i for i in rows if i != p]
            if not others:
                if p != ri:
                    A[[ri, p]] = A[[p, ri]]
                    U[[ri, p]] = U[[p, ri]]
                if A[ri, col] < 0:
                    A[ri] = -A[ri]
                    U[ri] = -U[ri]
                for i in range(ri):
                    q = A[i, col] // A[ri, col]
                    if q:
                        A[i] = A[i] - q * A[ri]
                        U[i] = U[i] - q * U[ri]
                ri += 1
                break
            for i in others:
                q = A[i, col] // A[p, col]
                A[i] = A[i] - q * A[p]
                U[i] = U[i] - q * U[p]
    return A, U


def snf(M):
    """Smith normal form over Z: (L, A, R) with M = L @ A @ R.

    L and R are unimodular, A is diagonal with nonnegative entries and
    d1 | d2 | ... Deterministic: pivots are chosen as the minimum-absolute
    nonzero entry with lexicographic tie-breaks.
    """
    M0 = np.array(_entries_of(M), dtype=object)
    A = M0.copy()
    r, c = A.shape
    L = np.eye(r, dtype=object)
    R = np.eye(c, dtype=object)

    def row_swap(i, j):
        A[[i, j]] = A[[j, i]]
        L[:, [i, j]] = L[:, [j, i]]

    def col_swap(i, j):
        A[:, [i, j]] = A[:, [j, i]]
        R[[i, j]] = R[[j, i]]

    def row_add(i, j, q):  # row_i += q * row_j
        A[i] = A[i] + q * A[j]
        L[:, j] = L[:, j] - q * L[:, i]

    def col_add(j, i, q):  # col_j += q * col_i
        A[:, j] = A[:, j] + q * A[:, i]
        R[i] = R[i] - q * R[j]

    def row_neg(i):
        A[i] = -A[i]
        L[:, i] = -L[:, i]

    t = 0
    while t < min(r, c):
        best = None
        for i in range(t, r):
            for j in range(t, c):
                v = abs(A[i, j])
                if v and (best is None or v < best[0]):
                    best = (v, i, j)
        if best is None:
            break
        while True:
            _, bi, bj = best
            if bi != t:
                row_swap(t, bi)
            if bj != t:
                col_swap(t, bj)
            if A[t, t] < 0:
                row_neg(t)
            clean = True
            for i in range(t + 1, r):
                if A[i, t]:
                    row_add(i, t, -(A[i, t] // A[t, t]))
                    if A[i, t]:
                        clean = False
            for j in range(t + 1, c):
                if A[t, j]:
                    col_add(j, t, -(A[t, j] // A[t, t]))
                    if A[t, j]:
                        clean = False
            if clean:
                offender = None
                for i in range(t + 1, r):
                    for j in range(t + 1, c):
                        if A[i, j] % A[t, t]:
                            offender = i
                            break
                    if offender is not None:
                        break
                if offender is None:
                    break
                # pull the non-divisible row up; the next reduction cycle
                # strictly shrinks the pivot
                row_add(t, offender, 1)
            best = None
            for i in range(t, r):
                for j in range(t, c):
                    v = abs(A[i, j])
                    if v and (best is None or v < best[0]):
                        best = (v, i, j)
        t += 1

    if not np.array_equal(L @ A @ R, M0):
        raise AssertionError("normal form lost the factorization M = L A R")
    return L, A, R


# ---------------------------------------------------------------------------
# row-span sizes over Z_d
# ---------------------------------------------------------------------------


def howell_complete(M, d):
    """Echelon of the row span mod d, stable under pivot closures.

    Re-eliminates with the (d/g)*row closures of every pivot row until the
    pivot profile stops changing; the resulting pivot values make the span
    size the product of d/value.
    """
    E = mge(M, d)
    profile = [(col, val) for _, col, val in E.pivots]
    for _ in range(64):
        rows = E.echelon[: E.rank]
        closures = []
        for k, _, val in E.pivots:
            if val > 1:
                closures.append((d // val) * rows[k] % d)
        stacked = np.vstack([rows] + [np.asarray(closures)]) if closures else rows
        E2 = mge(stacked, d)
        profile2 = [(col, val) for _, col, val in E2.pivots]
        if profile2 == profile:
            return E2
        E, profile = E2, profile2
    raise AssertionError("pivot closure failed to stabilize")


def zd_span_size(M, d):
    """Number of distinct Z_d row-combinations of M."""
    E = howell_complete(M, d)
    size = 1
    for _, _, val in E.pivots:
        size *= d // val
    return size


def span_size_via_lattice(M, d):
    """Span size computed independently through the integer lattice.

    Stacks M over d*I and reads the index of the resulting sublattice off
    the Hermite normal form; the span mod d has d^cols / index elements.
    """
    A = _entries_of(M)
    c = A.shape[1]
    stacked = np.vstack([np.array(A, dtype=object) % d, d * np.eye(c, dtype=object)])
    H, _ = hnf(stacked)
    index = 1
    for i in range(c):
        if H[i, i] == 0:
            raise AssertionError("stacked lattice lost full rank")
        index *= int(H[i, i])
    total = d**c
    if total % index:
        raise AssertionError("lattice index does not divide the ambient count")
    return total // index


def lattice_relations(M, d):
    """Relations among rows of M mod d, found by integer elimination.

    Eliminates the stacked [M; d*I] over Z; the tracking rows that map to
    zero give integer combinations u.M + w.(d I) = 0, i.e. u.M == 0 mod d.
    Returns the u parts reduced mod d (one per zero row).
    """
    A = _entries_of(M)
    r, c = A.shape
    stacked = np.vstack([np.array(A, dtype=object), d * np.eye(c, dtype=object)])
    H, U = hnf(stacked)
    rels = []
    for i in range(r + c):
        if not any(H[i]):
            rels.append([int(x) % d for x in U[i, :r]])
    return np.array(rels, dtype=np.int64).reshape(len(rels), r)

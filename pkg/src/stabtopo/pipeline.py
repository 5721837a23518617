"""End-to-end anyon analysis for translation-invariant stabilizer codes.

Pipeline: decide whether the code is topologically ordered (every local
excitation-free operator is generated by the stabilizers), solve the
string equation eps(px) = (1 - x^n) v over a sweep of step sizes, extract
a fusion basis through integer Smith reduction of the relation matrix,
build the matching y-direction strings, and evaluate topological spins
and mutual braiding with T-junction commutators.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field, replace
from functools import lru_cache

import numpy as np

from .laurent import LaurentPoly
from .matrixlab import (
    CoeffMatrix,
    Region,
    RegionTooSmall,
    _is_probable_prime,
    ge_field,
    mge,
    snf,
    span_check,
    td_shifts,
    truncate_vector,
)
from .symplectic import (
    PauliVector,
    StabilizerCode,
    Syndrome,
    excitation_map,
    single_paulis,
)

DEFAULT_REGION = Region(6, 6, 3, 4)


# ---------------------------------------------------------------------------
# domain types
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class StringOperator:
    """A string solution: eps(px) = (1 - x^nx) anyon, and once the
    y-direction is solved, eps(py) = (1 - y^(-ny)) anyon."""

    anyon: Syndrome
    nx: int
    px: PauliVector
    ny: int = 0
    py: PauliVector = None

    def verify(self, code):
        step = LaurentPoly(code.d, {(0, 0): 1, (self.nx, 0): -1})
        if excitation_map(code, self.px) != self.anyon.scale(step):
            return False
        if self.py is not None:
            ystep = LaurentPoly(code.d, {(0, 0): 1, (0, -self.ny): -1})
            if excitation_map(code, self.py) != self.anyon.scale(ystep):
                return False
        return True


@dataclass(frozen=True)
class AnyonClass:
    anyon: Syndrome
    order: int
    string: StringOperator


@dataclass
class AnyonTheory:
    code: StabilizerCode
    region: Region
    to_condition: bool
    witnesses: list
    chosen_n: int = None
    counts: list = field(default_factory=list)
    basis: list = field(default_factory=list)
    ny: int = None
    spins: list = field(default_factory=list)
    braiding: np.ndarray = None
    em_pairs: list = None
    em_error: str = None

    @property
    def orders(self):
        return [a.order for a in self.basis]


def combine_strings(strings, coeffs):
    """Integer combination of string operators sharing nx (and ny)."""
    strings = list(strings)
    if not strings:
        raise ValueError("nothing to combine")
    nx = strings[0].nx
    ny = strings[0].ny
    if any(s.nx != nx or s.ny != ny for s in strings):
        raise ValueError("strings have mismatched step sizes")
    anyon = strings[0].anyon * coeffs[0]
    px = strings[0].px * coeffs[0]
    for s, c in zip(strings[1:], coeffs[1:]):
        anyon = anyon + s.anyon * c
        px = px + s.px * c
    py = None
    if all(s.py is not None for s in strings):
        py = strings[0].py * coeffs[0]
        for s, c in zip(strings[1:], coeffs[1:]):
            py = py + s.py * c
    return StringOperator(anyon=anyon, nx=nx, px=px, ny=ny, py=py)


# ---------------------------------------------------------------------------
# shared plumbing
# ---------------------------------------------------------------------------


def _norm_region(code, region):
    if region is None:
        region = DEFAULT_REGION
    rx, ry = code.range_xy
    if rx > region.kx or ry > region.ky:
        raise RegionTooSmall(
            "stabilizer support radius (%d, %d) exceeds region (%d, %d)"
            % (rx, ry, region.kx, region.ky)
        )
    m = region.m if region.m is not None else DEFAULT_REGION.m
    mp = region.mprime if region.mprime is not None else DEFAULT_REGION.mprime
    return region, m, mp


def _dagger(vec):
    return type(vec)(vec.d, [f.antipode() for f in vec.entries])


@lru_cache(maxsize=256)
def _local_vectors(code, kx, ky, mx, my=None):
    """Truncated rows from all shifts of the single-Pauli syndromes.

    The shift window is the rectangle |i| <= mx, |j| <= my (my defaults
    to mx)."""
    reg = Region(kx, ky)
    syns = [excitation_map(code, P) for P in single_paulis(code.d, code.w)]
    vecs = [s.shift(i, j) for s in syns for (i, j) in td_shifts(mx, my)]
    return CoeffMatrix.from_vectors(vecs, reg).entries


@lru_cache(maxsize=256)
def _local_echelon(code, kx, ky, mx, my=None):
    return mge(_local_vectors(code, kx, ky, mx, my), code.d)


@lru_cache(maxsize=256)
def _local_rank_field(code, kx, ky, mx, my=None):
    return ge_field(
        _local_vectors(code, kx, ky, mx, my), code.d, check=False, track=False
    ).rank


def _combo_pauli(code, coeffs, shifts):
    """Rebuild sum_s p_s * single_s from coefficients over shifted rows."""
    S = len(shifts)
    w, d = code.w, code.d
    entries = [LaurentPoly.zero(d) for _ in range(2 * w)]
    for idx, c in enumerate(coeffs[: 2 * w * S]):
        c = int(c)
        if not c:
            continue
        s, k = divmod(idx, S)
        i, j = shifts[k]
        entries[s] = entries[s] + LaurentPoly.monomial(d, i, j, c)
    return PauliVector(d, entries)


def _combo_syndrome(code, coeffs, shifts):
    S = len(shifts)
    d, t = code.d, code.t
    entries = [LaurentPoly.zero(d) for _ in range(t)]
    for idx, c in enumerate(coeffs[: t * S]):
        c = int(c)
        if not c:
            continue
        s, k = divmod(idx, S)
        i, j = shifts[k]
        entries[s] = entries[s] + LaurentPoly.monomial(d, i, j, c)
    return Syndrome(d, entries)


def _divisors(d):
    return [k for k in range(1, d + 1) if d % k == 0]


def _prime_factors(d):
    out = []
    q = 2
    while q * q <= d:
        if d % q == 0:
            out.append(q)
            while d % q == 0:
                d //= q
        q += 1
    if d > 1:
        out.append(d)
    return out


def _span_logsize(ech):
    """|span| of an echelon result as an exact integer (product over
    pivots of d / gcd(d, pivot value))."""
    size = 1
    for _, _, val in ech.pivots:
        size *= ech.d // math.gcd(ech.d, int(val))
    return size


def _pool_window(code, anyons, region):
    """Shift window (mqx, mqy) and region (kx, ky) sized so the span of
    local syndromes reaches every representative in the given list."""
    region, m, mp = _norm_region(code, region)
    rx, ry = code.range_xy
    vx = max([0] + [a.radius_xy()[0] for a in anyons])
    vy = max([0] + [a.radius_xy()[1] for a in anyons])
    mqx = m + vx
    mqy = m + vy
    kx = max(region.kx, mqx + rx)
    ky = max(region.ky, mqy + ry)
    return kx, ky, mqx, mqy


# ---------------------------------------------------------------------------
# topological-order condition
# ---------------------------------------------------------------------------


def check_to_condition(code, region=None):
    """True iff every local excitation-free operator on the window is
    generated by the stabilizers; witnesses carry the ones that are not."""
    region, m, mp = _norm_region(code, region)
    rx, ry = code.range_xy
    kx = max(region.kx, mp + rx)
    ky = max(region.ky, mp + ry)
    reg = Region(kx, ky)
    e1 = _local_echelon(code, kx, ky, m)
    ops = [_combo_pauli(code, rel, td_shifts(m)) for rel in e1.relations]
    gen_vecs = [
        _dagger(S).shift(i, j) for S in code.generators for (i, j) in td_shifts(mp)
    ]
    e2 = mge(CoeffMatrix.from_vectors(gen_vecs, reg), code.d)
    witnesses = []
    for op in ops:
        if op.is_zero():
            continue
        if span_check(e2, truncate_vector(_dagger(op), reg)) is None:
            witnesses.append(op)
    return (not witnesses, witnesses)


# ---------------------------------------------------------------------------
# string equation in the x-direction
# ---------------------------------------------------------------------------


def _string_matrix(code, n, region):
    """Rows of the step-n string-equation matrix with their reconstruction
    data.

    The single-Pauli syndromes shift over i in [-m, n+m] (a step-n string
    anchored near the origin spans about that many columns); the (1 - x^n)
    unit rows stay on the base window |i| <= m, so every solution's anyon
    lands there.  Returns (matrix, pauli shifts, unit shifts)."""
    region, m, mp = _norm_region(code, region)
    d, w, t = code.d, code.w, code.t
    rx, ry = code.range_xy
    kx = max(region.kx, n + m + max(rx, n))
    ky = max(region.ky, m + ry)
    reg = Region(kx, ky)
    p_shifts = [(i, j) for j in range(-m, m + 1) for i in range(-m, n + m + 1)]
    u_shifts = td_shifts(m)
    step = LaurentPoly(d, {(0, 0): 1, (n, 0): -1})
    syns = [excitation_map(code, P) for P in single_paulis(d, w)]
    units = [
        Syndrome(d, [step if i == s else LaurentPoly.zero(d) for s in range(t)])
        for i in range(t)
    ]
    vecs = [v.shift(i, j) for v in syns for (i, j) in p_shifts]
    vecs += [v.shift(i, j) for v in units for (i, j) in u_shifts]
    return CoeffMatrix.from_vectors(vecs, reg), p_shifts, u_shifts


def solve_anyon_equation(code, n, region=None):
    """All independent solutions (anyon, px) of eps(px) = (1 - x^n) anyon."""
    if n < 1:
        raise ValueError("step must be >= 1")
    mat, p_shifts, u_shifts = _string_matrix(code, n, region)
    d, w = code.d, code.w
    ech = mge(mat, d)
    out = []
    for rel in ech.relations:
        px = _combo_pauli(code, rel, p_shifts)
        q = _combo_syndrome(code, rel[2 * w * len(p_shifts) :], u_shifts)
        anyon = -q
        if anyon.is_zero():
            continue
        sol = StringOperator(anyon=anyon, nx=n, px=px)
        assert sol.verify(code), "string equation failed to close exactly"
        out.append(sol)
    return out


def _count_step(code, n, region):
    """Independent-class count for step n without recovering the string
    operators: track only the unit rows through the elimination, read the
    anyons off the surviving relations, and count them."""
    mat, p_shifts, u_shifts = _string_matrix(code, n, region)
    d, w = code.d, code.w
    first_unit = 2 * w * len(p_shifts)
    tracked = range(first_unit, mat.entries.shape[0])
    ech = mge(mat, d, check=False, track=tracked)
    anyons = []
    for rel in ech.relations:
        a = -_combo_syndrome(code, rel, u_shifts)
        if not a.is_zero():
            anyons.append(a)
    return _count_anyons(code, anyons, region)


def _count_anyons(code, anyons, region):
    """Minimal generator count of span(locals + anyons) / span(locals)
    over Z_d.

    For prime d that is a rank difference.  For composite d it falls out
    of span sizes: the quotient Q needs max_p dim_Fp(Q / pQ) generators,
    and Q/pQ has size |L + R| / |L + pR|, both Howell pivot products."""
    if not anyons:
        return 0
    d = code.d
    kx, ky, mqx, mqy = _pool_window(code, anyons, region)
    loc = _local_vectors(code, kx, ky, mqx, mqy)
    reg = Region(kx, ky)
    rows = np.array([truncate_vector(a, reg) for a in anyons], dtype=np.int64)
    if _is_probable_prime(d):
        r1 = ge_field(np.vstack([loc, rows]), d, check=False, track=False).rank
        return r1 - _local_rank_field(code, kx, ky, mqx, mqy)
    size_all = _span_logsize(mge(np.vstack([loc, rows]), d, check=False, track=False))
    best = 0
    for p in _prime_factors(d):
        sub = mge(np.vstack([loc, (p * rows) % d]), d, check=False, track=False)
        quot, rem = divmod(size_all, _span_logsize(sub))
        assert rem == 0
        e = 0
        while quot > 1:
            quot, rem = divmod(quot, p)
            assert rem == 0
            e += 1
        best = max(best, e)
    return best


def _count_independent(code, pool, region):
    """Independent-class count of an already-solved pool."""
    return _count_anyons(code, [s.anyon for s in pool], region)


def sweep_n(code, nmax=8, region=None):
    """Sweep the x-step 1..nmax; pick the smallest step with the most
    independent anyons.  Returns (chosen n, pool at n, per-n counts)."""
    if nmax < 1:
        raise ValueError("nmax must be >= 1")
    counts = [_count_step(code, n, region) for n in range(1, nmax + 1)]
    best = max(counts)
    chosen = counts.index(best) + 1
    return chosen, solve_anyon_equation(code, chosen, region), counts


# ---------------------------------------------------------------------------
# equivalence, basis, fusion
# ---------------------------------------------------------------------------


def anyon_equivalent(code, v, vp, region=None):
    """True iff v - vp is the excitation pattern of a window-local operator."""
    region, m, mp = _norm_region(code, region)
    diff = v - vp
    if diff.is_zero():
        return True
    rx, ry = code.range_xy
    dx, dy = diff.radius_xy()
    mqx = m + dx
    mqy = m + dy
    kx = max(region.kx, mqx + rx)
    ky = max(region.ky, mqy + ry)
    ech = _local_echelon(code, kx, ky, mqx, mqy)
    return span_check(ech, truncate_vector(diff, Region(kx, ky))) is not None


def basis_and_fusion(code, pool, region=None):
    """Greedy generating set with least-multiple relations, then Smith
    reduction.  Returns (basis classes, orders, relation matrix, R)."""
    region, m, mp = _norm_region(code, region)
    d = code.d
    seen = set()
    cands = []
    for s in pool:
        if s.anyon not in seen:
            seen.add(s.anyon)
            cands.append(s)
    # Pool representatives can sit anywhere in the solver's shift window,
    # so the span of local syndromes has to reach far enough to identify
    # translated copies of the same class.
    kx, ky, mqx, mqy = _pool_window(code, [s.anyon for s in cands], region)
    reg = Region(kx, ky)
    loc = _local_vectors(code, kx, ky, mqx, mqy)
    nloc = loc.shape[0]
    ech = _local_echelon(code, kx, ky, mqx, mqy)
    accepted = []
    rel_rows = []
    for s in cands:
        trows = truncate_vector(s.anyon, reg)
        for mu in _divisors(d):
            c = span_check(ech, (mu * trows) % d)
            if c is not None:
                break
        assert c is not None  # mu = d always spans: d*v == 0
        if mu == 1:
            continue
        orig = (c @ ech.relation) % d
        row = [-int(b) for b in orig[nloc:]] + [mu]
        rel_rows.append(row)
        accepted.append(s)
        mat = np.vstack(
            [loc] + [truncate_vector(a.anyon, reg).reshape(1, -1) for a in accepted]
        )
        ech = mge(mat, d)
    g = len(accepted)
    m_rel = np.zeros((g, g), dtype=np.int64)
    for i, row in enumerate(rel_rows):
        m_rel[i, : len(row)] = row
    if g == 0:
        return [], [], m_rel, np.zeros((0, 0), dtype=np.int64)
    _, a_diag, r_mat = snf(m_rel)
    r_mat = np.array(r_mat, dtype=object)
    basis = []
    orders = []
    for i in range(g):
        order = int(a_diag[i, i])
        assert order >= 1 and d % order == 0
        if order == 1:
            continue
        coeffs = [int(r_mat[i, j]) for j in range(g)]
        s = combine_strings(accepted, coeffs)
        basis.append(AnyonClass(anyon=s.anyon, order=order, string=s))
        orders.append(order)
    return basis, orders, m_rel, np.array(r_mat, dtype=np.int64)


# ---------------------------------------------------------------------------
# string equation in the -y-direction
# ---------------------------------------------------------------------------


def y_string(code, v, ny, region=None):
    """py with eps(py) = (1 - y^(-ny)) v, found through the tracked span of
    the local syndrome rows.  Raises ValueError when no solution fits."""
    if ny < 1:
        raise ValueError("step must be >= 1")
    region, m, mp = _norm_region(code, region)
    d = code.d
    rx, ry = code.range_xy
    vx, vy = v.radius_xy()
    # The anyon may sit anywhere in the x-window, so the operator search
    # window has to reach it, plus ny further down in y for the step.
    mx = max(m, vx)
    my = max(m, vy + ny)
    kx = max(region.kx, mx + rx)
    ky = max(region.ky, my + ry)
    ech = _local_echelon(code, kx, ky, mx, my)
    ystep = LaurentPoly(d, {(0, 0): 1, (0, -ny): -1})
    target = v.scale(ystep)
    c = span_check(ech, truncate_vector(target, Region(kx, ky)))
    if c is None:
        raise ValueError("no y-direction string with step %d in this region" % ny)
    orig = (c @ ech.relation) % d
    py = _combo_pauli(code, orig, td_shifts(mx, my))
    assert excitation_map(code, py) == target
    return py


# ---------------------------------------------------------------------------
# spins and braiding
# ---------------------------------------------------------------------------


def _comm(u, v):
    """Constant coefficient of the symplectic dot: Pauli commutation
    exponent of the two (in general non-local) operators."""
    d = u.d
    w = len(u.entries) // 2
    tot = 0
    for s in range(w):
        for mono, c in u.entries[s].terms.items():
            c2 = v.entries[w + s].terms.get(mono)
            if c2:
                tot += c * c2
        for mono, c in u.entries[w + s].terms.items():
            c2 = v.entries[s].terms.get(mono)
            if c2:
                tot -= c * c2
    return tot % d


def _stack(vec, da, db, js):
    out = vec * 0
    for j in js:
        out = out + vec.shift(da * j, db * j)
    return out


def _junction_ops(s, q):
    u1 = _stack(s.px, -s.nx, 0, range(1, q + 1))
    u2 = _stack(s.py, 0, -s.ny, range(0, q + 1))
    u3 = -_stack(s.px, s.nx, 0, range(0, q + 1))
    return u1, u2, u3


def _q_floor(code, strings):
    """Smallest arm count whose far segments already clear the segment
    footprints: below this, junction and endpoints can still overlap and
    the exponent sequence may show a spurious plateau."""
    rx, ry = code.range_xy
    need = 2
    for s in strings:
        wx, wy = s.px.radius_xy()
        if s.py is not None:
            qx, qy = s.py.radius_xy()
            wx = max(wx, qx)
            wy = max(wy, qy)
        if s.nx:
            need = max(need, -(-(2 * wx + rx + 2) // s.nx))
        if s.ny:
            need = max(need, -(-(2 * wy + ry + 2) // s.ny))
    return need


def topological_spin(code, s, q):
    """T-junction exponent e with theta = exp(2*pi*i*e/d) at arm length q."""
    if q < 2:
        raise ValueError("q must be >= 2")
    if s.py is None:
        raise ValueError("string operator lacks its y-direction part")
    u1, u2, u3 = _junction_ops(s, q)
    return (_comm(u1, u2) + _comm(u2, u3) + _comm(u3, u1)) % code.d


def _stabilize(fn, qstart=2, qmax=None):
    if qmax is None:
        qmax = qstart + 22
    prev = fn(qstart)
    for q in range(qstart + 1, qmax + 1):
        cur = fn(q)
        if cur == prev:
            return prev, q - 1
        prev = cur
    raise RuntimeError("T-junction exponent did not stabilize by q=%d" % qmax)


def stable_spin(code, s, qstart=2):
    q0 = max(qstart, _q_floor(code, [s]))
    return _stabilize(lambda q: topological_spin(code, s, q), q0)[0]


def braiding(code, a, b, q):
    """Full-braid exponent from theta(a x b) - theta(a) - theta(b)."""
    ab = combine_strings([a, b], [1, 1])
    return (
        topological_spin(code, ab, q)
        - topological_spin(code, a, q)
        - topological_spin(code, b, q)
    ) % code.d


def stable_braiding(code, a, b, qstart=2):
    q0 = max(qstart, _q_floor(code, [a, b]))
    return _stabilize(lambda q: braiding(code, a, b, q), q0)[0]


def braiding_direct(code, a, b, q):
    """Full-braid exponent accumulated directly from the six pairwise
    commutators of the two T-junction triples; must agree with braiding."""
    ua = _junction_ops(a, q)
    ub = _junction_ops(b, q)

    def z(i, j):
        return _comm(ua[i], ub[j])

    return (-z(2, 1) + z(0, 1) - z(1, 0) + z(2, 0) + z(1, 2) - z(0, 2)) % code.d


# ---------------------------------------------------------------------------
# e/m pairing for prime-order theories
# ---------------------------------------------------------------------------


def rearrange_em_pairs(theory, p, qstart=2):
    """Rearrange an all-order-p basis into decoupled boson pairs (b, c)
    with braiding exponent pattern of independent charge/flux pairs."""
    basis = theory.basis
    if not basis:
        return []
    if not _is_probable_prime(p):
        raise ValueError("p = %d is not prime" % p)
    if any(a.order != p for a in basis):
        raise ValueError("all basis anyons must have order %d" % p)
    code = theory.code
    d = code.d
    if d % p:
        raise ValueError("p must divide the qudit dimension")
    scale = d // p
    g = len(basis)
    cache = {}

    def cls_of(coords):
        coords = tuple(int(x) % p for x in coords)
        if coords not in cache:
            s = combine_strings([a.string for a in basis], list(coords))
            cache[coords] = AnyonClass(anyon=s.anyon, order=p, string=s)
        return cache[coords]

    tp_cache = {}

    def theta_p(coords):
        coords = tuple(int(x) % p for x in coords)
        if coords not in tp_cache:
            e = stable_spin(code, cls_of(coords).string, qstart)
            if e % scale:
                raise ValueError(
                    "spin exponent %d is not a multiple of %d; "
                    "theory does not decompose over p = %d" % (e, scale, p)
                )
            tp_cache[coords] = (e // scale) % p
        return tp_cache[coords]

    bp_cache = {}

    def b_p(c1, c2):
        c1 = tuple(int(x) % p for x in c1)
        c2 = tuple(int(x) % p for x in c2)
        key = (c1, c2)
        if key not in bp_cache:
            e = stable_braiding(code, cls_of(c1).string, cls_of(c2).string, qstart)
            if e % scale:
                raise ValueError("braiding exponent %d not a multiple of %d" % (e, scale))
            bp_cache[key] = (e // scale) % p
        return bp_cache[key]

    def add(u, v, k=1):
        return tuple((a + k * b) % p for a, b in zip(u, v))

    def candidates(current):
        seen = set()
        for lam_co in current:
            yield lam_co
        for i, j in itertools.combinations(range(len(current)), 2):
            co = add(current[i][1], current[j][1])
            lam = add(current[i][0], current[j][0])
            if co not in seen:
                seen.add(co)
                yield (lam, co)
        if p ** len(current) > 65536:
            return
        for ks in itertools.product(range(p), repeat=len(current)):
            if sum(ks) == 0:
                continue
            co = tuple(
                sum(k * v[1][idx] for k, v in zip(ks, current)) % p for idx in range(g)
            )
            if any(co) and co not in seen:
                seen.add(co)
                yield (ks, co)

    def extract(current):
        # current: list of (lam, coords); lam expresses coords over current
        if not current:
            return []
        found = None
        for lam, co in candidates(current):
            if theta_p(co) == 0 and any(b_p(co, v[1]) for v in current):
                found = (lam, co)
                break
        if found is None:
            raise ValueError("no nontrivial boson with nontrivial braiding found")
        lam, b = found
        pivot = next(i for i in range(len(current)) if lam[i] % p)
        rest = [current[i][1] for i in range(len(current)) if i != pivot]
        cidx = next((i for i, v in enumerate(rest) if b_p(b, v)), None)
        assert cidx is not None  # b braids with the span, so with some rest element
        k = b_p(b, rest[cidx])
        c = tuple((pow(k, -1, p) * x) % p for x in rest[cidx])
        c = add(c, b, (-theta_p(c)) % p)
        others = []
        for i, v in enumerate(rest):
            if i == cidx:
                continue
            v = add(v, c, (-b_p(b, v)) % p)
            v = add(v, b, (-b_p(c, v)) % p)
            others.append(v)
        unit = lambda i, n: tuple(1 if j == i else 0 for j in range(n))
        sub = [(unit(i, len(others)), v) for i, v in enumerate(others)]
        return [(b, c)] + extract(sub)

    start = [(tuple(1 if j == i else 0 for j in range(g)), tuple(1 if j == i else 0 for j in range(g))) for i in range(g)]
    pairs = extract(start)
    # honest block-form check on the final pairs
    flat = [co for pair in pairs for co in pair]
    for i, u in enumerate(flat):
        if theta_p(u) != 0:
            raise ValueError("pair member has nonzero spin after rearrangement")
        for j, v in enumerate(flat):
            want = 1 if (i // 2 == j // 2 and i != j) else 0
            if b_p(u, v) != want:
                raise ValueError("braiding table is not in decoupled pair form")
    return [(cls_of(b), cls_of(c)) for b, c in pairs]


# ---------------------------------------------------------------------------
# orchestration
# ---------------------------------------------------------------------------


def analyze(code, region=None, nmax=8, qstart=2, check=True):
    """Run the full pipeline and return an AnyonTheory."""
    region, m, mp = _norm_region(code, region)
    ok, witnesses = check_to_condition(code, region)
    theory = AnyonTheory(
        code=code, region=region, to_condition=ok, witnesses=witnesses
    )
    if not ok:
        return theory
    chosen, pool, counts = sweep_n(code, nmax, region)
    theory.chosen_n = chosen
    theory.counts = counts
    basis, orders, m_rel, r_mat = basis_and_fusion(code, pool, region)
    if not basis:
        return theory
    ny = None
    last_err = None
    for cand in range(1, max(nmax, 12) + 1):
        try:
            pys = [y_string(code, a.anyon, cand, region) for a in basis]
        except ValueError as e:
            last_err = e
            continue
        ny = cand
        break
    if ny is None:
        raise ValueError(
            "no common y-direction step up to %d: %s" % (max(nmax, 12), last_err)
        )
    full = []
    for a, py in zip(basis, pys):
        s = replace(a.string, ny=ny, py=py)
        full.append(AnyonClass(anyon=a.anyon, order=a.order, string=s))
    theory.basis = full
    theory.ny = ny
    theory.spins = [stable_spin(code, a.string, qstart) for a in full]
    g = len(full)
    mat = np.zeros((g, g), dtype=np.int64)
    for i in range(g):
        for j in range(i, g):
            q0 = max(qstart, _q_floor(code, [full[i].string, full[j].string]))
            e, qstar = _stabilize(
                lambda q: braiding(code, full[i].string, full[j].string, q), q0
            )
            mat[i, j] = mat[j, i] = e
            if check:
                for q in (qstar, qstar + 1):
                    direct = braiding_direct(code, full[i].string, full[j].string, q)
                    if direct != braiding(code, full[i].string, full[j].string, q):
                        raise RuntimeError(
                            "direct braid evaluation disagrees at pair (%d, %d)" % (i, j)
                        )
    theory.braiding = mat
    orders_set = set(theory.orders)
    if len(orders_set) == 1:
        p = orders_set.pop()
        if _is_probable_prime(p):
            try:
                theory.em_pairs = rearrange_em_pairs(theory, p, qstart)
            except ValueError as e:
                theory.em_error = str(e)
    return theory

"""Pauli operators as polynomial vectors and the excitation map.

A translation-invariant Pauli operator on a 2D lattice with w qudits per
unit cell is a length-2w column of Laurent polynomials: slots 0..w-1 hold
the X-block (powers of the shift operator per qudit), slots w..2w-1 the
Z-block.  Overall phases are dropped throughout, so operators equal up to
phase compare equal.

The symplectic dot product of u and v is antipode(u)^T . Lambda . v with
Lambda = [[0, I], [-I, 0]] on the (X, Z) blocks.  Two operators commute
iff the constant term of their dot product vanishes; a set of generators
defines a valid translation-invariant stabilizer group iff the ENTIRE dot
polynomial vanishes for every ordered pair (all translates of all
generators must commute, which is exactly the vanishing of every
coefficient).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .laurent import LaurentPoly, poly_format


class PolyVector:
    """Fixed-length tuple of LaurentPoly over one modulus, with linear ops."""

    __slots__ = ("d", "entries")

    def __init__(self, d, entries):
        entries = tuple(entries)
        for e in entries:
            if e.d != d:
                raise ValueError("entry modulus %d != vector modulus %d" % (e.d, d))
        object.__setattr__(self, "d", d)
        object.__setattr__(self, "entries", entries)

    def __setattr__(self, name, value):
        raise AttributeError("%s is immutable" % type(self).__name__)

    def __len__(self):
        return len(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    def __iter__(self):
        return iter(self.entries)

    def _make(self, entries):
        return type(self)(self.d, entries)

    def __add__(self, other):
        self._check(other)
        return self._make(a + b for a, b in zip(self.entries, other.entries))

    def __sub__(self, other):
        self._check(other)
        return self._make(a - b for a, b in zip(self.entries, other.entries))

    def __neg__(self):
        return self._make(-e for e in self.entries)

    def __mul__(self, k):
        if isinstance(k, int):
            return self._make(e * k for e in self.entries)
        return NotImplemented

    __rmul__ = __mul__

    def scale(self, poly):
        """Multiply every entry by a polynomial (e.g. a string extender)."""
        return self._make(poly * e for e in self.entries)

    def shift(self, a, b):
        """Translate by x^a y^b."""
        return self._make(e.shift(a, b) for e in self.entries)

    def is_zero(self):
        return all(e.is_zero() for e in self.entries)

    def radius(self):
        return max((e.radius() for e in self.entries), default=0)

    def radius_xy(self):
        rx = ry = 0
        for e in self.entries:
            ex, ey = e.radius_xy()
            rx = max(rx, ex)
            ry = max(ry, ey)
        return rx, ry

    def _check(self, other):
        if type(other) is not type(self) or other.d != self.d or len(other) != len(self):
            raise ValueError("incompatible vectors")

    def __eq__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return self.d == other.d and self.entries == other.entries

    def __hash__(self):
        return hash((type(self).__name__, self.d, self.entries))

    def __repr__(self):
        return "%s(%d, [%s])" % (
            type(self).__name__,
            self.d,
            ", ".join(poly_format(e) for e in self.entries),
        )


class PauliVector(PolyVector):
    """Length-2w column: X-block in slots 0..w-1, Z-block in w..2w-1."""

    def __init__(self, d, entries):
        entries = tuple(entries)
        if len(entries) % 2:
            raise ValueError("PauliVector needs an even number of slots")
        super().__init__(d, entries)

    @property
    def w(self):
        return len(self.entries) // 2

    @property
    def x_block(self):
        return self.entries[: self.w]

    @property
    def z_block(self):
        return self.entries[self.w:]

    @classmethod
    def unit_x(cls, d, w, i):
        """The single-site Pauli X on slot i (0-based)."""
        entries = [LaurentPoly.zero(d) for _ in range(2 * w)]
        entries[i] = LaurentPoly.one(d)
        return cls(d, entries)

    @classmethod
    def unit_z(cls, d, w, i):
        """The single-site Pauli Z on slot i (0-based)."""
        entries = [LaurentPoly.zero(d) for _ in range(2 * w)]
        entries[w + i] = LaurentPoly.one(d)
        return cls(d, entries)

    @classmethod
    def zero(cls, d, w):
        return cls(d, [LaurentPoly.zero(d)] * (2 * w))


class Syndrome(PolyVector):
    """Length-t row of polynomials: the violation pattern of an operator."""

    @property
    def t(self):
        return len(self.entries)

    @classmethod
    def zero(cls, d, t):
        return cls(d, [LaurentPoly.zero(d)] * t)


def single_paulis(d, w):
    """The 2w single-site generators, X_1..X_w then Z_1..Z_w."""
    xs = [PauliVector.unit_x(d, w, i) for i in range(w)]
    zs = [PauliVector.unit_z(d, w, i) for i in range(w)]
    return xs + zs


def symplectic_dot(v1, v2):
    """antipode(v1)^T Lambda v2; a Laurent polynomial over Z_d."""
    if not isinstance(v1, PauliVector) or not isinstance(v2, PauliVector):
        raise TypeError("symplectic_dot expects PauliVector operands")
    if v1.w != v2.w or v1.d != v2.d:
        raise ValueError("width or modulus mismatch")
    acc = LaurentPoly.zero(v1.d)
    for a, b in zip(v1.x_block, v2.z_block):
        if a and b:
            acc = acc + a.antipode() * b
    for a, b in zip(v1.z_block, v2.x_block):
        if a and b:
            acc = acc - a.antipode() * b
    return acc


def commutes(v1, v2):
    """True iff the constant term of the symplectic dot vanishes."""
    return symplectic_dot(v1, v2).constant_term() == 0


@dataclass(frozen=True)
class StabilizerCode:
    """A translation-invariant stabilizer code: d, w, and t generators."""

    d: int
    w: int
    generators: tuple
    name: str = "custom"

    def __post_init__(self):
        gens = tuple(self.generators)
        object.__setattr__(self, "generators", gens)
        for g in gens:
            if not isinstance(g, PauliVector):
                raise TypeError("generators must be PauliVector")
            if g.d != self.d or g.w != self.w:
                raise ValueError("generator does not match code d/w")
            if g.is_zero():
                raise ValueError("zero generator")

    @property
    def t(self):
        return len(self.generators)

    @property
    def range(self):
        """Max absolute exponent appearing in any generator."""
        return max(g.radius() for g in self.generators)

    @property
    def range_xy(self):
        rx = ry = 0
        for g in self.generators:
            gx, gy = g.radius_xy()
            rx = max(rx, gx)
            ry = max(ry, gy)
        return rx, ry


@dataclass
class ValidationReport:
    """Outcome of the full stabilizer-condition check."""

    ok: bool
    failures: list = field(default_factory=list)
    # each failure: (i, j, (a, b), coeff) -- generators i and j (0-based)
    # fail to commute; x^a y^b carries the nonzero dot coefficient.

    def __bool__(self):
        return self.ok

    def describe(self):
        if self.ok:
            return "all generator pairs commute (full polynomial check)"
        lines = []
        for i, j, (a, b), c in self.failures:
            lines.append(
                "S%d . S%d has nonzero coefficient %d on x^%d y^%d"
                % (i + 1, j + 1, c, a, b)
            )
        return "; ".join(lines)


def validate_code(code):
    """Check symplectic_dot(S_i, S_j) == 0 as polynomials, for ALL pairs.

    Includes i == j: a generator whose translates fail to commute with
    itself is just as invalid as a non-commuting pair.  The report lists
    every offending pair with one witnessing monomial each.
    """
    failures = []
    for i in range(code.t):
        for j in range(i, code.t):
            dot = symplectic_dot(code.generators[i], code.generators[j])
            if not dot.is_zero():
                (a, b), c = min(dot.terms.items())
                failures.append((i, j, (a, b), c))
    return ValidationReport(ok=not failures, failures=failures)


def excitation_map(code, P):
    """Syndrome of P: entry i is symplectic_dot(S_i, P).

    Linear over Z_d and commutes with translation:
    excitation_map(x^a y^b P) == x^a y^b excitation_map(P).
    """
    if P.w != code.w or P.d != code.d:
        raise ValueError("operator does not match code")
    return Syndrome(code.d, (symplectic_dot(S, P) for S in code.generators))

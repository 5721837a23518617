"""Sparse bivariate Laurent polynomials with coefficients in Z_d.

The ring is R = Z_d[x, y, x^-1, y^-1].  A polynomial is stored as a map
from exponent pairs (a, b) to nonzero coefficients in [1, d).  Values are
immutable by convention: every operation returns a fresh polynomial.

Coefficients are canonicalized into [0, d) on construction, and zero
coefficients are never stored, so structural equality is semantic
equality.
"""

from __future__ import annotations

import re


class LaurentPoly:
    """A Laurent polynomial in x, y over Z_d."""

    __slots__ = ("d", "terms")

    def __init__(self, d, terms=None):
        if d < 2:
            raise ValueError("modulus must be >= 2, got %r" % (d,))
        clean = {}
        if terms:
            for (a, b), c in terms.items():
                c = c % d
                if c:
                    clean[(int(a), int(b))] = c
        object.__setattr__(self, "d", int(d))
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("LaurentPoly is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, d):
        return cls(d, {})

    @classmethod
    def one(cls, d):
        return cls(d, {(0, 0): 1})

    @classmethod
    def monomial(cls, d, a, b, coeff=1):
        return cls(d, {(a, b): coeff})

    # -- ring operations ---------------------------------------------------

    def __add__(self, other):
        self._check(other)
        terms = dict(self.terms)
        for ab, c in other.terms.items():
            terms[ab] = terms.get(ab, 0) + c
        return LaurentPoly(self.d, terms)

    def __sub__(self, other):
        self._check(other)
        terms = dict(self.terms)
        for ab, c in other.terms.items():
            terms[ab] = terms.get(ab, 0) - c
        return LaurentPoly(self.d, terms)

    def __neg__(self):
        return LaurentPoly(self.d, {ab: -c for ab, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, int):
            return LaurentPoly(self.d, {ab: c * other for ab, c in self.terms.items()})
        self._check(other)
        terms = {}
        for (a1, b1), c1 in self.terms.items():
            for (a2, b2), c2 in other.terms.items():
                ab = (a1 + a2, b1 + b2)
                terms[ab] = terms.get(ab, 0) + c1 * c2
        return LaurentPoly(self.d, terms)

    def __rmul__(self, other):
        if isinstance(other, int):
            return self.__mul__(other)
        return NotImplemented

    def shift(self, a, b):
        """Multiply by the monomial x^a y^b (translation fast path)."""
        if not self.terms:
            return self
        return LaurentPoly(
            self.d, {(a0 + a, b0 + b): c for (a0, b0), c in self.terms.items()}
        )

    def antipode(self):
        """x^a y^b -> x^-a y^-b, termwise.  An involution."""
        return LaurentPoly(self.d, {(-a, -b): c for (a, b), c in self.terms.items()})

    # -- queries -----------------------------------------------------------

    def coeff(self, a, b):
        return self.terms.get((a, b), 0)

    def constant_term(self):
        return self.terms.get((0, 0), 0)

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def support(self):
        """Set of exponent pairs carrying nonzero coefficients."""
        return set(self.terms)

    def radius(self):
        """Max of |a|, |b| over the support (0 for the zero polynomial)."""
        r = 0
        for a, b in self.terms:
            r = max(r, abs(a), abs(b))
        return r

    def radius_xy(self):
        """(max |a|, max |b|) over the support."""
        rx = ry = 0
        for a, b in self.terms:
            rx = max(rx, abs(a))
            ry = max(ry, abs(b))
        return rx, ry

    def subs_one(self):
        """Sum of coefficients mod d (the evaluation x = y = 1)."""
        return sum(self.terms.values()) % self.d

    # -- plumbing ----------------------------------------------------------

    def _check(self, other):
        if not isinstance(other, LaurentPoly):
            raise TypeError("expected LaurentPoly, got %r" % type(other))
        if other.d != self.d:
            raise ValueError("modulus mismatch: %d vs %d" % (self.d, other.d))

    def __eq__(self, other):
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.d == other.d and self.terms == other.terms

    def __hash__(self):
        return hash((self.d, frozenset(self.terms.items())))

    def __repr__(self):
        return "LaurentPoly(%d, %s)" % (self.d, poly_format(self))


class PolyParseError(ValueError):
    """Syntax error in polynomial text; carries the offending position."""

    def __init__(self, message, text, pos):
        super().__init__("%s (at position %d in %r)" % (message, pos, text))
        self.pos = pos
        self.text = text


# One additive term: optional integer coefficient, then optional x and y
# factors with optional signed integer exponents; '*' separators optional.
_TERM_RE = re.compile(
    r"""^
    (?P<coeff>\d+)?
    (?:\*?(?P<xvar>x)(?:\^(?P<xexp>[+-]?\d+))?)?
    (?:\*?(?P<yvar>y)(?:\^(?P<yexp>[+-]?\d+))?)?
    $""",
    re.VERBOSE,
)


def poly_parse(text, d):
    """Parse polynomial text such as '1 - x^-1' or '2 + 2y' into Z_d.

    Grammar: terms separated by '+'/'-'; a term is [coeff][*]x^e1[*]y^e2
    with every part optional but at least one present; exponents are signed
    decimal integers; whitespace is insignificant; '0' is the zero
    polynomial.  Negative coefficients normalize mod d.
    """
    compact = []
    positions = []  # map compact index -> original index, for error messages
    for i, ch in enumerate(text):
        if not ch.isspace():
            compact.append(ch)
            positions.append(i)
    if not compact:
        raise PolyParseError("empty polynomial", text, 0)
    s = "".join(compact)

    terms = {}
    i = 0
    n = len(s)
    while i < n:
        sign = 1
        if s[i] in "+-":
            if s[i] == "-":
                sign = -1
            i += 1
            if i >= n:
                raise PolyParseError("dangling operator", text, positions[i - 1])
        elif i > 0:
            raise PolyParseError("expected '+' or '-'", text, positions[i])
        j = i
        while j < n and s[j] not in "+-":
            # '^-' and '^+' glue a sign to an exponent rather than splitting
            if s[j] == "^" and j + 1 < n and s[j + 1] in "+-":
                j += 2
            else:
                j += 1
        chunk = s[i:j]
        m = _TERM_RE.match(chunk)
        if not m or (m.group("coeff") is None and not m.group("xvar") and not m.group("yvar")):
            raise PolyParseError("malformed term %r" % chunk, text, positions[i])
        coeff = int(m.group("coeff")) if m.group("coeff") is not None else 1
        a = 0
        if m.group("xvar"):
            a = int(m.group("xexp")) if m.group("xexp") is not None else 1
        b = 0
        if m.group("yvar"):
            b = int(m.group("yexp")) if m.group("yexp") is not None else 1
        terms[(a, b)] = terms.get((a, b), 0) + sign * coeff
        i = j
    return LaurentPoly(d, terms)


def antipode(f):
    """Module-level spelling of LaurentPoly.antipode: x^a y^b -> x^-a y^-b."""
    return f.antipode()


def _format_term(a, b, c):
    parts = []
    if a:
        parts.append("x" if a == 1 else "x^%d" % a)
    if b:
        parts.append("y" if b == 1 else "y^%d" % b)
    if not parts:
        return str(c)
    body = "*".join(parts)
    return body if c == 1 else "%d%s" % (c, body)


def poly_format(p):
    """Deterministic textual form; parses back to an equal polynomial."""
    if not p.terms:
        return "0"
    keys = sorted(p.terms, key=lambda ab: (ab[1], ab[0]))
    return " + ".join(_format_term(a, b, p.terms[(a, b)]) for a, b in keys)

"""Built-in example codes and the code-file format.

Each builtin is stored as a CodeDescriptor holding its generator
polynomials as text; construction parses them and validates the
stabilizer condition.  Parameterized names like "toric(3)" select the
qudit dimension (or the shift for the shifted double semion).

Code files are line-oriented UTF-8:

    d = 4
    qudits = 2
    stabilizer S1:
      X0: -1 + x^-1
      X1: -1 + y^-1
      Z0: 1 - y
      Z1: -1 + x

``X<i>``/``Z<i>`` name slot i (0-based) of the X/Z block; omitted slots
are zero; blank lines and '#' comments are ignored.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .laurent import PolyParseError, poly_format, poly_parse
from .symplectic import PauliVector, StabilizerCode, validate_code


@dataclass(frozen=True)
class CodeDescriptor:
    """A code given by name, dimensions, and generator polynomial text."""

    name: str
    d: int
    w: int
    generators: tuple  # tuple of 2w-tuples of polynomial strings
    note: str = ""

    @property
    def t(self):
        return len(self.generators)

    def build(self):
        gens = tuple(
            PauliVector(self.d, [poly_parse(s, self.d) for s in row])
            for row in self.generators
        )
        code = StabilizerCode(d=self.d, w=self.w, generators=gens, name=self.name)
        report = validate_code(code)
        if not report.ok:
            raise ValueError(
                "builtin %r fails the stabilizer condition: %s"
                % (self.name, report.describe())
            )
        return code


def _desc(name, d, w, gens, note=""):
    return CodeDescriptor(name=name, d=d, w=w, generators=tuple(map(tuple, gens)), note=note)


def _trivial(d=2):
    return _desc(
        "trivial",
        d,
        2,
        [["1", "0", "0", "0"], ["0", "1", "0", "0"]],
        note="product state: a bare X on each qudit of the unit cell",
    )


def _toric(d=2):
    return _desc(
        "toric",
        d,
        2,
        [
            ["1 - x^-1", "1 - y^-1", "0", "0"],
            ["0", "0", "1 - y", "-1 + x"],
        ],
        note="edge qudits on the square lattice: vertex and plaquette terms",
    )


def _toric2(d=2):
    return _desc(
        "toric2",
        d,
        2,
        [
            ["1 - x^-2", "1 - y^-1", "0", "0"],
            ["0", "0", "1 - y", "-1 + x^2"],
        ],
        note="toric code with the horizontal period doubled",
    )


def _shifted_double_semion(l=1):
    s1z0 = poly_format(poly_parse("1 - y", 4).shift(l, 0))
    s1z1 = poly_format(poly_parse("-1 + x", 4).shift(l, 0))
    s3x0 = poly_format(poly_parse("2", 4).shift(l, 0))
    s4x1 = poly_format(poly_parse("2", 4).shift(l, 0))
    name = "double_semion" if l == 0 else "shifted_double_semion"
    return _desc(
        name,
        4,
        2,
        [
            ["x^-1 - 1", "y^-1 - 1", s1z0, s1z1],
            ["0", "0", "2 + 2y", "2 + 2x"],
            [s3x0, "0", "0", "2y^-1"],
            ["0", s4x1, "2x^-1", "0"],
        ],
        note="double semion on edge qudits, second condensate shifted %d cells in x" % l,
    )


def _double_semion():
    d = _shifted_double_semion(0)
    return _desc(
        "double_semion",
        d.d,
        d.w,
        d.generators,
        note="doubled-Z_2 edge code condensing the paired charge-flux composite",
    )


def _self_dual_css(name, f_text, note):
    f = poly_parse(f_text, 2)
    fbar = poly_format(f.antipode())
    return _desc(
        name,
        2,
        2,
        [
            [f_text, fbar, "0", "0"],
            ["0", "0", f_text, fbar],
        ],
        note=note,
    )


def _color():
    return _self_dual_css(
        "color",
        "1 + x^-1 + y",
        "self-dual CSS qubit code, two sites per cell (hexagonal layout)",
    )


def _color_bad():
    return _self_dual_css(
        "color_bad",
        "1 + x^-1 + y + x^-1*y^-1",
        "four-term self-dual CSS code with an extensive unremovable degeneracy",
    )


def _modified_a():
    return _self_dual_css(
        "modified_a",
        "1 + x^-1 + y + x^-1*y^-1 + x*y",
        "five-term self-dual CSS code",
    )


def _modified_b():
    return _self_dual_css(
        "modified_b",
        "1 + x^-1 + y + x^-1*y^-1 + x*y + x^-1*y",
        "six-term self-dual CSS code",
    )


def _modified_c():
    return _self_dual_css(
        "modified_c",
        "1 + x^-1 + y + y^2",
        "four-term self-dual CSS code with a vertical second-neighbor term",
    )


def _modified_d():
    return _self_dual_css(
        "modified_d",
        "1 + x^-1 + y + x*y^3",
        "four-term self-dual CSS code with a long diagonal term",
    )


def _css_double_semion():
    ds = _double_semion()
    zero = ("0",) * 4
    xtype = []
    ztype = []
    for row in ds.generators:
        f1, f2, g1, g2 = row
        xtype.append((f1, f2, g1, g2) + zero)
        neg = tuple(poly_format(-poly_parse(s, 4)) for s in (f1, f2))
        ztype.append(zero + (g1, g2) + neg)
    return _desc(
        "css_double_semion",
        4,
        4,
        xtype + ztype,
        note="CSS doubling of the double semion onto two copies of the cell",
    )


def _six_semion():
    # Two Z_4 toric-code layers (qudits 1,2 and 3,4).  The last four
    # generators are short segments of the string operators for the bosons
    # e1^2 m1^2 and e1^2 e2^2 m2^2; condensing them leaves sixteen anyons:
    # four bosons, six semions, six anti-semions.  The first four are the
    # layer stabilizers that still commute with the segments: A1*B1*B2,
    # A2*B2, B1^2 and B2^2.
    return _desc(
        "six_semion",
        4,
        4,
        [
            ["1 - x", "1 - y^-1", "0", "0", "1 - y", "-1 + x^-1", "1 - y", "-1 + x^-1"],
            ["0", "0", "1 - x", "1 - y^-1", "0", "0", "1 - y", "-1 + x^-1"],
            ["0", "0", "0", "0", "2 + 2y", "2 + 2x^-1", "0", "0"],
            ["0", "0", "0", "0", "0", "0", "2 + 2y", "2 + 2x^-1"],
            ["2", "0", "0", "0", "0", "2y^-1", "0", "0"],
            ["0", "2", "0", "0", "2x", "0", "0", "0"],
            ["0", "0", "2", "0", "0", "2y^-1", "0", "2y^-1"],
            ["0", "0", "0", "2", "2x", "0", "2x", "0"],
        ],
        note="two-layer Z_4 code condensing doubled charge-flux composites across layers",
    )


_REGISTRY = {
    "trivial": (_trivial, "d"),
    "toric": (_toric, "d"),
    "toric2": (_toric2, "d"),
    "double_semion": (_double_semion, None),
    "shifted_double_semion": (_shifted_double_semion, "l"),
    "color": (_color, None),
    "color_bad": (_color_bad, None),
    "modified_a": (_modified_a, None),
    "modified_b": (_modified_b, None),
    "modified_c": (_modified_c, None),
    "modified_d": (_modified_d, None),
    "css_double_semion": (_css_double_semion, None),
    "six_semion": (_six_semion, None),
}

_NAME_RE = re.compile(r"^\s*([A-Za-z_][A-Za-z_0-9]*)\s*(?:\(\s*(-?\d+)\s*\))?\s*$")


def builtin_names():
    return sorted(_REGISTRY)


def builtin_descriptor(name, **overrides):
    m = _NAME_RE.match(name)
    if not m:
        raise ValueError("malformed code name %r" % name)
    base, arg = m.group(1), m.group(2)
    if base not in _REGISTRY:
        raise ValueError(
            "unknown code %r; available: %s" % (base, ", ".join(builtin_names()))
        )
    factory, param = _REGISTRY[base]
    kwargs = {}
    if arg is not None:
        if param is None:
            raise ValueError("code %r takes no parameter" % base)
        kwargs[param] = int(arg)
    for key, val in overrides.items():
        if val is None:
            continue
        if param != key:
            raise ValueError("code %r takes no parameter %r" % (base, key))
        kwargs[key] = int(val)
    return factory(**kwargs)


def builtin(name, **overrides):
    """Construct a built-in code; name may carry a parameter, e.g. 'toric(3)'."""
    return builtin_descriptor(name, **overrides).build()


# ---------------------------------------------------------------------------
# code files
# ---------------------------------------------------------------------------


class CodeFileError(ValueError):
    """Problem with a code file; carries the 1-based line number if known."""

    def __init__(self, message, line=None):
        if line is not None:
            message = "line %d: %s" % (line, message)
        super().__init__(message)
        self.line = line


_KV_RE = re.compile(r"^(\w+)\s*=\s*(-?\d+)$")
_STAB_RE = re.compile(r"^stabilizer\s+(\S+)\s*:$")
_ENTRY_RE = re.compile(r"^([XZ])(\d+)\s*:\s*(.+)$")


def parse_code_file(text):
    """Parse the line-oriented code format into a validated StabilizerCode."""
    d = None
    w = None
    stabs = []  # (label, line, {(block, slot): (poly, line)})
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        kv = _KV_RE.match(line)
        if kv:
            key, val = kv.group(1), int(kv.group(2))
            if key == "d":
                if val < 2:
                    raise CodeFileError("d must be >= 2, got %d" % val, lineno)
                d = val
            elif key == "qudits":
                if val < 1:
                    raise CodeFileError("qudits must be >= 1, got %d" % val, lineno)
                w = val
            else:
                raise CodeFileError("unknown setting %r" % key, lineno)
            continue
        st = _STAB_RE.match(line)
        if st:
            stabs.append((st.group(1), lineno, {}))
            continue
        en = _ENTRY_RE.match(line)
        if en:
            if not stabs:
                raise CodeFileError("entry before any 'stabilizer' header", lineno)
            if d is None or w is None:
                raise CodeFileError("d and qudits must be set before entries", lineno)
            block, slot = en.group(1), int(en.group(2))
            if slot >= w:
                raise CodeFileError(
                    "slot %d out of range for qudits = %d" % (slot, w), lineno
                )
            key = (block, slot)
            if key in stabs[-1][2]:
                raise CodeFileError("duplicate entry %s%d" % (block, slot), lineno)
            try:
                poly = poly_parse(en.group(3), d)
            except PolyParseError as e:
                raise CodeFileError(str(e), lineno) from e
            stabs[-1][2][key] = poly
            continue
        raise CodeFileError("unrecognized line %r" % raw.strip(), lineno)

    if d is None or w is None:
        raise CodeFileError("missing 'd =' or 'qudits =' setting")
    if not stabs:
        raise CodeFileError("no stabilizer blocks")

    from .laurent import LaurentPoly

    gens = []
    labels = []
    for label, lineno, entries in stabs:
        if not entries:
            raise CodeFileError("stabilizer %s has no entries" % label, lineno)
        row = [LaurentPoly.zero(d) for _ in range(2 * w)]
        for (block, slot), poly in entries.items():
            row[slot if block == "X" else w + slot] = poly
        gens.append(PauliVector(d, row))
        labels.append(label)

    code = StabilizerCode(d=d, w=w, generators=tuple(gens), name="file")
    report = validate_code(code)
    if not report.ok:
        i, j, (a, b), c = report.failures[0]
        raise CodeFileError(
            "generators %s and %s fail to commute: dot has coefficient %d on x^%d y^%d"
            % (labels[i], labels[j], c, a, b)
        )
    return code


def format_code(code):
    """Render a StabilizerCode in the code-file format (round-trips)."""
    lines = ["d = %d" % code.d, "qudits = %d" % code.w]
    for i, g in enumerate(code.generators, start=1):
        lines.append("stabilizer S%d:" % i)
        for slot in range(code.w):
            if g.entries[slot]:
                lines.append("  X%d: %s" % (slot, poly_format(g.entries[slot])))
        for slot in range(code.w):
            if g.entries[code.w + slot]:
                lines.append("  Z%d: %s" % (slot, poly_format(g.entries[code.w + slot])))
    return "\n".join(lines) + "\n"

import pytest

from stabtopo.codelib import (
    CodeFileError,
    builtin,
    builtin_descriptor,
    builtin_names,
    format_code,
    parse_code_file,
)
from stabtopo.laurent import poly_parse
from stabtopo.symplectic import validate_code

ALL_NAMES = [
    "trivial",
    "toric",
    "toric2",
    "double_semion",
    "shifted_double_semion",
    "color",
    "color_bad",
    "modified_a",
    "modified_b",
    "modified_c",
    "modified_d",
    "css_double_semion",
    "six_semion",
]


def test_registry_contents():
    assert builtin_names() == sorted(ALL_NAMES)


@pytest.mark.parametrize("name", ALL_NAMES)
def test_every_builtin_validates(name):
    code = builtin(name)
    assert validate_code(code).ok


@pytest.mark.parametrize(
    "name", ALL_NAMES + ["toric(3)", "toric2(3)", "trivial(5)", "shifted_double_semion(2)"]
)
def test_every_builtin_round_trips(name):
    code = builtin(name)
    back = parse_code_file(format_code(code))
    assert back.d == code.d
    assert back.w == code.w
    assert back.generators == code.generators


def test_toric_generators():
    code = builtin("toric")
    assert code.d == 2 and code.w == 2 and code.t == 2
    s1 = code.generators[0]
    assert s1.x_block == (poly_parse("1 - x^-1", 2), poly_parse("1 - y^-1", 2))
    assert all(p.is_zero() for p in s1.z_block)
    s2 = code.generators[1]
    assert all(p.is_zero() for p in s2.x_block)
    assert s2.z_block == (poly_parse("1 - y", 2), poly_parse("-1 + x", 2))


def test_double_semion_third_generator():
    code = builtin("double_semion")
    assert code.d == 4 and code.t == 4
    s3 = code.generators[2]
    assert s3.x_block == (poly_parse("2", 4), poly_parse("0", 4))
    assert s3.z_block == (poly_parse("0", 4), poly_parse("2*y^-1", 4))


def test_shifted_double_semion_at_zero_matches_plain():
    assert builtin("shifted_double_semion(0)").generators == builtin("double_semion").generators


def test_shifted_double_semion_default_shift():
    code = builtin("shifted_double_semion")
    s3 = code.generators[2]
    assert s3.x_block[0] == poly_parse("2x", 4)
    s1 = code.generators[0]
    assert s1.z_block == (poly_parse("x - x*y", 4), poly_parse("-x + x^2", 4))


def test_parameter_handling():
    assert builtin("toric(3)").d == 3
    assert builtin("toric", d=5).d == 5
    assert builtin("toric(3)", d=5).d == 5  # explicit override wins
    assert builtin("toric", d=None).d == 2
    assert builtin("css_double_semion").w == 4
    with pytest.raises(ValueError, match="takes no parameter"):
        builtin("color(3)")
    with pytest.raises(ValueError, match="takes no parameter"):
        builtin("double_semion", d=3)


def test_unknown_name():
    with pytest.raises(ValueError, match="unknown code"):
        builtin("torid")
    with pytest.raises(ValueError, match="available"):
        builtin("nope")
    with pytest.raises(ValueError, match="malformed"):
        builtin("toric(2")


def test_css_double_semion_block_structure():
    code = builtin("css_double_semion")
    ds = builtin("double_semion")
    for j in range(4):
        f1, f2, g1, g2 = ds.generators[j].entries
        xt = code.generators[j]
        assert xt.x_block == (f1, f2, g1, g2)
        assert all(p.is_zero() for p in xt.z_block)
        zt = code.generators[4 + j]
        assert all(p.is_zero() for p in zt.x_block)
        assert zt.z_block == (g1, g2, -f1, -f2)


def test_descriptor_metadata():
    desc = builtin_descriptor("six_semion")
    assert desc.d == 4 and desc.w == 4 and desc.t == 8
    assert desc.note
    assert builtin_descriptor("toric(7)").d == 7


EXAMPLE_FILE = """\
d = 4
qudits = 2
stabilizer S1:
  X0: -1 + x^-1
  X1: -1 + y^-1
  Z0: 1 - y
  Z1: -1 + x
stabilizer S2:
  Z0: 2 + 2y
  Z1: 2 + 2x
"""


def test_parse_example_file():
    code = parse_code_file(EXAMPLE_FILE)
    assert code.d == 4 and code.w == 2 and code.t == 2
    ds = builtin("double_semion")
    assert code.generators == ds.generators[:2]


def test_parse_accepts_comments_and_blanks():
    text = "# a comment\n\nd = 2\nqudits = 1  # trailing\n\nstabilizer A:\n  X0: 1\n"
    code = parse_code_file(text)
    assert code.d == 2 and code.w == 1 and code.t == 1


def test_parse_commutation_failure_names_pair_and_monomial():
    bad = """\
d = 3
qudits = 2
stabilizer S1:
  X0: 1 - x^-1
  X1: 1 - y^-1
stabilizer S2:
  Z0: 1 + y
  Z1: -1 + x
"""
    with pytest.raises(CodeFileError) as exc:
        parse_code_file(bad)
    msg = str(exc.value)
    assert "S1" in msg and "S2" in msg
    assert "x^" in msg and "y^" in msg


def test_parse_error_line_numbers():
    with pytest.raises(CodeFileError, match="line 3"):
        parse_code_file("d = 2\nqudits = 1\nstabilizer S1\n  X0: 1\n")
    with pytest.raises(CodeFileError, match="line 4"):
        parse_code_file("d = 2\nqudits = 1\nstabilizer S1:\n  X0: 1 +\n")
    with pytest.raises(CodeFileError, match="slot 5"):
        parse_code_file("d = 2\nqudits = 2\nstabilizer S1:\n  X5: 1\n")
    with pytest.raises(CodeFileError, match="duplicate"):
        parse_code_file("d = 2\nqudits = 1\nstabilizer S1:\n  X0: 1\n  X0: x\n")
    with pytest.raises(CodeFileError, match="before any"):
        parse_code_file("d = 2\nqudits = 1\nX0: 1\n")
    with pytest.raises(CodeFileError, match="must be set before"):
        parse_code_file("stabilizer S1:\n  X0: 1\nd = 2\nqudits = 1\n")
    with pytest.raises(CodeFileError, match="missing"):
        parse_code_file("# nothing\n")
    with pytest.raises(CodeFileError, match="no stabilizer"):
        parse_code_file("d = 2\nqudits = 1\n")
    with pytest.raises(CodeFileError, match="no entries"):
        parse_code_file("d = 2\nqudits = 1\nstabilizer S1:\nstabilizer S2:\n  X0: 1\n")
    with pytest.raises(CodeFileError, match="unknown setting"):
        parse_code_file("q = 2\n")
    with pytest.raises(CodeFileError, match="d must be"):
        parse_code_file("d = 1\nqudits = 1\nstabilizer S1:\n  X0: 1\n")


def test_format_omits_zero_slots():
    text = format_code(builtin("toric"))
    assert "Z0" not in text.split("stabilizer S1:")[1].split("stabilizer S2:")[0]
    assert text.startswith("d = 2\nqudits = 2\n")

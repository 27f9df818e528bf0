import pytest

from regdim.corpus import named_examples
from regdim.exceptions import IdealParseError, InputError
from regdim.ideal_format import format_ideal, parse_ideal_file, parse_ideal_text


def test_both_monomial_forms():
    text = """
    # edge ideal with a square
    n = 3
    [1,1,0]
    x2*x3   # trailing comment
    x1^2
    """
    ideal = parse_ideal_text(text)
    assert ideal.n == 3
    assert ideal.gens == ((0, 1, 1), (1, 1, 0), (2, 0, 0))


def test_repeated_factors_and_unit():
    assert parse_ideal_text("n = 2\nx1*x1*x2\n").gens == ((2, 1),)
    assert parse_ideal_text("n = 2\n1\n").is_unit
    assert parse_ideal_text("n = 1\n[0]\n").is_unit


def test_header_only_is_zero_ideal():
    ideal = parse_ideal_text("n = 4\n")
    assert ideal.is_zero
    assert ideal.n == 4


def test_non_minimal_input_is_minimalized():
    assert parse_ideal_text("n = 1\nx1^3\nx1^2\n").gens == ((2,),)


@pytest.mark.parametrize("text, line, fragment", [
    ("x1\nn = 1\n", 1, "header"),
    ("# nothing\n\n", 2, "missing"),
    ("n = 2\nx1\ny2\n", 3, "cannot parse"),
    ("n = 2\n[1,0,0]\n", 2, "entries"),
    ("n = 3\nx4^2\n", 2, "outside"),
    ("n = 2\n[-1,0]\n", 2, "nonnegative"),
    ("n = 2\nn = 3\n", 2, "twice"),
    ("n = 0\n", 1, "at least 1"),
])
def test_parse_errors_carry_the_line(text, line, fragment):
    with pytest.raises(IdealParseError) as excinfo:
        parse_ideal_text(text)
    assert excinfo.value.line == line
    assert fragment in str(excinfo.value)
    assert str(excinfo.value).startswith(f"line {line}:")


def test_format_reparses_to_the_same_ideal():
    for ideal in named_examples():
        assert parse_ideal_text(format_ideal(ideal, comment="example")) == ideal


def test_parse_file(tmp_path):
    path = tmp_path / "ideal.txt"
    path.write_text("n = 2\nx1*x2\n")
    assert parse_ideal_file(path).gens == ((1, 1),)
    with pytest.raises(InputError):
        parse_ideal_file(tmp_path / "missing.txt")

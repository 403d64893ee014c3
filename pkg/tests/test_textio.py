import pytest

from ybe_garside.presentation import solution_to_presentation
from ybe_garside.solution import AxiomError
from ybe_garside.textio import (
    FormatError,
    format_presentation,
    format_solution,
    format_word,
    parse_presentation,
    parse_solution,
    parse_word,
)

FIVEGEN_TEXT = """\
# five generators, two commuting 4-cycles and an identity
n 5
g 1 2 3 4 1 5
g 2 4 1 2 3 5
g 3 2 3 4 1 5
g 4 4 1 2 3 5
g 5 1 2 3 4 5
f 1 2 3 4 1 5
f 2 4 1 2 3 5
f 3 2 3 4 1 5
f 4 4 1 2 3 5
f 5 1 2 3 4 5
"""


def test_parse_solution_round_trip(fivegen):
    sol = parse_solution(FIVEGEN_TEXT)
    assert sol == fivegen
    assert parse_solution(format_solution(sol)) == sol


def test_parse_solution_f_derived(fivegen):
    text = "n 5\n" + "\n".join(
        "g %d %s" % (i + 1, " ".join(str(v + 1) for v in row))
        for i, row in enumerate(fivegen.g)
    ) + "\nf derived\n"
    assert parse_solution(text) == fivegen


def test_parse_solution_comments_and_order():
    text = "# header\nn 2\nf 2 1 2\ng 2 2 1\n# middle\ng 1 2 1\nf 1 1 2\n"
    sol = parse_solution(text)
    assert sol.g == ((1, 0), (1, 0))
    assert sol.f == ((0, 1), (0, 1))


def test_parse_solution_errors_carry_line_numbers():
    with pytest.raises(FormatError) as err:
        parse_solution("n 2\ng 1 2 1\nbogus\n")
    assert err.value.line == 3
    with pytest.raises(FormatError) as err:
        parse_solution("m 2\n")
    assert err.value.line == 1
    with pytest.raises(FormatError):
        parse_solution("")


def test_parse_solution_field_count():
    with pytest.raises(FormatError):
        parse_solution("n 2\ng 1 2\n")
    with pytest.raises(FormatError):
        parse_solution("n 2\ng 1 2 1\ng 1 1 2\n")  # g 1 twice
    with pytest.raises(FormatError):
        parse_solution("n 2\ng 1 2 1\ng 2 2 1\nf 1 1 2\n")  # missing f 2


def test_parse_solution_degenerate_is_axiom_error():
    with pytest.raises(AxiomError):
        parse_solution("n 3\ng 1 1 1 2\ng 2 1 2 3\ng 3 1 2 3\nf derived\n")


def test_parse_solution_underivable_is_axiom_error():
    # g1 = id, g2 = swap admits no involutive partner
    with pytest.raises(AxiomError):
        parse_solution("n 2\ng 1 1 2\ng 2 2 1\nf derived\n")


def test_presentation_round_trip(cyclic3):
    pres = solution_to_presentation(cyclic3)
    text = format_presentation(pres)
    assert parse_presentation(text) == pres
    assert "1 1 = 2 3" in text


def test_parse_presentation_errors():
    with pytest.raises(FormatError):
        parse_presentation("n 3\n1 1 2 3\n")
    with pytest.raises(FormatError):
        parse_presentation("n 3\n1 1 = 2 9\n")
    with pytest.raises(FormatError):
        parse_presentation("n 3\n1 2 = 1 2\n")


def test_word_syntax():
    assert parse_word("x4 x4", 5) == (3, 3)
    assert parse_word("4 4", 5) == (3, 3)
    assert parse_word("x1 2 x3", 3) == (0, 1, 2)
    assert parse_word("e", 3) == ()
    assert format_word(()) == "e"
    assert format_word((3, 3)) == "x4 x4"
    with pytest.raises(ValueError):
        parse_word("x9", 5)
    with pytest.raises(ValueError):
        parse_word("foo", 5)


def test_format_solution_is_one_based(cyclic3):
    text = format_solution(cyclic3)
    assert text.splitlines()[1] == "g 1 2 3 1"

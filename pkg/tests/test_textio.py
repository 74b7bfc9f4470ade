import pytest

from qwalg.catalog import load_fixture, named_catalog
from qwalg.errors import ParseError
from qwalg.textio import AlgebraDocument, dumps, parse, serialize

from importlib.resources import files

FIXTURES = ["orthomodular6", "weakly_linear5"]


def _text(name):
    return files("qwalg.data").joinpath(f"{name}.qw").read_text()


def test_orthomodular_fixture():
    doc = parse(_text("orthomodular6"))
    assert doc.elements == ("0", "a", "b", "c", "d", "1")
    assert doc.rows[1] == tuple("c 1 1 c 1 1".split())


def test_weakly_linear_fixture():
    doc = parse(_text("weakly_linear5"))
    assert len(doc.elements) == 5
    assert doc.rows[2] == tuple("a 1 1 1 1".split())


@pytest.mark.parametrize("name", FIXTURES)
def test_fixture_round_trip(name):
    doc = parse(_text(name))
    assert parse(serialize(doc)) == doc
    assert serialize(parse(serialize(doc))) == serialize(doc)


def test_catalog_round_trip():
    for name, A in named_catalog().items():
        text = dumps(A, name)
        assert parse(text).to_algebra() == A
        assert serialize(parse(text)) == text


def test_search_output_round_trip(small_models):
    for n, models in small_models.items():
        for i, A in enumerate(models):
            doc = AlgebraDocument.from_algebra(A, f"m{n}_{i}")
            assert parse(serialize(doc)) == doc


GOOD = """algebra tiny   # comment
elements 0 1

zero 0
one 1
arrow
1 1
0 1
"""


def test_comments_and_blank_lines():
    doc = parse(GOOD)
    assert doc.name == "tiny"
    assert doc.rows == (("1", "1"), ("0", "1"))


def _bad(text, line, reason_part):
    with pytest.raises(ParseError) as info:
        parse(text)
    assert info.value.line == line
    assert reason_part in info.value.reason
    assert str(info.value).startswith(f"line {line}, column ")


def test_short_row():
    text = _text("orthomodular6").replace("d 1 1 1 d 1", "d 1 1 1 d")
    lineno = next(i for i, l in enumerate(text.splitlines(), 1) if l.strip() == "d 1 1 1 d")
    _bad(text, lineno, "has 5 entries, expected 6")


def test_duplicate_element():
    _bad(GOOD.replace("elements 0 1", "elements 0 1 1"), 2, "duplicate element")


def test_unknown_name_in_grid():
    with pytest.raises(ParseError) as info:
        parse(GOOD.replace("0 1\n", "0 q\n").replace("elements 0 q", "elements 0 1"))
    assert "unknown element 'q'" in info.value.reason
    assert info.value.column == 3


def test_missing_section():
    _bad("algebra x\nelements 0 1\nzero 0\n", 3, "missing section 'one'")


def test_zero_not_an_element():
    _bad(GOOD.replace("zero 0", "zero z"), 4, "is not an element")


def test_wrong_keyword():
    _bad(GOOD.replace("one 1", "top 1"), 5, "expected 'one'")


def test_trailing_content():
    _bad(GOOD + "1 1\n", 9, "unexpected content")


def test_load_fixture_matches_parse():
    assert load_fixture("orthomodular6") == parse(_text("orthomodular6")).to_algebra()

"""Expression language: grammar, errors, evaluation, canonical formatting."""

import pytest
from hypothesis import given, strategies as st

from motivecount import L, MotiveClass, projective
from motivecount.atoms import AtomKind
from motivecount.dsl import (
    ArityError,
    Atom,
    Diff,
    Lefschetz,
    Lit,
    ParseError,
    Pow,
    Prod,
    Sum,
    Sym,
    eval_expr,
    evaluate,
    format_expr,
    parse,
)


def test_parse_product():
    assert parse("P2*P13") == Prod((Atom(AtomKind("projective", (2,))),
                                    Atom(AtomKind("projective", (13,)))))


def test_parse_assembly_expression():
    e = parse("(Hilb3 - P2*P3)*P11 + P2*(P11 - P1) + P2*P13")
    assert isinstance(e, Sum) and len(e.items) == 3
    first = e.items[0]
    assert isinstance(first, Prod) and isinstance(first.items[0], Diff)


def test_parse_whitespace_insensitive():
    assert parse(" P2 * P 13 ") == parse("P2*P13")
    assert parse("Gr ( 2 , 6 )") == parse("Gr(2,6)")


def test_parse_all_primaries():
    assert parse("L") == Lefschetz()
    assert parse("7") == Lit(7)
    assert parse("A3") == Atom(AtomKind("affine", (3,)))
    assert parse("Hilb3") == Atom(AtomKind("hilb_p2", (3,)))
    assert parse("Lin(2)") == Atom(AtomKind("linear_system", (2,)))
    assert parse("C(3)") == Atom(AtomKind("universal_curve", (3,)))
    assert parse("Omega(2,6)") == Atom(AtomKind("omega_locus", (2, 6)))
    assert parse("Sym2(P2)") == Sym(2, Atom(AtomKind("projective", (2,))))
    assert parse("P1^3") == Pow(Atom(AtomKind("projective", (1,))), 3)


@pytest.mark.parametrize("source,offset", [
    ("Gr(2,", 5),
    ("", 0),
    ("P2 +", 4),
    ("P2 P3", 3),
    ("Sym2 P2", 5),
    ("Gr(2 6)", 5),
    ("(P2", 3),
    ("P", 1),
    ("Frob(2)", 0),
])
def test_parse_errors_carry_offsets(source, offset):
    with pytest.raises(ParseError) as err:
        parse(source)
    assert err.value.offset == offset
    assert err.value.expected


def test_parse_error_on_bad_character():
    with pytest.raises(ParseError) as err:
        parse("P2 $ P3")
    assert err.value.offset == 3


def test_arity_error():
    with pytest.raises(ArityError):
        parse("Gr(5,2)")
    parse("Gr(2,2)")  # boundary is fine


def test_eval_examples():
    assert evaluate("P1 - 1") == L
    assert evaluate("Sym2(P2)") == MotiveClass((1, 1, 2, 1, 1))
    assert evaluate("P2*P2 - P2") == projective(2) * projective(2) - projective(2)
    assert evaluate("0") == MotiveClass()
    assert evaluate("L^3") == MotiveClass((0, 0, 0, 1))
    assert evaluate("2*A5") == MotiveClass((0, 0, 0, 0, 0, 2))


def test_precedence_golden():
    assert evaluate("P1+P1*P1") == projective(1) + projective(1) * projective(1)
    assert evaluate("P1^2*P1") == projective(1) ** 3
    assert evaluate("P2 - P1 + 1") == projective(2) - projective(1) + 1
    # left-associative difference
    assert evaluate("P2 - P1 - 1") == (projective(2) - projective(1)) - 1


def test_format_examples():
    assert format_expr(parse("P2 * P13")) == "P2*P13"
    assert format_expr(Lit(1)) == "1"
    assert format_expr(parse("(P1+P2)*P3")) == "(P1+P2)*P3"
    assert format_expr(parse("P1-(P2+P3)")) == "P1-(P2+P3)"
    assert format_expr(parse("P1^2")) == "P1^2"
    assert format_expr(parse("(P1+1)^2")) == "(P1+1)^2"


def test_structural_evaluation_identities():
    a = parse("Gr(2,4)")
    b = parse("Hilb2 - P1")
    assert eval_expr(Prod((a, b))) == eval_expr(a) * eval_expr(b)
    assert eval_expr(Diff(a, b)) == eval_expr(a) - eval_expr(b)
    assert eval_expr(Sum((a, b, a))) == 2 * eval_expr(a) + eval_expr(b)
    assert eval_expr(Pow(b, 2)) == eval_expr(b) ** 2


# -- canonical-tree generator for the round-trip property ---------------------

def _atoms():
    return st.one_of(
        st.just(Lefschetz()),
        st.builds(Lit, st.integers(min_value=0, max_value=99)),
        st.builds(lambda n: Atom(AtomKind("affine", (n,))), st.integers(0, 20)),
        st.builds(lambda n: Atom(AtomKind("projective", (n,))), st.integers(0, 20)),
        st.builds(lambda k, extra: Atom(AtomKind("grassmannian", (k, k + extra))),
                  st.integers(0, 4), st.integers(0, 5)),
        st.builds(lambda n: Atom(AtomKind("hilb_p2", (n,))), st.integers(0, 8)),
        st.builds(lambda d: Atom(AtomKind("linear_system", (d,))), st.integers(1, 6)),
        st.builds(lambda d: Atom(AtomKind("universal_curve", (d,))), st.integers(1, 6)),
        st.sampled_from([Atom(AtomKind("omega_locus", (1, 3))),
                         Atom(AtomKind("omega_locus", (2, 6)))]),
    )


def expr_trees(max_depth=4):
    """Trees in parser shape: no Sum directly under Sum, no Prod under Prod."""

    def extend(children):
        non_sum = children.filter(lambda e: not isinstance(e, Sum))
        non_prod = children.filter(lambda e: not isinstance(e, Prod))
        return st.one_of(
            st.lists(non_sum, min_size=2, max_size=4).map(lambda xs: Sum(tuple(xs))),
            st.builds(Diff, children, children),
            st.lists(non_prod, min_size=2, max_size=4).map(lambda xs: Prod(tuple(xs))),
            st.builds(Pow, children, st.integers(0, 5)),
            st.builds(Sym, st.integers(0, 4), children),
        )

    return st.recursive(_atoms(), extend, max_leaves=12)


@given(expr_trees())
def test_parse_format_roundtrip(tree):
    assert parse(format_expr(tree)) == tree

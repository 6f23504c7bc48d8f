"""멀티 디자인: 호환성, Cut, 상호작용 열, 제한, .mlud 해석"""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from core.errors import DesignSyntaxError, IncompatibleError, MultiDesignError
from core.syntax import DAIMON, X0, Branch, Neg, PosApp, alpha_eq, rename_free
from multidesign import (
    Compatibility,
    MultiDesign,
    compatible,
    cut,
    cut_associates,
    interaction_sequence,
    normalize_multi,
    orthogonal_triples,
    parse_multi,
    path_sides,
    paths_associate,
    restrict,
    substitution_associates,
    with_redexes,
)
from paths import parse_seq
from paths.actions import canonical
from reduction import normalize
from tests.conftest import NEGATIVE_DESIGNS, POSITIVE_DESIGNS, d, negative_designs, positive_designs

TRIPLES = orthogonal_triples(POSITIVE_DESIGNS, NEGATIVE_DESIGNS)
triples = st.sampled_from(TRIPLES)

D_TEXT = """
-- 자유 변수 x 에 대고 a 를 둡니다
pos := x|a<c().#>
"""

E_TEXT = """
x := a(y).(y|c<>)
"""


@pytest.fixture
def pair():
    D, _ = parse_multi(D_TEXT)
    E, _ = parse_multi(E_TEXT)
    return D, E


def test_parse_multi(pair):
    D, E = pair
    assert D.is_positive and D.fv() == {"x"}
    assert E.np() == {"x"} and not E.fv()


def test_parse_multi_collects_signature():
    _, d_sig = parse_multi(D_TEXT)
    _, e_sig = parse_multi(E_TEXT)
    sig = d_sig.merged(e_sig)
    assert sig.arity("a") == 1
    assert sig.arity("c") == 0
    M, both = parse_multi("pos := x|a<c().#>\nz := b().#\n")
    assert M.np() == {"z"} and M.fv() == {"x"}
    assert both.arity("b") == 0


def test_parse_multi_continuation_lines():
    M, _ = parse_multi("x := a().#\n     + b().#\n")
    assert M.as_dict()["x"].names == ("a", "b")


def test_parse_multi_rejects_bad_lines():
    with pytest.raises(DesignSyntaxError):
        parse_multi("a().#")
    with pytest.raises(MultiDesignError):
        parse_multi("x := x0|a<>")
    with pytest.raises(MultiDesignError):
        parse_multi("x := a().#\nx := b().#")


def test_multi_design_invariants():
    with pytest.raises(MultiDesignError):
        MultiDesign.of(positive=d("a().#"))
    with pytest.raises(MultiDesignError):
        MultiDesign.of({"u": d("a().(z|b<>)"), "v": d("c().(z|e<>)")})
    with pytest.raises(MultiDesignError):
        MultiDesign.of({"u": d("a().(u|b<>)")})


def test_from_design_places_negative_at_x0():
    M = MultiDesign.from_design(d("a().#"))
    assert M.np() == {"x0"}
    assert len(M) == 1


def test_compatibility(pair):
    D, E = pair
    assert compatible(D, E) is Compatibility.CLOSED_COMPATIBLE
    assert compatible(D, D) is Compatibility.INCOMPATIBLE
    lone = MultiDesign.of({"u": d("a().#")})
    other = MultiDesign.of({"v": d("b().#")})
    assert compatible(lone, other) is Compatibility.COMPATIBLE


def test_cut_then_normalize(pair):
    D, E = pair
    joined = cut(D, E)
    assert not joined.negatives
    assert normalize_multi(joined).positive == DAIMON


def test_cut_is_commutative_up_to_bound_names(pair):
    D, E = pair
    assert alpha_eq(cut(D, E).positive, cut(E, D).positive)


def test_cut_rejects_incompatible(pair):
    D, _ = pair
    with pytest.raises(IncompatibleError):
        cut(D, D)


def test_interaction_sequence(pair):
    D, E = pair
    assert interaction_sequence(D, E) == parse_seq("x|a<y1> c_y1() #")
    assert interaction_sequence(E, D) == parse_seq("a_x(y1) y1|c<>")


def test_interaction_sequence_needs_opposite_polarities(pair):
    _, E = pair
    with pytest.raises(IncompatibleError):
        interaction_sequence(E, E)


def test_restrict_keeps_owned_actions():
    u, v = d("a().#"), d("b().#")
    D = MultiDesign.of({"u": u, "v": v})
    s = parse_seq("a_u() #")
    assert restrict(s, D, MultiDesign.of({"u": u})) == s
    assert restrict(s, D, MultiDesign.of({"v": v})) == ()


def test_restrict_needs_sub_multi_design():
    D = MultiDesign.of({"u": d("a().#")})
    with pytest.raises(MultiDesignError):
        restrict((), D, MultiDesign.of({"u": d("b().#")}))


@settings(max_examples=60, deadline=None)
@given(positive_designs, negative_designs)
def test_cut_commutes_on_single_designs(p, n):
    P, N = MultiDesign.from_design(p), MultiDesign.from_design(n)
    assert cut(P, N) == cut(N, P)


# ---------------------------------------------------------------
# 제한과 결합 법칙
# ---------------------------------------------------------------

INTERLEAVED_D = "pos := x|b<a(u).(z|c<d().(u|e<>)>)>"
INTERLEAVED_E = "x := b(v).(v|a<e().#>)"
INTERLEAVED_F = "z := c(w).(w|d<>)"


@pytest.fixture
def interleaved():
    return tuple(parse_multi(text)[0] for text in (INTERLEAVED_D, INTERLEAVED_E, INTERLEAVED_F))


def test_union_of_multi_designs(interleaved):
    D, E, F = interleaved
    EF = E.union(F)
    assert EF.np() == {"x", "z"}
    assert EF == F.union(E)
    with pytest.raises(MultiDesignError):
        D.union(D)


def test_restrict_splits_interleaved_sequence(interleaved):
    D, E, F = interleaved
    EF = E.union(F)
    s = interaction_sequence(EF, D)
    assert s == parse_seq("b_x(y1) y1|a<y2> c_z(y3) y3|d<> e_y2() #")
    assert restrict(s, EF, E) == parse_seq("b_x(y1) y1|a<y2> e_y2() #")
    assert restrict(s, EF, F) == parse_seq("c_z(y3) y3|d<>")
    assert restrict(s, EF, EF) == s


def test_paths_associate_on_interleaved_example(interleaved):
    D, E, F = interleaved
    assert path_sides(D, E, F) == (parse_seq("b_x(y1) y1|a<y2> e_y2() #"),) * 2
    left, right = path_sides(D, F, E)
    assert left == right == canonical(parse_seq("c_z(y3) y3|d<>"))
    assert left == parse_seq("c_z(y1) y1|d<>")


def test_paths_associate_needs_daimon(interleaved):
    D, E, _ = interleaved
    F = MultiDesign.of({"z": d("c(w).(w|e<>)")})
    with pytest.raises(IncompatibleError):
        path_sides(D, E, F)


def test_with_redexes_keeps_normal_form():
    n = d("b(y).(y|a<>) + a().#")
    delayed = with_redexes(n)
    assert delayed != n
    assert normalize(delayed).result == n


def test_orthogonal_triples_are_orthogonal():
    assert TRIPLES
    for D, E, F in TRIPLES[:20]:
        joined = normalize_multi(cut(E.union(F), D))
        assert joined.positive == DAIMON


@settings(max_examples=100, deadline=None)
@given(positive_designs, negative_designs, negative_designs)
def test_substitution_associates_with_normalization(p, n, m):
    assert substitution_associates(with_redexes(p), {X0: with_redexes(n)})
    opened = PosApp("x", "b", (Neg((Branch("a", (), rename_free(p, {X0: "z"})),)),))
    assert substitution_associates(with_redexes(opened), {"x": with_redexes(m)})
    assert substitution_associates(with_redexes(opened), {"x": with_redexes(m), "z": n})


@settings(max_examples=100, deadline=None)
@given(triples)
def test_normalization_associates_with_cut(triple):
    D, E, F = triple
    D = MultiDesign.of(positive=with_redexes(D.positive))
    E = MultiDesign.of({x: with_redexes(n) for x, n in E.negatives})
    F = MultiDesign.of({x: with_redexes(n) for x, n in F.negatives})
    assert cut_associates(D, E)
    assert cut_associates(D, E.union(F))
    assert cut_associates(E.union(F), D)
    assert cut_associates(E, F)


@settings(max_examples=100, deadline=None)
@given(triples)
def test_paths_associate_on_orthogonal_triples(triple):
    D, E, F = triple
    assert paths_associate(D, E, F)
    assert paths_associate(D, F, E)

"""행동 열, 뷰, 경로, 셔플, 완성 디자인, 상호작용 경로"""

import pytest
from hypothesis import given, settings

from core.errors import DesignSyntaxError, NotAPathError, PolarityError
from core.syntax import DAIMON, Signature, alpha_eq
from behaviours import Const, Down, bool_behaviour, ortho_member, signature_of, visitable_paths
from paths import (
    DAIMON_ACTION,
    NOT_ORTHOGONAL,
    canonical,
    completion,
    dual,
    interaction_path,
    is_aj_seq,
    is_path,
    is_path_of,
    is_well_bracketed,
    locate,
    neg,
    parse_seq,
    paths_of,
    pos,
    render_seq,
    seq_from_json,
    seq_to_dot,
    seq_to_json,
    shuffle,
    skeleton,
    to_dot,
    trivial_view_of,
    view_of,
)
from paths.forest import views_of
from paths.shuffle import anti_shuffle
from paths.views import anti_view_of, is_trivial_view
from reduction import is_orthogonal, obs_leq
from tests.conftest import SMALL_SIGNATURE, d, negative_designs, positive_designs

# 가시성을 어기는 열: 마지막 행동의 정당화 행동(1번)이 뷰 밖에 있음
INVISIBLE = "x0|a<y1,y2> b_y1(y3,y4) y3|c<> e_y2(y5) y4|c<>"

# a/2, b/2, c/1, d/0 위의 작은 디자인: 뿌리 분기 하나, 양수 행동 아래 음수 분기 셋
TREE_DESIGN = "a(x1, x2).(x2|b<a(x3, x4).# + c(y1).(y1|d<>), c(y2).(x1|d<>)>)"


def test_parse_and_render_sequence():
    s = parse_seq("x0|b<y1> a_y1() #")
    assert s == (pos("x0", "b", "y1"), neg("y1", "a"), DAIMON_ACTION)
    assert render_seq(s) == "x0|b<y1> a_y1() #"


def test_empty_sequence():
    assert parse_seq("ε") == ()
    assert parse_seq("") == ()
    assert render_seq(()) == "ε"


def test_bad_sequence_text():
    with pytest.raises(DesignSyntaxError):
        parse_seq("x0|b<y1")


def test_json_form_records_justifiers():
    s = parse_seq("x0|b<y1> a_y1() #")
    data = seq_to_json(s)
    assert data[1]["justifier"] == 0
    assert data[2] == {"daimon": True}
    assert seq_from_json(data) == s


def test_canonical_renames_in_order_and_skips_free_names():
    s = (pos("x0", "a", "q"), neg("q", "b", "y1"), pos("y1", "c"))
    assert canonical(s) == (pos("x0", "a", "y1"), neg("y1", "b", "y2"), pos("y2", "c"))
    with_free = (neg("y1", "a", "q"), pos("q", "c"))
    assert canonical(with_free) == (neg("y1", "a", "y2"), pos("y2", "c"))


def test_dual_adds_and_removes_daimon():
    s = parse_seq("x0|b<y1> a_y1() #")
    assert dual(s) == parse_seq("b_x0(y1) y1|a<>")
    assert dual(dual(s)) == s
    assert dual(()) == (DAIMON_ACTION,)


def test_is_path():
    assert is_path(parse_seq("x0|b<y1> a_y1() #"))
    assert is_path(())
    assert not is_path(parse_seq("x0|b<y1> a_y1()"))
    assert not is_path(parse_seq("x0|a<> x0|b<>"))


def test_visibility_violation_is_aj_but_not_path():
    s = parse_seq(INVISIBLE)
    assert is_aj_seq(s)
    assert not is_path(s)


def test_views():
    s = parse_seq("x0|a<y1,y2> b_y1(y3) y3|c<> e_y2(y4) y4|c<>")
    assert is_path(s)
    assert view_of(s) == parse_seq("x0|a<y1,y2> e_y2(y4) y4|c<>")
    assert trivial_view_of(s) == parse_seq("x0|a<y1,y2> e_y2(y4) y4|c<>")
    assert is_trivial_view(trivial_view_of(s))
    assert not is_trivial_view(s)


def test_anti_view_follows_player_pointers():
    s = parse_seq("x0|a<y1> b_y1(y2,y3) y2|c<y4> f_y4() y3|c<>")
    assert view_of(s) == s
    assert anti_view_of(s) == parse_seq("x0|a<y1> b_y1(y2,y3) y3|c<>")


def test_well_bracketing():
    assert is_well_bracketed(parse_seq("x0|a<y1> b_y1(y2) y2|c<y3> d_y3() #"))
    assert not is_well_bracketed(parse_seq(INVISIBLE))


def test_paths_of_positive_design():
    p = d("x0|b<a().#>")
    assert paths_of(p) == {parse_seq("x0|b<y1>"), parse_seq("x0|b<y1> a_y1() #")}
    assert paths_of(p, max_len=1) == {parse_seq("x0|b<y1>")}


def test_paths_of_negative_design_contains_empty_path():
    n = d("a().#")
    assert paths_of(n) == {(), parse_seq("a_x0() #")}


def test_is_path_of():
    p = d("x0|b<a().#>")
    assert is_path_of(parse_seq("x0|b<y1> a_y1() #"), p)
    assert not is_path_of(parse_seq("x0|b<y1> c_y1() #"), p)
    assert not is_path_of((), p)
    assert is_path_of((), d("a().#"))


def test_views_of_design():
    assert views_of(d("a().#")) == {(), parse_seq("a_x0()"), parse_seq("a_x0() #")}


def test_dot_output():
    text = to_dot(locate(d("x0|b<a().#>")), "demo")
    assert text.startswith('digraph "demo"')
    assert "x0|b<" in text
    assert "style=dashed" in seq_to_dot(parse_seq("x0|b<y1> a_y1() #"))


def test_shuffle_of_two_negative_continuations():
    s = parse_seq("x0|a<y1,y2> b_y1(y3) y3|c<>")
    t = parse_seq("x0|a<y1,y2> e_y2(y3) y3|c<>")
    assert shuffle(s, t) == {
        parse_seq("x0|a<y1,y2> b_y1(y3) y3|c<> e_y2(y4) y4|c<>"),
        parse_seq("x0|a<y1,y2> e_y2(y3) y3|c<> b_y1(y4) y4|c<>"),
    }


def test_anti_shuffle_is_dual_of_shuffle():
    s = parse_seq("x0|a<y1,y2> b_y1(y3) y3|c<>")
    t = parse_seq("x0|a<y1,y2> e_y2(y3) y3|c<>")
    merged = anti_shuffle(dual(s), dual(t))
    assert len(merged) == 2
    for u in merged:
        assert is_path(u)
        assert u[-1].is_daimon
        assert dual(u) in shuffle(s, t)


def test_shuffle_of_two_daimon_ended_paths_is_empty():
    s = parse_seq("x0|a<y1,y2> b_y1() #")
    t = parse_seq("x0|a<y1,y2> e_y2() #")
    assert shuffle(s, t) == set()


def test_shuffle_needs_same_first_positive_action():
    with pytest.raises(PolarityError):
        shuffle(parse_seq("x0|a<>"), parse_seq("x0|b<>"))


def test_skeleton_and_completion():
    s = parse_seq("x0|b<y1> a_y1() #")
    assert alpha_eq(skeleton(s), d("x0|b<a().#>"))
    full = completion(s, Signature({"a": 0, "b": 1}))
    assert s in paths_of(full)
    with pytest.raises(NotAPathError):
        completion(parse_seq(INVISIBLE), Signature())


def test_completion_fills_with_daimons():
    full = completion(parse_seq("x0|b<y1>"), Signature({"a": 0, "b": 1}))
    branch = full.args[0].get("a")
    assert branch is not None and branch.body == DAIMON


def test_interaction_path_examples():
    p, n = d("x0|b<a().#>"), d("b(y).(y|a<>)")
    assert interaction_path(p, n) == parse_seq("x0|b<y1> a_y1() #")
    assert interaction_path(n, p) == parse_seq("b_x0(y1) y1|a<>")
    assert interaction_path(d("x0|a<>"), d("b().#")) is NOT_ORTHOGONAL


def test_interaction_path_needs_opposite_polarities():
    with pytest.raises(PolarityError):
        interaction_path(d("x0|a<>"), d("x0|a<>"))


@settings(max_examples=60, deadline=None)
@given(positive_designs)
def test_dual_is_an_involution_on_paths(p):
    for s in paths_of(p):
        assert dual(dual(s)) == s
        assert is_path(dual(s))


@settings(max_examples=80, deadline=None)
@given(positive_designs, negative_designs)
def test_orthogonal_iff_interaction_path(p, n):
    played = interaction_path(p, n)
    assert (played is not NOT_ORTHOGONAL) == is_orthogonal(p, n)
    if played is not NOT_ORTHOGONAL:
        assert played in paths_of(p)
        assert dual(played) in paths_of(n)


# ---------------------------------------------------------------
# 뷰, 자명한 뷰, 셔플 사이의 관계
# ---------------------------------------------------------------

def _closure(seeds, combine, bound):
    """seeds 에서 출발해 combine(u, v) 를 길이 bound 까지 반복 적용한 집합"""
    found = set(seeds)
    frontier = set(seeds)
    while frontier:
        new = set()
        for u in frontier:
            for v in found:
                try:
                    new |= {w for w in combine(u, v) if len(w) <= bound}
                except PolarityError:
                    continue
        frontier = new - found
        found |= new
    return found


def _views_along(s):
    return {canonical(view_of(s[:k])) for k in range(1, len(s) + 1) if s[k - 1].is_positive}


def _trivial_views_along(v):
    out = set()
    for k in range(1, len(v) + 1):
        u = v[:k]
        t = trivial_view_of(u) if u[-1].is_positive else trivial_view_of(u + (DAIMON_ACTION,))
        out.add(canonical(t))
    return out


def _assert_paths_are_shuffles_of_views(design):
    for s in paths_of(design):
        if s:
            assert s in _closure(_views_along(s), shuffle, len(s)), render_seq(s)


def _assert_views_are_anti_shuffles_of_trivial_views(design):
    for v in views_of(design):
        if v and v[-1].is_positive:
            assert v in _closure(_trivial_views_along(v), anti_shuffle, len(v)), render_seq(v)


def test_tree_design_paths_and_views():
    n = d(TREE_DESIGN)
    found = paths_of(n, max_len=12)
    assert parse_seq("a_x0(y1,y2) y2|b<y3,y4> c_y3(y5) y5|d<> c_y4(y6) y1|d<>") in found
    assert parse_seq("a_x0(y1,y2) y2|b<y3,y4> a_y3(y5,y6) #") in found
    assert parse_seq("a_x0(y1,y2) y2|b<y3,y4> a_y3(y5,y6) #") in views_of(n)
    _assert_paths_are_shuffles_of_views(n)
    _assert_views_are_anti_shuffles_of_trivial_views(n)


def test_view_with_pointer_to_root_is_an_anti_shuffle():
    v = parse_seq("a_x0(y1,y2) y2|b<y3,y4> c_y4(y5) y1|d<>")
    assert not is_trivial_view(v)
    merged = anti_shuffle(parse_seq("a_x0(y1,y2) y2|b<y3,y4> c_y4(y5) #"), parse_seq("a_x0(y1,y2) y1|d<>"))
    assert v in merged


def _brute_force_paths(design, max_len):
    """숲의 행동들을 극성이 번갈아 나오도록 늘어놓은 모든 열 가운데 d 의 경로인 것"""
    nodes = locate(design).nodes()
    found = set()

    def go(seq, used):
        if is_path_of(seq, design):
            found.add(canonical(seq))
        if len(seq) == max_len or (seq and seq[-1].is_daimon):
            return
        for k, node in enumerate(nodes):
            if k in used or (seq and node.action.is_positive == seq[-1].is_positive):
                continue
            go(seq + (node.action,), used | {k})

    go((), frozenset())
    return found


def test_paths_of_matches_brute_force_on_tree_design():
    n = d(TREE_DESIGN)
    assert paths_of(n, max_len=12) == _brute_force_paths(n, 12)


@settings(max_examples=40, deadline=None)
@given(positive_designs)
def test_paths_of_matches_brute_force_on_positive_designs(p):
    assert paths_of(p, max_len=8) == _brute_force_paths(p, 8)


@settings(max_examples=60, deadline=None)
@given(positive_designs)
def test_positive_paths_are_shuffles_of_views(p):
    _assert_paths_are_shuffles_of_views(p)
    _assert_views_are_anti_shuffles_of_trivial_views(p)


@settings(max_examples=60, deadline=None)
@given(negative_designs)
def test_negative_paths_are_shuffles_of_views(n):
    _assert_paths_are_shuffles_of_views(n)
    _assert_views_are_anti_shuffles_of_trivial_views(n)


# ---------------------------------------------------------------
# 완성 디자인의 최대성
# ---------------------------------------------------------------

def _assert_completion_is_maximal(design):
    sig = Signature(SMALL_SIGNATURE)
    for s in paths_of(design):
        if not s:
            continue
        full = completion(s, sig)
        assert is_path_of(s, full)
        assert obs_leq(design, full), render_seq(s)


def test_completion_is_above_tree_design():
    n = d(TREE_DESIGN)
    sig = Signature({"a": 2, "b": 2, "c": 1, "d": 0})
    for s in paths_of(n):
        if s:
            assert obs_leq(n, completion(s, sig)), render_seq(s)


@settings(max_examples=60, deadline=None)
@given(positive_designs)
def test_completion_is_maximal_for_positive_designs(p):
    _assert_completion_is_maximal(p)


@settings(max_examples=60, deadline=None)
@given(negative_designs)
def test_completion_is_maximal_for_negative_designs(n):
    _assert_completion_is_maximal(n)


@pytest.mark.parametrize("B", [Const("b"), Down(Const("b")), bool_behaviour()], ids=["C_b", "down_C_b", "Bool"])
def test_completion_of_dual_visitable_path_is_in_orthogonal(B):
    sig = signature_of(B)
    for s in visitable_paths(B, max_len=8):
        assert ortho_member(completion(dual(s), sig), B), render_seq(s)

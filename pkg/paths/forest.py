"""
forest.py - 디자인을 행동 나무(숲)로 펼치기, 경로 나열
======================================================
컷이 없는 디자인은 "위치가 있는 행동" 의 나무로 그릴 수 있습니다.
음수 디자인은 분기마다 나무가 하나씩 생기므로 일반적으로 숲(forest)입니다.

[초보자 안내]
- 음수 디자인의 뿌리 행동은 주소 x0 에 놓입니다.
- 양수 행동이 만드는 새 주소에는 z1, z2, ... 를 차례로 붙입니다.
- paths_of(d) 는 숲 위를 "가시성 규칙을 지키는 이동" 만 골라 깊이 우선
  탐색하여 d 의 모든 경로를 모읍니다.
- to_dot() 은 Graphviz DOT 텍스트를 만듭니다. 자식이 부모 위에 그려집니다.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field

from core.errors import CutPresentError
from core.syntax import X0, Daimon, Design, FreshNames, Neg, PosApp, all_vars, is_cut_free
from paths.actions import DAIMON_ACTION, LocatedAction, Seq, canonical, justifiers, neg, pos
from paths.views import is_path

logger = logging.getLogger(__name__)


@dataclass(eq=False)
class LocatedNode:
    action: LocatedAction
    children: list["LocatedNode"] = field(default_factory=list)
    parent: "LocatedNode | None" = None

    def __repr__(self) -> str:
        return f"LocatedNode({self.action}, children={len(self.children)})"


@dataclass
class LocatedForest:
    roots: list[LocatedNode]
    positive: bool

    def nodes(self) -> list[LocatedNode]:
        out: list[LocatedNode] = []
        stack = list(reversed(self.roots))
        while stack:
            n = stack.pop()
            out.append(n)
            stack.extend(reversed(n.children))
        return out


def locate(d: Design, fresh: FreshNames | None = None) -> LocatedForest:
    """
    컷 없는 디자인을 행동 숲으로 바꿉니다.

    Raises:
        CutPresentError: 디자인에 컷이 있을 때
    """
    if not is_cut_free(d):
        raise CutPresentError("컷이 있는 디자인은 나무로 펼칠 수 없습니다. 먼저 정규화하세요.")
    fresh = fresh or FreshNames(all_vars(d) | {X0}, prefix="z")
    assigned: set[str] = {X0}

    def positive(p: Design, env: dict[str, str], parent: LocatedNode | None) -> LocatedNode | None:
        if isinstance(p, Daimon):
            return LocatedNode(DAIMON_ACTION, parent=parent)
        if not isinstance(p, PosApp):
            return None
        bound = tuple(fresh() for _ in p.args)
        node = LocatedNode(pos(env.get(p.head, p.head), p.name, *bound), parent=parent)
        for address, arg in zip(bound, p.args):
            node.children.extend(negative(arg, address, env, node))
        return node

    def negative(n: Neg, address: str, env: dict[str, str], parent: LocatedNode | None) -> list[LocatedNode]:
        nodes = []
        for b in n.branches:
            params = []
            local = dict(env)
            for x in b.params:
                name = x if x not in assigned else fresh()
                assigned.add(name)
                local[x] = name
                params.append(name)
            node = LocatedNode(neg(address, b.name, *params), parent=parent)
            child = positive(b.body, local, node)
            if child is not None:
                node.children.append(child)
            nodes.append(node)
        return nodes

    if isinstance(d, Neg):
        return LocatedForest(negative(d, X0, {}, None), positive=False)
    root = positive(d, {}, None)
    return LocatedForest([root] if root is not None else [], positive=True)


def paths_of(d: Design, max_len: int | None = None) -> set[Seq]:
    """
    디자인의 모든 경로 (길이 max_len 이하, canonical 이름).

    음수 디자인이면 빈 경로 ε 도 포함합니다.
    """
    forest = locate(d)
    found: set[Seq] = set()
    if not forest.positive:
        found.add(())
    elif not forest.roots:
        return found

    def extend(s: tuple, nodes: tuple, used: frozenset) -> None:
        if s and s[-1].is_positive:
            found.add(canonical(s))
        if max_len is not None and len(s) >= max_len:
            return
        if s and s[-1].is_daimon:
            return
        if not s:
            candidates = forest.roots
        elif not s[-1].is_positive:
            candidates = nodes[-1].children
        else:
            # 이미 둔 양수 행동이 만든 주소 중 아직 쓰지 않은 곳
            candidates = [
                c
                for n in nodes
                if n.action.is_positive
                for c in n.children
                if c.action.address not in used
            ]
        for c in candidates:
            t = s + (c.action,)
            if _extendable(t):
                extend(t, nodes + (c,), used | {c.action.address})

    extend((), (), frozenset())
    logger.debug("paths_of: %d 개 경로", len(found))
    return found


def _extendable(t: Seq) -> bool:
    """양수로 끝나면 경로인지, 음수로 끝나면 데몬을 붙여 경로가 되는지 검사합니다."""
    if t[-1].is_positive:
        return is_path(t)
    return is_path(t + (DAIMON_ACTION,))


def is_path_of(s: Seq, d: Design) -> bool:
    """s 가 디자인 d 의 경로인지: 모든 접두사의 뷰가 d 의 가지여야 합니다."""
    if not is_path(s):
        return False
    forest = locate(d)
    if not s:
        return not forest.positive
    rho: dict[str, str] = {}
    nodes: list[LocatedNode] = []
    just = justifiers(s)
    for i, a in enumerate(s):
        if i == 0:
            candidates = forest.roots
        elif not a.is_positive:
            j = just[i]
            candidates = forest.roots if j is None and not forest.positive else (nodes[j].children if j is not None else [])
        else:
            candidates = nodes[i - 1].children
        match = None
        for c in candidates:
            if a.is_daimon and c.action.is_daimon:
                match = c
            elif a.is_proper and c.action.is_proper and c.action.polarity is a.polarity and c.action.name == a.name \
                    and c.action.address == rho.get(a.address, a.address) and len(c.action.bound) == len(a.bound):
                match = c
        if match is None:
            return False
        rho.update(zip(a.bound, match.action.bound))
        nodes.append(match)
    return True


def to_dot(forest: LocatedForest, title: str = "design") -> str:
    """Graphviz DOT 텍스트. 자식 행동이 부모 위에 놓입니다 (rankdir=BT)."""
    lines = [f'digraph "{title}" {{', "  rankdir=BT;", "  node [shape=box, style=rounded];"]
    ids: dict[int, str] = {}
    for k, n in enumerate(forest.nodes()):
        ids[id(n)] = f"n{k}"
        label = str(n.action).replace('"', '\\"')
        lines.append(f'  n{k} [label="{label}"];')
    for n in forest.nodes():
        for c in n.children:
            lines.append(f"  {ids[id(n)]} -> {ids[id(c)]};")
    lines.append("}")
    return "\n".join(lines)


def seq_to_dot(s: Seq, title: str = "path") -> str:
    """경로를 DOT 로: 행동을 순서대로 잇고, 정당화 관계는 점선으로 표시합니다."""
    lines = [f'digraph "{title}" {{', "  rankdir=BT;", "  node [shape=box, style=rounded];"]
    for k, a in enumerate(s):
        lines.append(f'  a{k} [label="{k}: {a}"];')
        if k > 0:
            lines.append(f"  a{k - 1} -> a{k};")
    for k, j in enumerate(justifiers(s)):
        if j is not None:
            lines.append(f"  a{k} -> a{j} [style=dashed, constraint=false];")
    lines.append("}")
    return "\n".join(lines)


def views_of(d: Design) -> set[Seq]:
    """디자인의 모든 뷰: 숲의 뿌리에서 각 노드까지의 가지 (canonical, ε 포함)"""
    forest = locate(d)
    found: set[Seq] = {()}
    stack: list[tuple[LocatedNode, Seq]] = [(r, (r.action,)) for r in forest.roots]
    while stack:
        node, branch = stack.pop()
        found.add(canonical(branch))
        stack.extend((c, branch + (c.action,)) for c in node.children)
    return found

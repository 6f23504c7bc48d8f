"""
main.py - ludics 엔진 메인 엔트리포인트
=======================================
터미널에서 실행하는 CLI(명령줄 인터페이스)를 제공합니다.

[사용법]
  # 디자인 정규화 (--trace 로 단계별 출력)
  python main.py normalize design.lud --trace

  # 두 디자인의 직교성 / 상호작용 경로
  python main.py ortho p.lud n.lud
  python main.py interact p.lud n.lud --dot path.dot

  # 멀티 디자인 상호작용
  python main.py minteract d.mlud e.mlud --restrict x

  # 디자인의 경로 / 행동 숲
  python main.py paths design.lud --max-len 8
  python main.py tree design.lud --dot tree.dot

  # 행동 식, 데이터 패턴, 함수형 타입
  python main.py behaviour "up(down(C_b))" incarnation
  python main.py data nat.pat --level 3 pure
  python main.py func "(Bool -o Bool) -o Bool" --witness

  # 표준 값 인코딩, 자체 검사
  python main.py encode nat 3
  python main.py selftest --seed 0

[종료 코드]
  0 성공 / 성립, 1 반례(witness) 발견, 2 사용법 또는 입력 오류
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from rich.console import Console
from rich.logging import RichHandler
from rich.markup import escape
from rich.panel import Panel
from rich.table import Table

from config import Config
from core.errors import BehaviourError, LudicsError
from core.parser import ParsedDesign, parse_source, render_design
from core.syntax import Design
from behaviours import (
    check_pure,
    check_quasi_pure,
    check_regular,
    incarnation,
    member,
    member_by_paths,
    parse_behaviour,
    polarity_of_expr,
    render_behaviour,
    visitable_paths,
)
from datatypes import (
    basis,
    encode_bool,
    encode_list,
    encode_nat,
    encode_tree,
    interpret,
    kleene_monotone_report,
    parse_pattern,
    render_pattern,
    standard_pattern,
    steadiness,
)
from datatypes.patterns import STANDARD_PATTERNS
from functional import Pure, check_functional, impurity_witness, parse_functype, render_type
from multidesign.multi import MultiDesign, interaction_sequence, restrict
from multidesign.parser import parse_multi
from paths import NOT_ORTHOGONAL, interaction_path, locate, paths_of, render_seq, seq_to_dot, seq_to_json, to_dot
from pipeline import run_selftest
from reduction.normalizer import Status, normalize

logger = logging.getLogger("ludics")

EXIT_OK = 0
EXIT_WITNESS = 1
EXIT_ERROR = 2

console = Console(no_color=not Config.COLOR, highlight=False)


class UsageError(Exception):
    """명령 인자가 잘못되었을 때 (종료 코드 2)"""


def _setup_logging(trace: bool) -> None:
    level = logging.DEBUG if trace else getattr(logging, Config.LOG_LEVEL, logging.WARNING)
    logging.basicConfig(
        level=level,
        format="%(message)s",
        handlers=[RichHandler(console=Console(stderr=True, no_color=not Config.COLOR), show_path=False)],
        force=True,
    )


def _apply_bounds(args: argparse.Namespace) -> None:
    """CLI 옵션이 .env 설정보다 우선합니다."""
    for option, attr in (("level", "LEVEL"), ("max_len", "MAX_LEN"), ("fuel", "FUEL"), ("seed", "SEED")):
        value = getattr(args, option, None)
        if value is not None:
            setattr(Config, attr, value)
    errors = Config.validate()
    if errors:
        raise UsageError("; ".join(errors))


def _read_text(source: str) -> str:
    path = Path(source)
    if not path.is_file():
        raise UsageError(f"파일을 찾을 수 없습니다: {source}")
    return path.read_text(encoding="utf-8")


def _text_or_file(source: str) -> str:
    """인자가 있는 파일 경로이면 파일 내용을, 아니면 인자 그대로"""
    path = Path(source)
    return path.read_text(encoding="utf-8") if path.is_file() else source


def _read_design(source: str) -> ParsedDesign:
    return parse_source(_read_text(source))


def _write_dot(args: argparse.Namespace, text: str) -> None:
    if args.dot:
        Path(args.dot).write_text(text + "\n", encoding="utf-8")
        console.print(f"[dim]DOT 저장: {args.dot}[/dim]")


def _emit(args: argparse.Namespace, report: dict) -> None:
    """--json 이면 보고서를 JSON 으로, 아니면 표로 출력합니다."""
    report = {"command": " ".join(args.argv), "level": Config.LEVEL, "max_len": Config.MAX_LEN, **report}
    if args.json:
        console.out(json.dumps(report, ensure_ascii=False, indent=2, sort_keys=False))
        return
    table = Table(show_header=False, box=None)
    table.add_column("항목", style="cyan")
    table.add_column("값")
    for key, value in report.items():
        if isinstance(value, (list, dict)):
            value = json.dumps(value, ensure_ascii=False)
        table.add_row(key, escape(str(value)))
    console.print(table)


# ---------------------------------------------------------------
# 명령
# ---------------------------------------------------------------

def cmd_normalize(args: argparse.Namespace) -> int:
    d = _read_design(args.file).design

    def on_step(k: int, redex: Design) -> None:
        console.print(f"  [{k:4d}] {render_design(redex)}", style="dim", markup=False)

    outcome = normalize(d, on_step=on_step if args.trace else None)
    _emit(args, {"status": outcome.status.value, "steps": outcome.steps, "result": render_design(outcome.result)})
    return EXIT_OK if outcome.status is not Status.FUEL_EXHAUSTED else EXIT_WITNESS


def cmd_ortho(args: argparse.Namespace) -> int:
    p, n = _read_design(args.left).design, _read_design(args.right).design
    played = interaction_path(p, n)
    ok = played is not NOT_ORTHOGONAL
    _emit(args, {"orthogonal": ok, "path": render_seq(played) if ok else None})
    if ok:
        console.print("[green]✅ 직교입니다.[/green]")
        return EXIT_OK
    console.print("[red]❌ 직교가 아닙니다.[/red]")
    return EXIT_WITNESS


def cmd_interact(args: argparse.Namespace) -> int:
    d, e = _read_design(args.left).design, _read_design(args.right).design
    played = interaction_path(d, e)
    if played is NOT_ORTHOGONAL:
        _emit(args, {"orthogonal": False})
        console.print("[red]❌ 직교가 아니므로 상호작용 경로가 없습니다.[/red]")
        return EXIT_WITNESS
    _emit(args, {"orthogonal": True, "path": render_seq(played), "actions": seq_to_json(played)})
    _write_dot(args, seq_to_dot(played, "interaction"))
    return EXIT_OK


def cmd_minteract(args: argparse.Namespace) -> int:
    D, _ = parse_multi(_read_text(args.left))
    E, _ = parse_multi(_read_text(args.right))
    played = interaction_sequence(D, E)
    report = {"sequence": render_seq(played), "actions": seq_to_json(played)}
    if args.restrict:
        owned = D.as_dict()
        keys = [x.strip() for x in args.restrict.split(",") if x.strip()]
        missing = [x for x in keys if x not in owned]
        if missing:
            raise UsageError(f"왼쪽 멀티 디자인에 없는 변수입니다: {', '.join(missing)}")
        part = MultiDesign.of({x: owned[x] for x in keys})
        report["restricted"] = render_seq(restrict(played, D, part))
    _emit(args, report)
    _write_dot(args, seq_to_dot(played, "multi-interaction"))
    return EXIT_OK


def cmd_paths(args: argparse.Namespace) -> int:
    d = _read_design(args.file).design
    found = sorted(paths_of(d, Config.MAX_LEN), key=lambda s: (len(s), render_seq(s)))
    _emit(args, {"count": len(found), "paths": [render_seq(s) for s in found]})
    return EXIT_OK


def cmd_tree(args: argparse.Namespace) -> int:
    d = _read_design(args.file).design
    forest = locate(d)
    text = to_dot(forest, Path(args.file).stem)
    _write_dot(args, text)
    if not args.dot and not args.json:
        console.out(text)
    else:
        _emit(args, {"nodes": [str(n.action) for n in forest.nodes()]})
    return EXIT_OK


def _check_reports(expr, check: str, level: int | None) -> tuple[dict, bool]:
    fn = {"regular": check_regular, "pure": check_pure, "quasi-pure": check_quasi_pure}[check]
    report = fn(expr, level, Config.MAX_LEN)
    return report.to_dict(), report.holds


def _behaviour_action(args: argparse.Namespace, expr, label: str) -> int:
    if args.check == "incarnation":
        designs = incarnation(expr, args.level)
        _emit(args, {label: render_behaviour(expr), "size": len(designs), "designs": [render_design(d) for d in designs]})
        return EXIT_OK
    if args.check in ("paths", "visitable"):
        found = sorted(visitable_paths(expr, args.level, Config.MAX_LEN), key=lambda s: (len(s), render_seq(s)))
        _emit(args, {label: render_behaviour(expr), "count": len(found), "paths": [render_seq(s) for s in found]})
        return EXIT_OK
    if args.check == "member":
        if not args.design:
            raise UsageError("member 검사에는 --design 파일이 필요합니다.")
        d = _read_design(args.design).design
        try:
            ok = member(d, expr, args.level)
            method = "incarnation"
        except BehaviourError:
            ok = member_by_paths(d, expr, args.level)
            method = "paths"
        _emit(args, {label: render_behaviour(expr), "member": ok, "method": method})
        return EXIT_OK if ok else EXIT_WITNESS
    report, holds = _check_reports(expr, args.check, args.level)
    _emit(args, report)
    return EXIT_OK if holds else EXIT_WITNESS


def cmd_behaviour(args: argparse.Namespace) -> int:
    expr = parse_behaviour(_text_or_file(args.expr))
    logger.debug("행동 식 %s (극성 %s)", render_behaviour(expr), polarity_of_expr(expr).value)
    return _behaviour_action(args, expr, "behaviour")


def cmd_data(args: argparse.Namespace) -> int:
    source = args.pattern
    if source in STANDARD_PATTERNS:
        A = standard_pattern(source)
    else:
        A = parse_pattern(_text_or_file(source))
    if args.check == "steady":
        _emit(args, {"pattern": render_pattern(A), "steadiness": steadiness(A, semantic=True, level=Config.LEVEL).value})
        return EXIT_OK
    if args.check == "basis":
        _emit(args, {"pattern": render_pattern(A), "basis": render_behaviour(basis(A))})
        return EXIT_OK
    if args.check in ("kleene", "monotone"):
        report = kleene_monotone_report(A, levels=Config.LEVEL, max_len=Config.MAX_LEN)
        _emit(args, {
            "pattern": report.pattern,
            "incarnation_sizes": report.incarnation_sizes,
            "visitable_sizes": report.visitable_sizes,
            "violation": report.violation,
        })
        return EXIT_OK if report.holds else EXIT_WITNESS
    return _behaviour_action(args, interpret(A, level=Config.LEVEL), "pattern")


def cmd_encode(args: argparse.Namespace) -> int:
    kind, value = args.kind, args.value
    try:
        if kind == "bool":
            if value.lower() not in ("true", "false"):
                raise UsageError("bool 값은 true 또는 false 입니다.")
            d = encode_bool(value.lower() == "true")
        elif kind == "nat":
            d = encode_nat(int(value))
        elif kind == "list":
            d = encode_list([encode_bool(v.strip().lower() == "true") for v in value.split(",") if v.strip()])
        else:
            d = encode_tree(json.loads(value.replace("(", "[").replace(")", "]") or "null"), leaf="b")
    except (ValueError, TypeError) as e:
        raise UsageError(f"값을 해석할 수 없습니다: {value} ({e})") from None
    _emit(args, {"kind": kind, "design": render_design(d)})
    return EXIT_OK


def cmd_func(args: argparse.Namespace) -> int:
    T = parse_functype(_text_or_file(args.type))
    if args.check:
        report = check_functional(T, Config.LEVEL, Config.MAX_LEN)
        _emit(args, report.to_dict())
        if not report.holds:
            return EXIT_WITNESS
    w = impurity_witness(T, Config.LEVEL, validate=True) if args.witness or not args.check else None
    if w is None:
        return EXIT_OK
    if isinstance(w, Pure):
        _emit(args, {"type": render_type(T), "criterion": "Pure"})
        console.print("[green]✅ 순수한 타입입니다.[/green]")
        return EXIT_OK
    if args.witness:
        _emit(args, w.to_dict())
        _write_dot(args, seq_to_dot(w.path, "witness"))
    else:
        _emit(args, {"type": render_type(T), "criterion": str(w.decomposition)})
    console.print(f"[red]❌ 순수하지 않습니다 (증거 경로 {len(w.path)} 행동)[/red]")
    return EXIT_WITNESS


def cmd_selftest(args: argparse.Namespace) -> int:
    def on_progress(percent, message):
        if not args.json:
            console.print(f"  [{percent:3d}%] {message}")

    report = run_selftest(Config.SEED, Config.LEVEL, args.max_len, quick=not args.full, on_progress=on_progress)
    if args.json:
        _emit(args, report.to_dict())
    else:
        table = Table(title=f"자체 검사 (seed={report.seed}, level={report.level}, max_len={report.max_len})")
        table.add_column("검사", style="cyan")
        table.add_column("결과")
        table.add_column("시간", justify="right", style="dim")
        for case in report.cases:
            verdict = "[green]성립[/green]" if case.holds else f"[red]실패[/red] {case.detail}"
            table.add_row(case.name, verdict, f"{case.seconds:.1f}s")
        console.print(table)
    return EXIT_OK if report.holds else EXIT_WITNESS


# ---------------------------------------------------------------
# 인자 해석
# ---------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--level", type=int, help=f"μ 근사 단계 (기본 {Config.LEVEL})")
    common.add_argument("--max-len", type=int, help=f"경로 길이 상한 (기본 {Config.MAX_LEN})")
    common.add_argument("--fuel", type=int, help=f"정규화 단계 상한 (기본 {Config.FUEL})")
    common.add_argument("--seed", type=int, help=f"표본 시드 (기본 {Config.SEED})")
    common.add_argument("--json", action="store_true", help="JSON 으로 출력")
    common.add_argument("--dot", metavar="PATH", help="DOT 그래프를 파일로 저장")
    common.add_argument("--trace", action="store_true", help="자세한 진행 과정 출력")

    parser = argparse.ArgumentParser(prog="ludics", description="ludics 디자인 / 행동 계산 엔진")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("normalize", parents=[common], help="디자인 정규화")
    p.add_argument("file")
    p.set_defaults(handler=cmd_normalize)

    for name, handler, text in (
        ("ortho", cmd_ortho, "직교성 검사"),
        ("interact", cmd_interact, "상호작용 경로"),
    ):
        p = sub.add_parser(name, parents=[common], help=text)
        p.add_argument("left")
        p.add_argument("right")
        p.set_defaults(handler=handler)

    p = sub.add_parser("minteract", parents=[common], help="멀티 디자인 상호작용 열")
    p.add_argument("left")
    p.add_argument("right")
    p.set_defaults(handler=cmd_minteract)
    p.add_argument("--restrict", metavar="VAR,VAR", help="상호작용 열을 왼쪽의 일부 음수 디자인으로 제한")

    for name, handler, text in (("paths", cmd_paths, "디자인의 경로"), ("tree", cmd_tree, "행동 숲 (DOT)")):
        p = sub.add_parser(name, parents=[common], help=text)
        p.add_argument("file")
        p.set_defaults(handler=handler)

    checks = ["incarnation", "paths", "visitable", "regular", "pure", "quasi-pure", "member"]
    p = sub.add_parser("behaviour", parents=[common], help="행동 식 검사")
    p.add_argument("expr", help="행동 식 텍스트 또는 파일")
    p.add_argument("check", choices=checks)
    p.add_argument("--design", help="member 검사할 디자인 파일")
    p.set_defaults(handler=cmd_behaviour)

    p = sub.add_parser("data", parents=[common], help="데이터 패턴 검사")
    p.add_argument("pattern", help="표준 이름(Bool, Nat, ...), 패턴 텍스트 또는 파일")
    p.add_argument("check", choices=checks + ["steady", "kleene", "monotone", "basis"])
    p.add_argument("--design", help="member 검사할 디자인 파일")
    p.set_defaults(handler=cmd_data)

    p = sub.add_parser("encode", parents=[common], help="표준 값의 디자인")
    p.add_argument("kind", choices=["bool", "nat", "list", "tree"])
    p.add_argument("value", help="예: true, 3, true,false, [null,null]")
    p.set_defaults(handler=cmd_encode)

    p = sub.add_parser("func", parents=[common], help="함수형 타입의 순수성")
    p.add_argument("type", help="타입 텍스트 또는 파일. 예: \"(Bool -o Bool) -o Bool\"")
    p.add_argument("--witness", action="store_true", help="비순수 증거(경로, p, n) 출력")
    p.add_argument("--check", action="store_true", help="정규성 / 준순수성 / 순수성 경로 검사")
    p.set_defaults(handler=cmd_func)

    p = sub.add_parser("selftest", parents=[common], help="자체 검사")
    p.add_argument("--full", action="store_true", help="전체 표본으로 검사")
    p.set_defaults(handler=cmd_selftest)
    return parser


def main(argv: list[str] | None = None) -> int:
    """명령줄 인수를 해석해 명령을 실행하고 종료 코드를 돌려줍니다."""
    argv = list(sys.argv[1:] if argv is None else argv)
    args = build_parser().parse_args(argv)
    args.argv = argv
    _setup_logging(args.trace)
    try:
        _apply_bounds(args)
        return args.handler(args)
    except UsageError as e:
        console.print(f"[red]❌ {e}[/red]")
        return EXIT_ERROR
    except LudicsError as e:
        console.print(Panel(f"[red]❌ {type(e).__name__}: {escape(str(e))}[/red]", title="오류", border_style="red"))
        return EXIT_ERROR
    except OSError as e:
        console.print(f"[red]❌ 파일 오류: {e}[/red]")
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())

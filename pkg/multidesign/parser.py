"""
parser.py - .mlud 멀티 디자인 파일 해석
========================================
형식 (한 줄에 하나, "--" 주석 허용, ":=" 가 없는 줄은 앞 항목에 이어 붙임):

    x   := a(y).(y|b<>)
    z   := {}
    pos := x|a<c().#>
"""

from __future__ import annotations

import re

from core.errors import DesignSyntaxError, MultiDesignError
from core.parser import parse_source
from core.syntax import Neg, Signature
from multidesign.multi import MultiDesign

_ENTRY = re.compile(r"^\s*([A-Za-z][A-Za-z0-9']*)\s*:=\s*(.*)$")


def parse_multi(text: str, signature: Signature | None = None) -> tuple[MultiDesign, Signature]:
    """
    .mlud 텍스트를 MultiDesign 으로 바꿉니다.

    Returns:
        (멀티 디자인, 모든 항목에서 모은 시그니처)
    """
    entries: list[list] = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        body = line.split("--", 1)[0].rstrip()
        if not body.strip():
            continue
        m = _ENTRY.match(body)
        if m:
            entries.append([m.group(1), m.group(2), lineno])
        elif entries:
            entries[-1][1] += " " + body.strip()
        else:
            raise DesignSyntaxError("'이름 := 디자인' 형식이 아닙니다", lineno, 1)

    sig = Signature(dict(signature.arities)) if signature is not None else Signature()
    negatives: dict[str, Neg] = {}
    positive = None
    for key, source, lineno in entries:
        parsed = parse_source(source)
        sig = sig.merged(parsed.signature)
        if key == "pos":
            if positive is not None or isinstance(parsed.design, Neg):
                raise MultiDesignError(f"줄 {lineno}: pos 항목은 양수 디자인 하나만 올 수 있습니다.")
            positive = parsed.design
        else:
            if not isinstance(parsed.design, Neg):
                raise MultiDesignError(f"줄 {lineno}: 자리 '{key}' 에는 음수 디자인이 와야 합니다.")
            if key in negatives:
                raise MultiDesignError(f"줄 {lineno}: 자리 '{key}' 가 두 번 정의되었습니다.")
            negatives[key] = parsed.design
    return MultiDesign.of(negatives, positive), sig

"""자체 검사 파이프라인"""

import pytest

from pipeline import run_selftest


@pytest.mark.slow
def test_quick_selftest_reports_progress():
    seen = []
    report = run_selftest(seed=0, level=3, max_len=10, on_progress=lambda p, m: seen.append(p))
    assert seen[-1] == 100
    assert seen == sorted(seen)
    assert len(report.cases) == 11
    by_name = {case.name: case for case in report.cases}
    for name in ("dual 대합", "직교성 ⇔ 상호작용 경로", "Cut 교환 법칙", "정규화 결합 법칙", "경로 결합 법칙", "Nat 크기 1, 4, 7, 10", "11 행동 예제"):
        assert by_name[name].holds, by_name[name].detail
    data = report.to_dict()
    assert data["seed"] == 0
    assert len(data["cases"]) == 11

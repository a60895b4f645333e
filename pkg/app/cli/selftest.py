"""
selftest: fixtures/*.json의 예제를 dispatch()로 실행하고 기대값과 비교합니다.

fixture 파일은 다음 항목의 JSON 목록입니다.

    {
        "name": "delta-y-y2",
        "argv": ["delta", "--ring", "Z", "y", "y+2"],
        "exit_code": 0,
        "expect": {"result.delta": 2, "result.cofactors[0]": "-1"},
        "contains": {"result.report.hits": [1, 2, 3]},
        "excludes": {"result.report.hits": [0, -1]}
    }

경로는 점(.)과 [인덱스]로 출력 JSON 안의 값을 가리킵니다.
"""

import json
import random
import re
from pathlib import Path
from typing import Any, Dict, List, Optional

from pydantic import BaseModel, Field, TypeAdapter

from app.errors import ConfigError
from app.schemas.base import BaseRecord
from common.utils.logger import get_logger

logger = get_logger(__name__)

FIXTURE_DIR = Path(__file__).resolve().parents[2] / "fixtures"

_PATH_PART = re.compile(r"([^.\[\]]+)|\[(-?\d+)\]")


class Fixture(BaseModel):
    name: str
    argv: List[str]
    exit_code: int = 0
    expect: Dict[str, Any] = Field(default_factory=dict)
    contains: Dict[str, List[Any]] = Field(default_factory=dict)
    excludes: Dict[str, List[Any]] = Field(default_factory=dict)


class FixtureOutcome(BaseRecord):
    name: str
    ok: bool
    exit_code: int
    mismatches: List[str] = Field(default_factory=list)


class SelftestReport(BaseRecord):
    passed: int
    failed: int
    outcomes: List[FixtureOutcome]


_MISSING = object()


def lookup(payload: Any, path: str) -> Any:
    """출력 JSON에서 "result.cofactors[0]" 같은 경로의 값을 꺼냅니다."""
    value = payload
    for key, index in _PATH_PART.findall(path):
        try:
            value = value[int(index)] if index else value[key]
        except (KeyError, IndexError, TypeError):
            return _MISSING
    return value


def load_fixtures(directory: Optional[str] = None) -> List[Fixture]:
    root = Path(directory) if directory else FIXTURE_DIR
    files = sorted(root.glob("*.json"))
    if not files:
        raise ConfigError(f"fixture 파일이 없습니다: {root}")
    adapter = TypeAdapter(List[Fixture])
    fixtures: List[Fixture] = []
    for path in files:
        fixtures.extend(adapter.validate_json(path.read_text(encoding="utf-8")))
    return fixtures


def check_fixture(fixture: Fixture) -> FixtureOutcome:
    from app.cli.commands import dispatch

    code, output = dispatch(fixture.argv)
    mismatches = []
    if code != fixture.exit_code:
        mismatches.append(f"exit_code: {code} != {fixture.exit_code}")
    payload = json.loads(output)
    for path, expected in fixture.expect.items():
        actual = lookup(payload, path)
        if actual != expected:
            shown = "없음" if actual is _MISSING else repr(actual)
            mismatches.append(f"{path}: {shown} != {expected!r}")
    for path, members in fixture.contains.items():
        actual = lookup(payload, path)
        missing = [v for v in members if actual is _MISSING or v not in actual]
        if missing:
            mismatches.append(f"{path}에 {missing} 없음")
    for path, members in fixture.excludes.items():
        actual = lookup(payload, path)
        present = [v for v in members if actual is not _MISSING and v in actual]
        if present:
            mismatches.append(f"{path}에 {present} 포함")
    return FixtureOutcome(
        name=fixture.name, ok=not mismatches, exit_code=code, mismatches=mismatches
    )


def run_fixtures(
    directory: Optional[str] = None, sample: Optional[int] = None, seed: int = 0
) -> SelftestReport:
    """
    fixture를 실행합니다. sample이 주어지면 seed로 그만큼만 무작위 추출합니다.
    """
    fixtures = load_fixtures(directory)
    if sample is not None and sample < len(fixtures):
        fixtures = random.Random(seed).sample(fixtures, sample)

    outcomes = []
    for fixture in fixtures:
        outcome = check_fixture(fixture)
        if not outcome.ok:
            reason = "; ".join(outcome.mismatches)
            logger.warning(f"[selftest] {fixture.name} 실패: {reason}")
        outcomes.append(outcome)
    passed = sum(o.ok for o in outcomes)
    logger.info(f"[selftest] {passed}/{len(outcomes)} 통과")
    return SelftestReport(
        passed=passed, failed=len(outcomes) - passed, outcomes=outcomes
    )

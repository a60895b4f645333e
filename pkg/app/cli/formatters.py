"""
출력 형식 모듈 (json / table)
"""

from typing import Any, Iterator, Tuple

from app.schemas.run import CommandResult


def _flatten(prefix: str, value: Any) -> Iterator[Tuple[str, str]]:
    if isinstance(value, dict) and value:
        for key, item in value.items():
            yield from _flatten(f"{prefix}.{key}" if prefix else str(key), item)
    elif isinstance(value, list) and value and isinstance(value[0], (dict, list)):
        for i, item in enumerate(value):
            yield from _flatten(f"{prefix}[{i}]", item)
    elif isinstance(value, list):
        yield prefix, ", ".join(str(v) for v in value)
    else:
        yield prefix, "-" if value is None else str(value)


def format_table(result: CommandResult, ascending: bool = False) -> str:
    """결과 봉투를 "키  값" 두 열의 표로 렌더링합니다."""
    payload = result.model_dump(
        mode="json", by_alias=True, context={"ascending": ascending}
    )
    rows = list(_flatten("", payload))
    width = max(len(key) for key, _ in rows)
    return "\n".join(f"{key.ljust(width)}  {text}" for key, text in rows)


def render(result: CommandResult, fmt: str = "json", ascending: bool = False) -> str:
    if fmt == "table":
        return format_table(result, ascending)
    return result.to_json(ascending=ascending)

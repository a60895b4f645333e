"""
결과 레코드 기본 모델

이 모듈은 모든 결과 레코드가 상속하는 Pydantic 기본 모델을 정의합니다.
환의 원소(Poly, Fraction, 유리함수)는 JSON 출력 시 문자열로 직렬화되고
정수는 JSON 정수로 유지됩니다. 직렬화 context의 "ascending" 값이 참이면
다항식을 오름차순으로 렌더링합니다.
"""

from fractions import Fraction
from typing import Any

from pydantic import BaseModel, ConfigDict, SerializationInfo, field_serializer


def to_jsonable(value: Any, ascending: bool = False) -> Any:
    """
    결과 값을 JSON 호환 값으로 변환합니다.

    Args:
        value: 정수, 유리수, 다항식, 환 기술자, 레코드 또는 그 컨테이너
        ascending: 다항식을 차수 오름차순으로 렌더링할지 여부

    Returns:
        Any: JSON으로 직렬화 가능한 값
    """
    from app.polys.poly import Poly
    from app.polys.rings import Ring

    if value is None or isinstance(value, (bool, int, str, float)):
        return value
    if isinstance(value, Fraction):
        return value.numerator if value.denominator == 1 else str(value)
    if isinstance(value, Poly):
        return value.ring.to_str(value, ascending)
    if isinstance(value, Ring):
        return value.name
    if isinstance(value, BaseModel):
        return value.model_dump(mode="json", context={"ascending": ascending})
    if isinstance(value, dict):
        return {
            str(to_jsonable(k, ascending)): to_jsonable(v, ascending)
            for k, v in value.items()
        }
    if isinstance(value, (list, tuple, set, frozenset)):
        items = [to_jsonable(v, ascending) for v in value]
        return sorted(items, key=str) if isinstance(value, (set, frozenset)) else items
    return str(value)


class BaseRecord(BaseModel):
    """모든 결과 레코드를 위한 기본 Pydantic 모델"""

    model_config = ConfigDict(
        arbitrary_types_allowed=True,
        frozen=True,
    )

    @field_serializer("*")
    def serialize_elements(self, value: Any, info: SerializationInfo) -> Any:
        """환의 원소를 JSON 값으로 직렬화합니다."""
        ascending = bool(info.context and info.context.get("ascending"))
        return to_jsonable(value, ascending)

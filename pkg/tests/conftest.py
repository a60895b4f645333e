import pytest

from app.cli.parser import parse_family, parse_ring
from app.config import settings


def family(*texts, ring="Z", bivariate=None):
    """문자열 식들을 한 환의 다항식 목록으로 파싱합니다."""
    return parse_family(texts, parse_ring(ring), bivariate)


@pytest.fixture
def parse():
    return family


@pytest.fixture(autouse=True)
def restore_settings():
    """테스트가 바꾼 전역 배율/시드를 되돌립니다."""
    saved = (settings.BUDGET_SCALE, settings.SEED)
    yield
    settings.BUDGET_SCALE, settings.SEED = saved

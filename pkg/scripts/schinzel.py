#!/usr/bin/env python
"""
상대 Schinzel 증인 도구 실행 스크립트

사용법:
    python scripts/schinzel.py delta --ring Z "y" "y+2"
    python scripts/schinzel.py find-coprime --ring "Z[u]" "y" "y+u"
    python scripts/schinzel.py hilbert-scan "y^2 + t" --want 5
    python scripts/schinzel.py goldbach-mod-n --two-n 100 --mod 7
    python scripts/schinzel.py --budget-scale 1/2 selftest --sample 5 --seed 3

공통 옵션 (명령 이름 앞):
    --format json|table   출력 형식 (기본값: json)
    --ascending           다항식을 오름차순으로 출력
    --budget-scale S      모든 상한에 곱할 양의 유리수
    --seed N              무작위 표본 시드
    --log-level LEVEL     로깅 레벨

"-"로 시작하는 다항식은 "--" 뒤에 적습니다: delta -- "-y" "y+2"
"""
import sys
from pathlib import Path

# 상위 디렉토리를 모듈 경로에 추가 (단독 실행 시 필요)
sys.path.append(str(Path(__file__).parent.parent))

from app.cli.commands import main  # noqa: E402

if __name__ == "__main__":
    sys.exit(main())

"""
Schinzel 패키지

δ 인증서(Bézout), 값에 대한 가정(AV) 검사기, 서로소 값 증인 탐색,
gcd 프로파일과 밀도 분석을 제공합니다.
"""

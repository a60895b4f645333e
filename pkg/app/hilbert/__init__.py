"""
Hilbert 특수화 패키지

원시성 등차수열, 기약 특수화 스캔, mod-N Schinzel/Goldbach 탐색을 제공합니다.
"""

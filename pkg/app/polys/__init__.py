"""
다항식 패키지

계수 환 기술자, 조밀 다항식, gcd/종결식, 유한체 및 ℤ 위 인수분해를 제공합니다.
"""

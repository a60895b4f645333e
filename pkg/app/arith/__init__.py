"""
정확 산술 패키지

정수 연산(확장 유클리드, CRT, 소수 판정, 소인수분해)과 정수 격자(HNF)를 제공합니다.
"""

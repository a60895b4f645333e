"""
F_p[x] 저수준 연산

계수는 오름차순 int 리스트([a0, a1, ...], 0 <= ai < p)로 다룹니다.
square-free 분해와 Berlekamp 분해가 이 표현 위에서 동작합니다.
"""

from typing import List, Tuple

from app.errors import ZeroInput

GF = List[int]


def gf_strip(f: GF) -> GF:
    f = list(f)
    while f and f[-1] == 0:
        f.pop()
    return f


def gf_degree(f: GF) -> int:
    return len(f) - 1


def gf_add(f: GF, g: GF, p: int) -> GF:
    n = max(len(f), len(g))
    return gf_strip(
        [
            ((f[i] if i < len(f) else 0) + (g[i] if i < len(g) else 0)) % p
            for i in range(n)
        ]
    )


def gf_sub(f: GF, g: GF, p: int) -> GF:
    n = max(len(f), len(g))
    return gf_strip(
        [
            ((f[i] if i < len(f) else 0) - (g[i] if i < len(g) else 0)) % p
            for i in range(n)
        ]
    )


def gf_mul(f: GF, g: GF, p: int) -> GF:
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] = (out[i + j] + a * b) % p
    return gf_strip(out)


def gf_divmod(f: GF, g: GF, p: int) -> Tuple[GF, GF]:
    if not g:
        raise ZeroInput("영다항식으로 나눌 수 없습니다")
    df, dg = len(f) - 1, len(g) - 1
    if df < dg:
        return [], list(f)
    inverse = pow(g[-1], -1, p)
    r = list(f)
    q = [0] * (df - dg + 1)
    for k in range(df - dg, -1, -1):
        c = r[k + dg] * inverse % p
        q[k] = c
        if c:
            for j, b in enumerate(g):
                r[k + j] = (r[k + j] - c * b) % p
    return gf_strip(q), gf_strip(r[:dg])


def gf_rem(f: GF, g: GF, p: int) -> GF:
    return gf_divmod(f, g, p)[1]


def gf_quo(f: GF, g: GF, p: int) -> GF:
    return gf_divmod(f, g, p)[0]


def gf_monic(f: GF, p: int) -> Tuple[int, GF]:
    if not f:
        return 0, []
    lc = f[-1]
    inverse = pow(lc, -1, p)
    return lc, [a * inverse % p for a in f]


def gf_gcd(f: GF, g: GF, p: int) -> GF:
    while g:
        f, g = g, gf_rem(f, g, p)
    return gf_monic(f, p)[1]


def gf_diff(f: GF, p: int) -> GF:
    return gf_strip([i * a % p for i, a in enumerate(f)][1:])


def gf_pow_mod(f: GF, n: int, g: GF, p: int) -> GF:
    """f^n mod g"""
    result, base = [1], gf_rem(f, g, p)
    while n:
        if n & 1:
            result = gf_rem(gf_mul(result, base, p), g, p)
        base = gf_rem(gf_mul(base, base, p), g, p)
        n >>= 1
    return result


def gf_sqf_list(f: GF, p: int) -> Tuple[int, List[Tuple[GF, int]]]:
    """
    square-free 분해

    Returns:
        (lc, [(f_i, e_i), ...]): f = lc · ∏ f_i^e_i, f_i는 모닉 square-free이며 서로소
    """
    lc, f = gf_monic(f, p)
    if gf_degree(f) < 1:
        return lc, []

    n, factors = 1, []
    while True:
        F = gf_diff(f, p)
        sqf = False
        if F:
            g = gf_gcd(f, F, p)
            h = gf_quo(f, g, p)
            i = 1
            while h != [1]:
                G = gf_gcd(g, h, p)
                H = gf_quo(h, G, p)
                if gf_degree(H) > 0:
                    factors.append((H, i * n))
                g, h, i = gf_quo(g, G, p), G, i + 1
            if g == [1]:
                sqf = True
            else:
                f = g
        if sqf:
            break
        # 도함수가 0이면 f(x) = g(x^p)
        f = [f[i * p] for i in range(gf_degree(f) // p + 1)]
        n *= p
    return lc, factors


def gf_qmatrix(f: GF, p: int) -> List[GF]:
    """Berlekamp 행렬: i번째 행은 x^(i·p) mod f의 계수"""
    n = gf_degree(f)
    xp = gf_pow_mod([0, 1], p, f, p)
    rows, row = [], [1]
    for _ in range(n):
        rows.append(row + [0] * (n - len(row)))
        row = gf_rem(gf_mul(row, xp, p), f, p)
    return rows


def gf_nullspace(M: List[GF], p: int) -> List[GF]:
    """M·v = 0 의 해공간 기저 (기약 행 사다리꼴)"""
    rows = [list(r) for r in M]
    n = len(rows[0]) if rows else 0
    pivots: List[int] = []
    r = 0
    for c in range(n):
        pivot = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inverse = pow(rows[r][c], -1, p)
        rows[r] = [a * inverse % p for a in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                k = rows[i][c]
                rows[i] = [(a - k * b) % p for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1

    basis = []
    for free in (c for c in range(n) if c not in pivots):
        v = [0] * n
        v[free] = 1
        for i, c in enumerate(pivots):
            v[c] = -rows[i][free] % p
        basis.append(v)
    return basis


def berlekamp_cost(f: GF, p: int) -> int:
    """Berlekamp 분해의 대략적인 연산 횟수"""
    n = gf_degree(f)
    return n**3 + p * n * n


def gf_berlekamp(f: GF, p: int) -> List[GF]:
    """
    모닉 square-free 다항식 f를 모닉 기약 인수들로 분해합니다.
    """
    n = gf_degree(f)
    if n <= 1:
        return [f]
    Q = gf_qmatrix(f, p)
    # v^p ≡ v (mod f)  ⟺  (Q - I)^T v = 0
    M = [[(Q[i][j] - (1 if i == j else 0)) % p for i in range(n)] for j in range(n)]
    basis = gf_nullspace(M, p)
    if len(basis) == 1:
        return [f]

    factors = [f]
    for v in basis[1:]:
        v = gf_strip(v)
        for g in list(factors):
            if gf_degree(g) <= 1:
                continue
            for s in range(p):
                h = gf_gcd(g, gf_sub(v, [s], p), p)
                if 0 < gf_degree(h) < gf_degree(g):
                    factors.remove(g)
                    g = gf_quo(g, h, p)
                    factors.extend([g, h])
                if len(factors) == len(basis):
                    return factors
    return factors

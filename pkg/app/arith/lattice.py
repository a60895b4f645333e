"""
정수 격자 모듈

행(row) 방식 에르미트 표준형(HNF)과 분수 없는(Bareiss) 행렬식을 제공합니다.
유클리드 환(ℤ, F_p[u])이면 어떤 환 위에서도 같은 코드로 동작합니다.
"""

from dataclasses import dataclass, field
from typing import Any, List, Sequence, Tuple

from app.errors import ZeroInput
from app.polys.rings import ZZ, Ring


@dataclass(frozen=True)
class IntMatrix:
    """
    직사각형 행렬 (기본 원소 환은 ℤ)

    Attributes:
        rows: 행의 튜플
        ring: 원소가 속한 유클리드 환
    """

    rows: Tuple[Tuple[Any, ...], ...]
    ring: Ring = field(default=ZZ, compare=False)

    def __post_init__(self):
        if not self.rows or not self.rows[0]:
            raise ZeroInput("행렬의 크기는 1 이상이어야 합니다")
        width = len(self.rows[0])
        if any(len(row) != width for row in self.rows):
            raise ValueError("행렬이 직사각형이 아닙니다")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Any]], ring: Ring = ZZ) -> "IntMatrix":
        return cls(tuple(tuple(ring.convert(x) for x in row) for row in rows), ring)

    @classmethod
    def identity(cls, n: int, ring: Ring = ZZ) -> "IntMatrix":
        return cls(
            tuple(
                tuple(ring.one if i == j else ring.zero for j in range(n))
                for i in range(n)
            ),
            ring,
        )

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return len(self.rows[0])

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        R = self.ring
        if self.ncols != other.nrows:
            raise ValueError("행렬 곱의 크기가 맞지 않습니다")
        cols = list(zip(*other.rows))
        return IntMatrix(
            tuple(
                tuple(
                    _dot(R, row, col)
                    for col in cols
                )
                for row in self.rows
            ),
            R,
        )

    def to_lists(self) -> List[List[str]]:
        """JSON 출력을 위한 문자열 행렬"""
        return [[self.ring.to_str(x) for x in row] for row in self.rows]


def _dot(R: Ring, row: Sequence[Any], col: Sequence[Any]) -> Any:
    acc = R.zero
    for a, b in zip(row, col):
        acc = R.add(acc, R.mul(a, b))
    return acc


def _combine(R: Ring, top, bottom, x, y, s, t):
    # (top, bottom) ← (x·top + y·bottom, s·top + t·bottom)
    new_top = [R.add(R.mul(x, a), R.mul(y, b)) for a, b in zip(top, bottom)]
    new_bottom = [R.add(R.mul(s, a), R.mul(t, b)) for a, b in zip(top, bottom)]
    return new_top, new_bottom


def hermite_normal_form(M: IntMatrix) -> Tuple[IntMatrix, IntMatrix]:
    """
    행 방식 에르미트 표준형을 계산합니다.

    Returns:
        (H, U): U는 가역(|det U| = 1), H = U·M, H는 계단형이며
        피벗은 정규화(ℤ에서는 양수, F_p[u]에서는 모닉)되고
        피벗 위의 원소는 피벗으로 환원되어 있습니다.
    """
    R = M.ring
    m, n = M.nrows, M.ncols
    H = [list(row) for row in M.rows]
    U = [list(row) for row in IntMatrix.identity(m, R).rows]

    r = 0
    for col in range(n):
        if r == m:
            break
        for i in range(r + 1, m):
            b = H[i][col]
            if R.is_zero(b):
                continue
            a = H[r][col]
            g, x, y = R.ext_gcd(a, b)
            s, t = R.neg(R.exquo(b, g)), R.exquo(a, g)
            H[r], H[i] = _combine(R, H[r], H[i], x, y, s, t)
            U[r], U[i] = _combine(R, U[r], U[i], x, y, s, t)

        pivot = H[r][col]
        if R.is_zero(pivot):
            continue

        unit = R.unit_part(pivot)
        if unit != R.one:
            inverse = R.unit_inverse(unit)
            H[r] = [R.mul(inverse, a) for a in H[r]]
            U[r] = [R.mul(inverse, a) for a in U[r]]
            pivot = H[r][col]

        # 피벗 위의 원소 환원
        for i in range(r):
            q = R.quo(H[i][col], pivot)
            if R.is_zero(q):
                continue
            H[i] = [R.sub(a, R.mul(q, b)) for a, b in zip(H[i], H[r])]
            U[i] = [R.sub(a, R.mul(q, b)) for a, b in zip(U[i], U[r])]
        r += 1

    to_matrix = lambda rows: IntMatrix(  # noqa: E731
        tuple(tuple(row) for row in rows), R
    )
    return to_matrix(H), to_matrix(U)


def pivot_columns(H: IntMatrix) -> List[Tuple[int, int]]:
    """계단형 행렬의 (행, 피벗 열) 목록"""
    R = H.ring
    pivots = []
    for i, row in enumerate(H.rows):
        for j, a in enumerate(row):
            if not R.is_zero(a):
                pivots.append((i, j))
                break
    return pivots


def is_hermite_normal_form(H: IntMatrix) -> bool:
    """HNF 형태 조건(계단형, 정규화된 피벗, 환원된 상단 원소)을 검사합니다."""
    R = H.ring
    pivots = pivot_columns(H)
    # 영행은 모두 아래쪽에 있어야 합니다.
    if [i for i, _ in pivots] != list(range(len(pivots))):
        return False
    columns = [j for _, j in pivots]
    if columns != sorted(set(columns)):
        return False
    for i, j in pivots:
        pivot = H.rows[i][j]
        if R.unit_part(pivot) != R.one:
            return False
        for k in range(i):
            if not R.is_zero(R.quo(H.rows[k][j], pivot)):
                return False
    return True


def determinant(M: IntMatrix) -> Any:
    """
    분수 없는 Bareiss 소거로 정사각 행렬의 행렬식을 계산합니다.
    """
    R = M.ring
    n = M.nrows
    if M.ncols != n:
        raise ValueError("정사각 행렬이 아닙니다")
    A = [list(row) for row in M.rows]
    sign = R.one
    previous = R.one
    for k in range(n - 1):
        if R.is_zero(A[k][k]):
            swap = next((i for i in range(k + 1, n) if not R.is_zero(A[i][k])), None)
            if swap is None:
                return R.zero
            A[k], A[swap] = A[swap], A[k]
            sign = R.neg(sign)
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = R.exquo(
                    R.sub(R.mul(A[i][j], A[k][k]), R.mul(A[i][k], A[k][j])), previous
                )
        previous = A[k][k]
    return R.mul(sign, A[n - 1][n - 1])

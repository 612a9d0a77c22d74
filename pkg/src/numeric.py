"""
数值算子与 f-向量可行性

∂_d 与 Inc^[d] 都从 d-二项式表示计算。f-向量中 f_{d-1} 表示 d-集合的个数，
违例报告里的 d 一律指集合大小。
"""

from dataclasses import dataclass
from typing import Iterable, Literal, Optional, Tuple

from .errors import PreconditionError
from .logger import get_logger
from .sets import binomial_rep, checked_add, checked_comb

logger = get_logger("Numeric")


def shadow_num(m: int, d: int) -> int:
    """∂_d(m) = C(a_d, d-1) + ... + C(a_s, s-1)，∂_d(0) = 0"""
    total = 0
    for a, i in binomial_rep(m, d).terms:
        total = checked_add(total, checked_comb(a, i - 1))
    return total


def inc_num(m: int, d: int) -> int:
    """Inc^[d](m) = C(a_d+1, d) + ... + C(a_s+1, s)，Inc^[d](0) = 0"""
    total = 0
    for a, i in binomial_rep(m, d).terms:
        total = checked_add(total, checked_comb(a + 1, i))
    return total


def _check_entries(values: Iterable[int], what: str) -> Tuple[int, ...]:
    entries = tuple(values)
    for x in entries:
        if isinstance(x, bool) or not isinstance(x, int) or x < 0:
            raise PreconditionError(f"{what} 的分量必须是非负整数: {x!r}")
    return entries


@dataclass(frozen=True)
class FVector:
    """f = (f_0, f_1, ...)，f_{d-1} 为 d-集合的个数；末尾的 0 不保存，(2,0) 与 (2) 相等"""

    entries: Tuple[int, ...] = ()

    def __post_init__(self) -> None:
        entries = _check_entries(self.entries, "f-向量")
        while entries and entries[-1] == 0:
            entries = entries[:-1]
        object.__setattr__(self, "entries", entries)

    @classmethod
    def of(cls, *entries: int) -> "FVector":
        return cls(tuple(entries))

    def count(self, d: int) -> int:
        """d-集合的个数 f_{d-1}，超出长度为 0"""
        return self.entries[d - 1] if 1 <= d <= len(self.entries) else 0

    @property
    def top(self) -> int:
        """最大的非零集合大小"""
        return len(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.entries)) + ")"


@dataclass(frozen=True)
class FVectorChain:
    """f_1, f_2, ..., f_N，下标 n 从 1 开始"""

    vectors: Tuple[FVector, ...]

    def __post_init__(self) -> None:
        vectors = tuple(v if isinstance(v, FVector) else FVector(tuple(v)) for v in self.vectors)
        if not vectors:
            raise PreconditionError("f-向量链不能为空")
        object.__setattr__(self, "vectors", vectors)

    def __len__(self) -> int:
        return len(self.vectors)

    def __getitem__(self, n: int) -> FVector:
        """按 1 开始的下标取 f_n"""
        return self.vectors[n - 1]


@dataclass(frozen=True)
class KKViolation:
    """∂_d(f_{d-1}) > f_{d-2}"""

    d: int
    shadow: int
    available: int

    def __str__(self) -> str:
        return f"d={self.d}: ∂_{self.d}(f_{self.d - 1}) = {self.shadow} > f_{self.d - 2} = {self.available}"


@dataclass(frozen=True)
class ChainViolation:
    """链中第一个不成立的不等式"""

    n: int
    d: int
    kind: Literal["kruskal_katona", "growth"]
    required: int
    actual: int

    def __str__(self) -> str:
        if self.kind == "kruskal_katona":
            return f"n={self.n}, d={self.d}: ∂_{self.d}(f_{{n,{self.d - 1}}}) = {self.required} > {self.actual}"
        return f"n={self.n}, d={self.d}: f_{{n+1,{self.d - 1}}} = {self.actual} < Inc^[{self.d}] = {self.required}"


@dataclass(frozen=True)
class Feasibility:
    """可行性结果，不可行时带上第一个违例"""

    ok: bool
    violation: Optional[object] = None

    def __bool__(self) -> bool:
        return self.ok


def _first_kk_violation(f: FVector) -> Optional[KKViolation]:
    for d in range(2, len(f) + 1):
        needed = shadow_num(f.count(d), d)
        if needed > f.count(d - 1):
            return KKViolation(d=d, shadow=needed, available=f.count(d - 1))
    return None


def kk_feasible(f: FVector) -> Feasibility:
    """Kruskal-Katona 条件：对所有 d ≥ 2 有 ∂_d(f_{d-1}) ≤ f_{d-2}"""
    violation = _first_kk_violation(f)
    return Feasibility(ok=violation is None, violation=violation)


def chain_feasible(chain: FVectorChain) -> Feasibility:
    """
    组合 Inc-不变链的 f-向量条件

    每个 f_n 满足 Kruskal-Katona 条件，且 f_{n+1,d-1} ≥ Inc^[d](f_{n,d-1})。
    返回 (n, d) 最小的违例；同一 (n, d) 上先报告 Kruskal-Katona。
    """
    for n in range(1, len(chain) + 1):
        f = chain[n]
        candidates = []
        kk = _first_kk_violation(f)
        if kk is not None:
            candidates.append(ChainViolation(n, kk.d, "kruskal_katona", kk.shadow, kk.available))
        if n < len(chain):
            following = chain[n + 1]
            for d in range(1, len(f) + 1):
                required = inc_num(f.count(d), d)
                if following.count(d) < required:
                    candidates.append(ChainViolation(n, d, "growth", required, following.count(d)))
                    break
        if candidates:
            first = min(candidates, key=lambda v: (v.d, v.kind != "kruskal_katona"))
            logger.debug(f"f-向量链不可行: {first}")
            return Feasibility(ok=False, violation=first)
    return Feasibility(ok=True)

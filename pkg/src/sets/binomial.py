"""
d-二项式表示与 squashed 序上的秩

m = C(a_d, d) + C(a_{d-1}, d-1) + ... + C(a_s, s)，a_d > ... > a_s ≥ s ≥ 1。
所有二项式系数限制在有符号64位整数内，越界直接抛 BinomialOverflowError。
"""

from dataclasses import dataclass
from math import comb
from typing import Dict, Optional, Tuple

from ..errors import BinomialOverflowError, InvalidDSetError, PreconditionError
from .dset import DSet

MAX_BINOMIAL = 2**63 - 1


def checked_comb(n: int, k: int) -> int:
    """C(n, k)，n < k 时为 0"""
    if n < 0 or k < 0 or n < k:
        return 0
    value = comb(n, k)
    if value > MAX_BINOMIAL:
        raise BinomialOverflowError(f"C({n}, {k}) 超出64位整数范围")
    return value


def checked_add(a: int, b: int) -> int:
    total = a + b
    if total > MAX_BINOMIAL:
        raise BinomialOverflowError(f"{a} + {b} 超出64位整数范围")
    return total


@dataclass(frozen=True)
class BinomialRep:
    """d-二项式表示，terms 为 (a_i, i)，i 从 d 连续递减到 s"""

    terms: Tuple[Tuple[int, int], ...] = ()

    def __post_init__(self) -> None:
        terms = tuple((int(a), int(i)) for a, i in self.terms)
        for (a_hi, i_hi), (a_lo, i_lo) in zip(terms, terms[1:]):
            if i_lo != i_hi - 1:
                raise PreconditionError(f"下标必须连续递减: {terms}")
            if not a_hi > a_lo:
                raise PreconditionError(f"系数必须严格递减: {terms}")
        if terms:
            a_s, s = terms[-1]
            if s < 1 or a_s < s:
                raise PreconditionError(f"要求 a_s ≥ s ≥ 1: {terms}")
        object.__setattr__(self, "terms", terms)

    @property
    def d(self) -> Optional[int]:
        return self.terms[0][1] if self.terms else None

    @property
    def s(self) -> Optional[int]:
        return self.terms[-1][1] if self.terms else None

    @property
    def coefficients(self) -> Dict[int, int]:
        """下标 i -> a_i"""
        return {i: a for a, i in self.terms}

    @property
    def value(self) -> int:
        return rank_sum(self)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"C({a},{i})" for a, i in self.terms)


def rank_sum(rep: BinomialRep) -> int:
    total = 0
    for a, i in rep.terms:
        total = checked_add(total, checked_comb(a, i))
    return total


def _largest_top(m: int, i: int) -> int:
    """满足 C(a, i) ≤ m 的最大 a（要求 m ≥ 1）"""
    lo, hi = i, i + 1
    while comb(hi, i) <= m:
        lo, hi = hi, i + 2 * (hi - i)
    # 不变式: C(lo, i) ≤ m < C(hi, i)
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if comb(mid, i) <= m:
            lo = mid
        else:
            hi = mid
    return lo


def binomial_rep(m: int, d: int) -> BinomialRep:
    """贪心求 m 的 d-二项式表示，m = 0 时返回空表示"""
    if d < 1:
        raise PreconditionError(f"d 必须 ≥ 1: {d}")
    if m < 0:
        raise PreconditionError(f"m 必须 ≥ 0: {m}")
    if m > MAX_BINOMIAL:
        raise BinomialOverflowError(f"m = {m} 超出64位整数范围")
    terms = []
    remaining = m
    i = d
    while remaining > 0:
        a = _largest_top(remaining, i)
        terms.append((a, i))
        remaining -= comb(a, i)
        i -= 1
    return BinomialRep(tuple(terms))


def rank(u: DSet) -> int:
    """u 在 binom(N, d) 的 squashed 序中的位置（从 1 开始），即 |C(u)|"""
    total = 1
    for i, x in enumerate(u.elements, start=1):
        total = checked_add(total, checked_comb(x - 1, i))
    return total


def unrank(m: int, d: int) -> DSet:
    """squashed 序中第 m 个 d-集合"""
    if m < 1:
        raise PreconditionError(f"m 必须 ≥ 1: {m}")
    rep = binomial_rep(m, d)
    a = rep.coefficients
    s = rep.s
    head = tuple(range(a[s] - s + 1, a[s] + 1))
    tail = tuple(a[i] + 1 for i in range(s + 1, d + 1))
    elements = head + tail
    if elements[0] < 1:
        raise InvalidDSetError(f"无法还原第 {m} 个 {d}-集合")
    return DSet._trusted(elements)

"""
有限宇宙 binom([n], d) 上的位掩码编码

第 i 位（从 0 开始）表示 squashed 序中第 i + 1 个 d-集合，也就是秩为 i + 1 的集合。
压缩族恰好是低位连续的掩码 (1 << m) - 1。
"""

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, islice
from math import comb
from typing import Iterator, Tuple

from ..errors import PreconditionError
from ..inc_action import image_tuples
from ..sets import DSet, Family, iter_squashed, rank


def iter_bits(mask: int) -> Iterator[int]:
    """从低到高给出所有置位的下标"""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def masks_of_weight(weight: int, width: int) -> Iterator[int]:
    """width 位中恰有 weight 个 1 的全部掩码，按数值升序"""
    if weight < 0 or weight > width:
        return
    if weight == 0:
        yield 0
        return
    mask = (1 << weight) - 1
    limit = 1 << width
    while mask < limit:
        yield mask
        # Gosper: 下一个同样多 1 的更大整数
        low = mask & -mask
        ripple = mask + low
        mask = (((ripple ^ mask) >> 2) // low) | ripple


def _rank_index(elements: Tuple[int, ...]) -> int:
    return rank(DSet._trusted(elements)) - 1


@dataclass(frozen=True)
class Universe:
    """
    binom([n], d) 以及预先算好的逐成员 Inc-像与影子掩码

    images[i] 是第 i 个成员的 Inc-像在 binom([n+1], d) 中的掩码，
    shadows[i] 是它的影子在 binom([n], d-1) 中的掩码（d = 1 时为 0）。
    """

    n: int
    d: int
    members: Tuple[DSet, ...]
    images: Tuple[int, ...]
    shadows: Tuple[int, ...]

    @classmethod
    def build(cls, n: int, d: int) -> "Universe":
        if not 1 <= d <= n:
            raise PreconditionError(f"要求 1 ≤ d ≤ n: n={n}, d={d}")
        members = tuple(islice(iter_squashed(d), comb(n, d)))
        images = []
        shadows = []
        for u in members:
            image = 0
            for t in image_tuples(u.elements):
                image |= 1 << _rank_index(t)
            images.append(image)
            below = 0
            if d > 1:
                for t in combinations(u.elements, d - 1):
                    below |= 1 << _rank_index(t)
            shadows.append(below)
        return cls(n, d, members, tuple(images), tuple(shadows))

    @property
    def size(self) -> int:
        return len(self.members)

    def family(self, mask: int) -> Family:
        return Family._trusted(self.d, (self.members[i] for i in iter_bits(mask)))

    def mask_of(self, family: Family) -> int:
        if family.d != self.d:
            raise PreconditionError(f"族的阶 {family.d} 与宇宙的阶 {self.d} 不同")
        mask = 0
        for u in family.members:
            if u.last > self.n:
                raise PreconditionError(f"{u} 不在 binom([{self.n}], {self.d}) 中")
            mask |= 1 << (rank(u) - 1)
        return mask

    def union_of(self, mask: int, table: Tuple[int, ...]) -> int:
        result = 0
        for i in iter_bits(mask):
            result |= table[i]
        return result

    def inc_size(self, mask: int) -> int:
        return self.union_of(mask, self.images).bit_count()


@lru_cache(maxsize=32)
def get_universe(n: int, d: int) -> Universe:
    return Universe.build(n, d)

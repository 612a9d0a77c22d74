"""
d-集合与族

DSet 是正整数的严格递增序列，Family 是同一阶 d 的 DSet 的有限集合。
两者创建后都不可变，迭代 Family 时总是按 squashed 序从小到大。
"""

from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property, total_ordering
from typing import FrozenSet, Iterable, Iterator, Tuple, Union

from ..errors import GradeMismatchError, InvalidDSetError


class Ordering(Enum):
    """比较结果"""

    LESS = "less"
    EQUAL = "equal"
    GREATER = "greater"

    def __str__(self) -> str:
        return self.value


@total_ordering
@dataclass(frozen=True)
class DSet:
    """d-集合 u = (u_1 < ... < u_d)，元素从 1 开始"""

    elements: Tuple[int, ...]

    def __post_init__(self) -> None:
        elements = tuple(self.elements)
        if not elements:
            raise InvalidDSetError("d-集合至少包含一个元素")
        for x in elements:
            if isinstance(x, bool) or not isinstance(x, int):
                raise InvalidDSetError(f"元素必须是整数: {x!r}")
        if elements[0] < 1:
            raise InvalidDSetError(f"元素必须 ≥ 1: {elements}")
        if any(a >= b for a, b in zip(elements, elements[1:])):
            raise InvalidDSetError(f"元素必须严格递增: {elements}")
        object.__setattr__(self, "elements", elements)

    @classmethod
    def of(cls, *elements: int) -> "DSet":
        return cls(tuple(elements))

    @classmethod
    def _trusted(cls, elements: Tuple[int, ...]) -> "DSet":
        # 调用方保证 elements 合法，跳过校验
        obj = object.__new__(cls)
        object.__setattr__(obj, "elements", elements)
        return obj

    @property
    def d(self) -> int:
        return len(self.elements)

    @property
    def squashed_key(self) -> Tuple[int, ...]:
        # 倒序后按字典序比较，等价于比较对称差的最大元素
        return self.elements[::-1]

    @property
    def first(self) -> int:
        return self.elements[0]

    @property
    def last(self) -> int:
        return self.elements[-1]

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[int]:
        return iter(self.elements)

    def __getitem__(self, index):
        return self.elements[index]

    def __lt__(self, other: "DSet") -> bool:
        if not isinstance(other, DSet):
            return NotImplemented
        return squashed_cmp(self, other) is Ordering.LESS

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.elements)) + ")"


DSetLike = Union[DSet, Tuple[int, ...], list]


def as_dset(value: DSetLike) -> DSet:
    return value if isinstance(value, DSet) else DSet(tuple(value))


@dataclass(frozen=True)
class Family:
    """同阶 d-集合的有限族"""

    d: int
    members: FrozenSet[DSet] = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        if isinstance(self.d, bool) or not isinstance(self.d, int) or self.d < 1:
            raise GradeMismatchError(f"族的阶必须是正整数: {self.d!r}")
        members = frozenset(as_dset(u) for u in self.members)
        for u in members:
            if u.d != self.d:
                raise GradeMismatchError(f"成员 {u} 的大小不是 {self.d}")
        object.__setattr__(self, "members", members)

    @classmethod
    def of(cls, d: int, members: Iterable[DSetLike] = ()) -> "Family":
        return cls(d, frozenset(as_dset(u) for u in members))

    @classmethod
    def _trusted(cls, d: int, members: Iterable[DSet]) -> "Family":
        obj = object.__new__(cls)
        object.__setattr__(obj, "d", d)
        object.__setattr__(obj, "members", frozenset(members))
        return obj

    @cached_property
    def ordered(self) -> Tuple[DSet, ...]:
        """按 squashed 序升序排列的成员"""
        return tuple(sorted(self.members, key=lambda u: u.squashed_key))

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[DSet]:
        return iter(self.ordered)

    def __contains__(self, item: object) -> bool:
        if isinstance(item, DSet):
            return item in self.members
        if isinstance(item, (tuple, list)):
            return DSet._trusted(tuple(item)) in self.members
        return False

    def __bool__(self) -> bool:
        return bool(self.members)

    def _check_grade(self, other: "Family") -> None:
        if self.d != other.d:
            raise GradeMismatchError(f"族的阶不同: {self.d} != {other.d}")

    def union(self, other: "Family") -> "Family":
        self._check_grade(other)
        return Family._trusted(self.d, self.members | other.members)

    def difference(self, other: "Family") -> "Family":
        self._check_grade(other)
        return Family._trusted(self.d, self.members - other.members)

    def issubset(self, other: "Family") -> bool:
        self._check_grade(other)
        return self.members <= other.members

    def to_lists(self) -> list:
        return [list(u.elements) for u in self.ordered]

    def __str__(self) -> str:
        return "{" + ",".join(str(u) for u in self.ordered) + "}"


def squashed_cmp(u: DSet, v: DSet) -> Ordering:
    """squashed 序：对称差的最大元素属于 v 时 u < v"""
    if u.d != v.d:
        raise GradeMismatchError(f"不同阶的集合不可比较: {u} 与 {v}")
    ku, kv = u.squashed_key, v.squashed_key
    if ku < kv:
        return Ordering.LESS
    if ku > kv:
        return Ordering.GREATER
    return Ordering.EQUAL


def borel_leq(u: DSet, v: DSet) -> bool:
    """Borel 序：逐坐标 u_i ≤ v_i"""
    if u.d != v.d:
        raise GradeMismatchError(f"不同阶的集合不可比较: {u} 与 {v}")
    return all(a <= b for a, b in zip(u.elements, v.elements))


def family_squashed_cmp(f: Family, g: Family) -> Ordering:
    """
    族上的 squashed 序

    两个族对称差中（按 squashed 序）最大的元素属于 g 时 f < g。
    """
    f._check_grade(g)
    sym = f.members ^ g.members
    if not sym:
        return Ordering.EQUAL
    top = max(sym, key=lambda u: u.squashed_key)
    return Ordering.LESS if top in g.members else Ordering.GREATER


def shift_by(u: DSet, k: int) -> DSet:
    """u + k，每个坐标加 k"""
    if k < 0 and u.first + k < 1:
        raise InvalidDSetError(f"{u} 平移 {k} 后出现非正元素")
    return DSet._trusted(tuple(x + k for x in u.elements))


def shift_family(family: Family, k: int) -> Family:
    return Family._trusted(family.d, (shift_by(u, k) for u in family.members))


def shadow(family: Family) -> Family:
    """影子 ∂F：从每个成员删去一个元素"""
    if family.d == 1:
        raise GradeMismatchError("d = 1 的族没有非空集合组成的影子")
    result = set()
    for u in family.members:
        e = u.elements
        for i in range(len(e)):
            result.add(DSet._trusted(e[:i] + e[i + 1 :]))
    return Family._trusted(family.d - 1, result)


def iter_squashed(d: int) -> Iterator[DSet]:
    """按 squashed 序无限生成 binom(N, d)"""
    if d < 1:
        raise GradeMismatchError(f"d 必须 ≥ 1: {d}")
    current = list(range(1, d + 1))
    while True:
        yield DSet._trusted(tuple(current))
        # 找到第一个能加一的位置，前面的坐标重置为 1..j
        j = 0
        while j < d - 1 and current[j] + 1 == current[j + 1]:
            j += 1
        current[j] += 1
        current[:j] = range(1, j + 1)

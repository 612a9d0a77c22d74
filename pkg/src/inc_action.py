"""
Inc₁ 幺半群的作用

π_i(j) = j (j < i)，j + 1 (j ≥ i)。i ≥ u_d + 1 时 π_i 在 u 上是恒等映射，
所以 u 的 Inc-像就是 Inc 方程给出的 d + 1 个集合。
"""

from .errors import PreconditionError
from .logger import get_logger
from .sets import DSet, Family

logger = get_logger("IncAction")


def apply_pi(i: int, u: DSet) -> DSet:
    """逐坐标作用 π_i"""
    if i < 1:
        raise PreconditionError(f"π_i 要求 i ≥ 1: {i}")
    return DSet._trusted(tuple(x if x < i else x + 1 for x in u.elements))


def image_tuples(elements: tuple) -> list:
    d = len(elements)
    bumped = tuple(x + 1 for x in elements)
    # 第 j 项：前 j 个坐标不动，其余加一；j = d 就是 u 本身
    return [elements[:j] + bumped[j:] for j in range(d, -1, -1)]


def inc_image_set(u: DSet) -> Family:
    """Inc(u)，恰好 d + 1 个集合"""
    return Family._trusted(u.d, (DSet._trusted(t) for t in image_tuples(u.elements)))


def inc_image_family(family: Family) -> Family:
    """Inc(F) = ⋃_{u∈F} Inc(u)"""
    result = set()
    for u in family.members:
        result.update(image_tuples(u.elements))
    return Family._trusted(family.d, (DSet._trusted(t) for t in result))


def inc_iterate(family: Family, steps: int) -> Family:
    """Inc 的 steps 次复合"""
    if steps < 0:
        raise PreconditionError(f"迭代次数必须 ≥ 0: {steps}")
    current = family
    for step in range(steps):
        current = inc_image_family(current)
        logger.trace(f"第 {step + 1} 次 Inc 后共 {len(current)} 个集合")
    return current


def inc_orbit(u: DSet, i: int, j: int) -> Family:
    """{π_i(u), π_{i+1}(u), ..., π_j(u)}"""
    if not 1 <= i <= j:
        raise PreconditionError(f"要求 1 ≤ i ≤ j: i={i}, j={j}")
    return Family._trusted(u.d, (apply_pi(k, u) for k in range(i, j + 1)))


def _shift_one(i: int, u: DSet, members: frozenset) -> DSet:
    e = u.elements
    if i not in e or 1 in e:
        return u
    candidate = DSet._trusted(tuple(sorted((1,) + tuple(x for x in e if x != i))))
    return u if candidate in members else candidate


def comb_shift(i: int, family: Family) -> Family:
    """
    组合移位 S_i

    把成员中的 i 换成 1，前提是 1 不在成员中且换出来的集合不在原族中。
    所有成员都对照原族同时判断，不做顺序修改。
    """
    if i <= 1:
        raise PreconditionError(f"组合移位要求 i > 1: {i}")
    return Family._trusted(family.d, (_shift_one(i, u, family.members) for u in family.members))

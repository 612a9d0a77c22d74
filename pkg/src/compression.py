"""
压缩、初始段与部分压缩

左部分压缩固定每个集合的最小元，把剩余部分在 binom(N_{>k}, d-1) 中压缩；
右部分压缩固定最大元，把剩余部分在 binom(N, d-1) 中压缩。
交替做左、右部分压缩直到稳定，得到的族是左右都压缩的，因此是 shifted 的。
"""

from itertools import combinations, islice
from typing import Dict, List, Optional

from .errors import FixpointDivergenceError, GradeMismatchError, PreconditionError
from .inc_action import inc_image_family
from .logger import get_logger
from .sets import DSet, Family, iter_squashed, rank, shift_family

logger = get_logger("Compression")


def first_sets(d: int, count: int) -> Family:
    """squashed 序中最小的 count 个 d-集合"""
    return Family._trusted(d, islice(iter_squashed(d), count))


def initial_segment(u: DSet) -> Family:
    """C(u) = {v | v ≤ u}"""
    return first_sets(u.d, rank(u))


def borel_ideal(u: DSet) -> Family:
    """B(u) = {v | v ≤_B u}"""
    bound = u.elements
    members = (
        DSet._trusted(v)
        for v in combinations(range(1, bound[-1] + 1), u.d)
        if all(a <= b for a, b in zip(v, bound))
    )
    return Family._trusted(u.d, members)


def compress(family: Family) -> Family:
    """C(F)：与 F 同样大小的初始段"""
    return first_sets(family.d, len(family))


def compress_above(family: Family, k: int) -> Family:
    """C_{>k}(F)：在 binom(N_{>k}, d) 中的压缩，借助平移双射 π_1^k"""
    if k < 0:
        raise PreconditionError(f"k 必须 ≥ 0: {k}")
    if k == 0:
        return compress(family)
    for u in family.members:
        if u.first <= k:
            raise PreconditionError(f"成员 {u} 含有 ≤ {k} 的元素")
    return shift_family(compress(family), k)


def is_compressed(family: Family) -> bool:
    return family == compress(family)


def is_shifted(family: Family) -> bool:
    """
    是否 shifted（Borel 序下闭）

    只需要检查把某个坐标减一得到的直接前驱，Borel 序由这些覆盖关系生成。
    """
    members = family.members
    for u in members:
        e = u.elements
        for i, x in enumerate(e):
            lower = e[i - 1] if i else 0
            if x - 1 > lower and DSet._trusted(e[:i] + (x - 1,) + e[i + 1 :]) not in members:
                return False
    return True


def _require_slicable(family: Family) -> None:
    if family.d < 2:
        raise GradeMismatchError("切片与部分压缩需要 d ≥ 2")


def slice_first(family: Family, k: int) -> Family:
    """\\hat F_{1,k}：最小元为 k 的成员去掉最小元"""
    _require_slicable(family)
    return Family._trusted(family.d - 1, (DSet._trusted(u.elements[1:]) for u in family.members if u.first == k))


def slice_last(family: Family, k: int) -> Family:
    """\\hat F_{d,k}：最大元为 k 的成员去掉最大元"""
    _require_slicable(family)
    return Family._trusted(family.d - 1, (DSet._trusted(u.elements[:-1]) for u in family.members if u.last == k))


def _group(family: Family, pick_first: bool) -> Dict[int, List[DSet]]:
    groups: Dict[int, List[DSet]] = {}
    for u in family.members:
        if pick_first:
            groups.setdefault(u.first, []).append(DSet._trusted(u.elements[1:]))
        else:
            groups.setdefault(u.last, []).append(DSet._trusted(u.elements[:-1]))
    return groups


def left_compress(family: Family) -> Family:
    """左部分压缩 C^(l)(F)"""
    _require_slicable(family)
    result = []
    for k, hats in _group(family, pick_first=True).items():
        compressed = compress_above(Family._trusted(family.d - 1, hats), k)
        result.extend(DSet._trusted((k,) + w.elements) for w in compressed.members)
    return Family._trusted(family.d, result)


def right_compress(family: Family) -> Family:
    """右部分压缩 C^(r)(F)"""
    _require_slicable(family)
    result = []
    for k, hats in _group(family, pick_first=False).items():
        compressed = compress(Family._trusted(family.d - 1, hats))
        result.extend(DSet._trusted(w.elements + (k,)) for w in compressed.members)
    return Family._trusted(family.d, result)


def is_left_compressed(family: Family) -> bool:
    # d = 1 时 F^(∞) 就是 C(F)，两个谓词都退化为 is_compressed
    if family.d == 1:
        return is_compressed(family)
    return family == left_compress(family)


def is_right_compressed(family: Family) -> bool:
    if family.d == 1:
        return is_compressed(family)
    return family == right_compress(family)


def default_iteration_cap(family: Family) -> int:
    return 10 * len(family) * family.d + 16


def fixpoint_trace(family: Family, max_iterations: Optional[int] = None) -> List[Family]:
    """
    交替部分压缩的整个序列 F^(0), F^(1), ..., F^(∞)

    从左部分压缩开始；连续两步（一左一右）都不改变族时停止，
    此时族既是左压缩的也是右压缩的。d = 1 时直接返回 [F, C(F)]。

    Raises:
        FixpointDivergenceError: 超过迭代上限
    """
    if family.d == 1:
        compressed = compress(family)
        return [family] if compressed == family else [family, compressed]

    cap = max_iterations or default_iteration_cap(family)
    trace = [family]
    current = family
    unchanged = 0
    step = 0
    while unchanged < 2:
        if step >= cap:
            raise FixpointDivergenceError(step, current)
        operator = left_compress if step % 2 == 0 else right_compress
        following = operator(current)
        step += 1
        if following == current:
            unchanged += 1
        else:
            unchanged = 0
            trace.append(following)
            current = following
    logger.trace(f"部分压缩在第 {step} 步稳定，共 {len(trace) - 1} 次变化")
    return trace


def fixpoint(family: Family, max_iterations: Optional[int] = None) -> Family:
    """F^(∞)"""
    return fixpoint_trace(family, max_iterations)[-1]


def descent_chain(family: Family, max_iterations: Optional[int] = None) -> List[int]:
    """|Inc(F^(0))|, |Inc(F^(1))|, ..., |Inc(F^(∞))|, |Inc(C(F))|，应当单调不增"""
    sizes = [len(inc_image_family(g)) for g in fixpoint_trace(family, max_iterations)]
    sizes.append(len(inc_image_family(compress(family))))
    return sizes

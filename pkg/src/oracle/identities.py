"""
部分压缩与 Inc 的复合恒等式

每个恒等式的右边都按切片公式逐个 k 拼出来，再与直接计算的左边比较。
"""

import random
import time
from itertools import combinations
from math import comb
from typing import Callable, Dict, List, Sequence

from ..compression import (
    compress,
    compress_above,
    descent_chain,
    left_compress,
    right_compress,
    slice_first,
    slice_last,
)
from ..errors import PreconditionError
from ..inc_action import apply_pi, inc_image_family
from ..logger import get_logger
from ..sets import DSet, Family
from .report import VerificationReport

logger = get_logger("Identities")


def _pi_1(family: Family) -> Family:
    return Family._trusted(family.d, (apply_pi(1, u) for u in family.members))


def _prepend(k: int, family: Family) -> List[DSet]:
    return [DSet._trusted((k,) + u.elements) for u in family.members]


def _append(k: int, family: Family) -> List[DSet]:
    return [DSet._trusted(u.elements + (k,)) for u in family.members]


def _assemble(d: int, top: int, piece: Callable[[int], List[DSet]]) -> Family:
    result: List[DSet] = []
    for k in range(1, top + 2):
        result.extend(piece(k))
    return Family._trusted(d, result)


def _max_element(family: Family) -> int:
    return max((u.last for u in family.members), default=0)


def identity_failures(family: Family) -> List[str]:
    """返回所有不成立的恒等式名称，全部成立时为空列表"""
    if family.d < 2:
        raise PreconditionError("复合恒等式需要 d ≥ 2")
    d = family.d
    top = _max_element(family)
    image = inc_image_family(family)

    def first(k: int) -> Family:
        return slice_first(family, k)

    def last(k: int) -> Family:
        return slice_last(family, k)

    def inc_first_slice(k: int) -> Family:
        return inc_image_family(first(k)).union(_pi_1(first(k - 1)))

    def inc_last_slice(k: int) -> Family:
        return last(k).union(inc_image_family(last(k - 1)))

    left = left_compress(family)
    right = right_compress(family)
    checks: Dict[str, bool] = {
        "inc_by_first": image == _assemble(d, top, lambda k: _prepend(k, inc_first_slice(k))),
        "inc_by_last": image == _assemble(d, top, lambda k: _append(k, inc_last_slice(k))),
        "left_of_inc": left_compress(image)
        == _assemble(d, top, lambda k: _prepend(k, compress_above(inc_first_slice(k), k))),
        "right_of_inc": right_compress(image)
        == _assemble(d, top, lambda k: _append(k, compress(inc_last_slice(k)))),
        "inc_of_left": inc_image_family(left)
        == _assemble(
            d,
            top,
            lambda k: _prepend(
                k,
                inc_image_family(compress_above(first(k), k)).union(_pi_1(compress_above(first(k - 1), k - 1))),
            ),
        ),
        "inc_of_right": inc_image_family(right)
        == _assemble(
            d,
            top,
            lambda k: _append(k, compress(last(k)).union(inc_image_family(compress(last(k - 1))))),
        ),
        "left_inclusion": inc_image_family(left).issubset(left_compress(image)),
        "right_inclusion": inc_image_family(right).issubset(right_compress(image)),
        "compressed_exchange": inc_image_family(compress(family)).issubset(compress(image)),
    }
    checks["transfer"] = all(
        inc_image_family(compress_above(first(k), k)).issubset(compress_above(inc_image_family(first(k)), k))
        for k in range(1, top + 1)
    )
    sizes = descent_chain(family)
    checks["descent"] = all(a >= b for a, b in zip(sizes, sizes[1:]))

    failures = [name for name, holds in checks.items() if not holds]
    if failures:
        logger.error(f"{family} 上不成立的恒等式: {', '.join(failures)}")
    return failures


def verify_identities(family: Family) -> bool:
    return not identity_failures(family)


def random_family(rng: random.Random, d: int, max_elem: int, max_size: int = 20) -> Family:
    """binom([max_elem], d) 中大小均匀随机的子族"""
    pool = list(combinations(range(1, max_elem + 1), d))
    size = rng.randint(0, min(len(pool), max_size))
    return Family._trusted(d, (DSet._trusted(t) for t in rng.sample(pool, size)))


def verify_identity_sweep(
    samples: int = 10000,
    seed: int = 20240501,
    grades: Sequence[int] = (2, 3, 4),
    max_elem: int = 9,
) -> VerificationReport:
    """在随机族上检查全部恒等式，同一个 seed 得到同一批族"""
    if samples < 0:
        raise PreconditionError(f"samples 必须 ≥ 0: {samples}")
    if not grades or any(d < 2 or comb(max_elem, d) == 0 for d in grades):
        raise PreconditionError(f"每个阶都要满足 2 ≤ d ≤ max_elem: grades={list(grades)}, max_elem={max_elem}")
    rng = random.Random(seed)
    report = VerificationReport(
        kind="identities",
        universe={"samples": samples, "seed": seed, "max_elem": max_elem},
    )
    start = time.perf_counter()
    for index in range(samples):
        family = random_family(rng, grades[index % len(grades)], max_elem)
        failures = identity_failures(family)
        report.checked += 1
        if failures:
            report.violation_count += 1
            if len(report.violations) < 8:
                report.violations.append({"family": family, "failures": failures})
    report.elapsed = time.perf_counter() - start
    logger.info(report.summary())
    return report

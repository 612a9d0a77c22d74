"""
穷举验证

所有扫描都在 binom([n], d) 的位掩码上按数值升序进行，并按最高 partition_bits 位的前缀分块。
每个分块独立计算，按前缀顺序合并，所以单进程和多进程得到完全相同的报告。
"""

import time
from dataclasses import dataclass, field
from itertools import combinations
from multiprocessing import Pool
from typing import Dict, Iterator, List, Literal, Optional, Tuple

from ..compression import borel_ideal, first_sets, initial_segment, is_compressed, is_shifted
from ..errors import PreconditionError
from ..inc_action import comb_shift, inc_image_family
from ..logger import get_logger
from ..numeric import inc_num, shadow_num
from ..sets import DSet, Family, shadow, shift_by
from .report import VerificationReport
from .universe import Universe, get_universe, masks_of_weight

logger = get_logger("Oracle")

Measure = Literal["inc", "shadow"]


def _check_bounds(n: int, d: int, m: Optional[int]) -> Universe:
    universe = get_universe(n, d)
    if m is not None and not 0 <= m <= universe.size:
        raise PreconditionError(f"要求 0 ≤ m ≤ C({n},{d}) = {universe.size}: m={m}")
    return universe


def enum_families(n: int, d: int, m: int) -> Iterator[Family]:
    """binom([n], d) 的全部 m 元子族，每个恰好一次，按掩码升序"""
    universe = _check_bounds(n, d, m)
    for mask in masks_of_weight(m, universe.size):
        yield universe.family(mask)


@dataclass
class SweepTally:
    """一个分块（或若干分块合并后）的统计，族以掩码记录"""

    checked: int = 0
    violation_count: int = 0
    violations: List[int] = field(default_factory=list)
    minimum: Dict[int, int] = field(default_factory=dict)
    minimizer_count: Dict[int, int] = field(default_factory=dict)
    minimizers: Dict[int, List[int]] = field(default_factory=dict)

    def record(self, m: int, mask: int, value: int, baseline: int, cap: int) -> None:
        self.checked += 1
        if value < baseline:
            self.violation_count += 1
            if len(self.violations) < cap:
                self.violations.append(mask)
        best = self.minimum.get(m)
        if best is None or value < best:
            self.minimum[m] = value
            self.minimizer_count[m] = 1
            self.minimizers[m] = [mask]
        elif value == best:
            self.minimizer_count[m] += 1
            if len(self.minimizers[m]) < cap:
                self.minimizers[m].append(mask)

    def merge(self, other: "SweepTally", cap: int) -> "SweepTally":
        """self 在枚举序中排在 other 之前"""
        merged = SweepTally(
            checked=self.checked + other.checked,
            violation_count=self.violation_count + other.violation_count,
            violations=(self.violations + other.violations)[:cap],
        )
        for m in sorted(set(self.minimum) | set(other.minimum)):
            mine, theirs = self.minimum.get(m), other.minimum.get(m)
            if theirs is None or (mine is not None and mine < theirs):
                source = [self]
            elif mine is None or theirs < mine:
                source = [other]
            else:
                source = [self, other]
            merged.minimum[m] = source[0].minimum[m]
            merged.minimizer_count[m] = sum(s.minimizer_count[m] for s in source)
            merged.minimizers[m] = [mask for s in source for mask in s.minimizers[m]][:cap]
        return merged


@dataclass(frozen=True)
class PartitionTask:
    n: int
    d: int
    m: Optional[int]
    measure: Measure
    prefix: int
    low_width: int
    baselines: Tuple[int, ...]
    cap: int


def _sweep_partition(task: PartitionTask) -> SweepTally:
    universe = get_universe(task.n, task.d)
    table = universe.images if task.measure == "inc" else universe.shadows
    prefix_mask = task.prefix << task.low_width
    prefix_union = universe.union_of(prefix_mask, table)
    prefix_weight = task.prefix.bit_count()
    baselines = task.baselines
    tally = SweepTally()

    if task.m is None:
        # unions[x] 由去掉最低位的 unions 递推
        unions = [0] * (1 << task.low_width)
        for x in range(1 << task.low_width):
            if x:
                low = x & -x
                unions[x] = unions[x ^ low] | table[low.bit_length() - 1]
            m = prefix_weight + x.bit_count()
            value = (prefix_union | unions[x]).bit_count()
            tally.record(m, prefix_mask | x, value, baselines[m], task.cap)
    else:
        for x in masks_of_weight(task.m - prefix_weight, task.low_width):
            value = (prefix_union | universe.union_of(x, table)).bit_count()
            tally.record(task.m, prefix_mask | x, value, baselines[task.m], task.cap)

    logger.debug(f"分块 {task.prefix:#x} 完成: {tally.checked} 个族")
    return tally


def _compressed_baselines(d: int, size: int, measure: Measure) -> Tuple[int, ...]:
    values = []
    for m in range(size + 1):
        segment = first_sets(d, m)
        image = inc_image_family(segment) if measure == "inc" else shadow(segment)
        values.append(len(image))
    return tuple(values)


def _run_sweep(
    n: int,
    d: int,
    m: Optional[int],
    measure: Measure,
    jobs: int,
    partition_bits: int,
    max_witnesses: int,
) -> VerificationReport:
    universe = _check_bounds(n, d, m)
    if jobs < 1:
        raise PreconditionError(f"jobs 必须 ≥ 1: {jobs}")
    if partition_bits < 0:
        raise PreconditionError(f"partition_bits 必须 ≥ 0: {partition_bits}")
    bits = min(partition_bits, universe.size)
    low_width = universe.size - bits
    baselines = _compressed_baselines(d, universe.size, measure)

    tasks = []
    for prefix in range(1 << bits):
        if m is not None and not 0 <= m - prefix.bit_count() <= low_width:
            continue
        tasks.append(PartitionTask(n, d, m, measure, prefix, low_width, baselines, max_witnesses))

    logger.info(f"开始扫描 binom([{n}],{d})，m={'all' if m is None else m}，{len(tasks)} 个分块，{jobs} 个进程")
    start = time.perf_counter()
    tally = SweepTally()
    if jobs > 1 and len(tasks) > 1:
        with Pool(processes=jobs) as pool:
            for part in pool.imap(_sweep_partition, tasks):
                tally = tally.merge(part, max_witnesses)
    else:
        for task in tasks:
            tally = tally.merge(_sweep_partition(task), max_witnesses)
    elapsed = time.perf_counter() - start

    numeric = inc_num if measure == "inc" else shadow_num
    sizes = range(universe.size + 1) if m is None else [m]
    report = VerificationReport(
        kind="min_theorem" if measure == "inc" else "shadow_theorem",
        universe={"n": n, "d": d, "m": m},
        checked=tally.checked,
        violation_count=tally.violation_count,
        violations=[universe.family(mask) for mask in tally.violations],
        minimum=dict(tally.minimum),
        minimizer_count=dict(tally.minimizer_count),
        minimizers={k: [universe.family(mask) for mask in v] for k, v in tally.minimizers.items()},
        bound={k: numeric(k, d) for k in sizes},
        compressed={k: baselines[k] for k in sizes},
        elapsed=elapsed,
    )
    if report.violation_count:
        logger.error(f"发现 {report.violation_count} 个违例，第一个: {report.violations[0]}")
    logger.info(report.summary())
    return report


def verify_min_theorem(
    n: int,
    d: int,
    m: Optional[int] = None,
    jobs: int = 1,
    partition_bits: int = 4,
    max_witnesses: int = 8,
) -> VerificationReport:
    """
    对每个族检查 |Inc(F)| ≥ |Inc(C(F))|，并记录每个 m 上的最小值与取到最小值的族

    m 为 None 时扫描全部 2^C(n,d) 个族。
    """
    return _run_sweep(n, d, m, "inc", jobs, partition_bits, max_witnesses)


def verify_shadow_theorem(
    n: int,
    d: int,
    m: Optional[int] = None,
    jobs: int = 1,
    partition_bits: int = 4,
    max_witnesses: int = 8,
) -> VerificationReport:
    """
    Kruskal-Katona: |∂F| ≥ |∂C(F)| = ∂_d(|F|)

    ∂C(F) 是初始段，所以 ∂C(F) ⊆ C(∂F) 与这里的大小比较等价。
    """
    if d < 2:
        raise PreconditionError("影子定理需要 d ≥ 2")
    return _run_sweep(n, d, m, "shadow", jobs, partition_bits, max_witnesses)


def equality_cases(n: int, d: int, m: int) -> List[Family]:
    """所有满足 |Inc(F)| = Inc^[d](m) 的 m 元族"""
    universe = _check_bounds(n, d, m)
    target = inc_num(m, d)
    return [universe.family(mask) for mask in masks_of_weight(m, universe.size) if universe.inc_size(mask) == target]


@dataclass(frozen=True)
class ShiftWitness:
    """Inc(S_i(F)) 与 S_i(Inc(F)) 互不包含"""

    family: Family
    i: int
    inc_of_shift: Family
    shift_of_inc: Family

    def to_dict(self) -> dict:
        return {
            "family": self.family.to_lists(),
            "i": self.i,
            "inc_of_shift": self.inc_of_shift.to_lists(),
            "shift_of_inc": self.shift_of_inc.to_lists(),
        }


def search_shift_noninclusion(n: int, d: int, m: int) -> Optional[ShiftWitness]:
    """按枚举序找第一个 (F, i)，i 取 2..n+1"""
    for family in enum_families(n, d, m):
        image = inc_image_family(family)
        for i in range(2, n + 2):
            inc_of_shift = inc_image_family(comb_shift(i, family))
            shift_of_inc = comb_shift(i, image)
            if not inc_of_shift.issubset(shift_of_inc) and not shift_of_inc.issubset(inc_of_shift):
                logger.info(f"找到反例: F={family}, i={i}")
                return ShiftWitness(family, i, inc_of_shift, shift_of_inc)
    return None


def find_shift_witness(n: int, d: int, max_m: int) -> Optional[ShiftWitness]:
    """依次在 m = 0, 1, ..., max_m 上搜索"""
    for m in range(0, max_m + 1):
        witness = search_shift_noninclusion(n, d, m)
        if witness is not None:
            return witness
    return None


def verify_shift_shadow(n: int, d: int, m: Optional[int] = None) -> VerificationReport:
    """统计 ∂(S_i(F)) ⊆ S_i(∂F) 不成立的 (F, i)，i 取 2..n+1"""
    if d < 2:
        raise PreconditionError("影子需要 d ≥ 2")
    universe = _check_bounds(n, d, m)
    sizes = range(universe.size + 1) if m is None else [m]
    report = VerificationReport(kind="shift_shadow", universe={"n": n, "d": d, "m": m})
    start = time.perf_counter()
    for k in sizes:
        for mask in masks_of_weight(k, universe.size):
            family = universe.family(mask)
            below = shadow(family)
            for i in range(2, n + 2):
                report.checked += 1
                if not shadow(comb_shift(i, family)).issubset(comb_shift(i, below)):
                    report.violation_count += 1
                    if len(report.violations) < 8:
                        report.violations.append({"family": family, "i": i})
    report.elapsed = time.perf_counter() - start
    logger.info(report.summary())
    return report


def verify_segment_lemmas(max_elem: int, max_d: int) -> VerificationReport:
    """对所有 u_d ≤ max_elem, d ≤ max_d 检查 Inc(C(u)) = C(u+1) 与 Inc(B(u)) = B(u+1)"""
    if max_elem < 1 or max_d < 1:
        raise PreconditionError(f"界必须 ≥ 1: max_elem={max_elem}, max_d={max_d}")
    report = VerificationReport(kind="segment_lemmas", universe={"max_elem": max_elem, "max_d": max_d})
    start = time.perf_counter()
    for d in range(1, max_d + 1):
        for elements in combinations(range(1, max_elem + 1), d):
            u = DSet._trusted(elements)
            bumped = shift_by(u, 1)
            report.checked += 1
            for name, ideal in (("segment", initial_segment), ("borel", borel_ideal)):
                if inc_image_family(ideal(u)) != ideal(bumped):
                    report.violation_count += 1
                    report.violations.append({"u": u, "lemma": name})
    report.elapsed = time.perf_counter() - start
    logger.info(report.summary())
    return report


def iter_shifted_families(n: int, d: int) -> Iterator[Family]:
    """binom([n], d) 中的全部 shifted 族（Borel 序下闭的子族）"""
    universe = get_universe(n, d)
    members = universe.members
    index = {u: i for i, u in enumerate(members)}
    # squashed 序是 Borel 序的线性扩张，所以前驱总在前面
    predecessors = []
    for u in members:
        e = u.elements
        below = 0
        for i, x in enumerate(e):
            lower = e[i - 1] if i else 0
            if x - 1 > lower:
                below |= 1 << index[DSet._trusted(e[:i] + (x - 1,) + e[i + 1 :])]
        predecessors.append(below)

    def extend(position: int, mask: int) -> Iterator[int]:
        if position == len(members):
            yield mask
            return
        yield from extend(position + 1, mask)
        if predecessors[position] & mask == predecessors[position]:
            yield from extend(position + 1, mask | (1 << position))

    for mask in extend(0, 0):
        yield universe.family(mask)


def verify_structure_preservation(n: int, d: int) -> VerificationReport:
    """Inc 保持 shifted 与 compressed：遍历所有 shifted 族和所有初始段"""
    universe = get_universe(n, d)
    report = VerificationReport(kind="structure_preservation", universe={"n": n, "d": d})
    start = time.perf_counter()
    for family in iter_shifted_families(n, d):
        report.checked += 1
        if not is_shifted(inc_image_family(family)):
            report.violation_count += 1
            report.violations.append({"family": family, "property": "shifted"})
    for m in range(universe.size + 1):
        report.checked += 1
        segment = universe.family((1 << m) - 1)
        if not is_compressed(inc_image_family(segment)):
            report.violation_count += 1
            report.violations.append({"family": segment, "property": "compressed"})
    report.elapsed = time.perf_counter() - start
    logger.info(report.summary())
    return report

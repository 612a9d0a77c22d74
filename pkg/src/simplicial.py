"""
单纯复形与组合 Inc-不变链

复形按阶存储为 Family，空面隐含存在、不参与存储和序列化。
构造时立即检查包含封闭性。
"""

from dataclasses import dataclass
from itertools import combinations
from typing import Dict, Iterable, Iterator, List, Mapping, Optional, Sequence, Tuple, Union

from .compression import compress, first_sets, is_compressed, is_shifted
from .errors import (
    ComplexClosureError,
    InfeasibleChainError,
    InvariantViolationError,
    NonInvariantChainError,
    PreconditionError,
)
from .inc_action import inc_image_family
from .logger import get_logger
from .numeric import FVector, FVectorChain, Feasibility, chain_feasible
from .sets import DSet, Family, as_dset, shadow

logger = get_logger("Simplicial")


@dataclass(frozen=True)
class SimplicialComplex:
    """grades[d-1] 是全部 d-面组成的族，只保留到最高的非空阶"""

    grades: Tuple[Family, ...] = ()

    def grade(self, d: int) -> Family:
        if 1 <= d <= len(self.grades):
            return self.grades[d - 1]
        return Family._trusted(max(d, 1), ())

    def faces(self) -> Iterator[DSet]:
        for family in self.grades:
            yield from family

    def __contains__(self, face: object) -> bool:
        if isinstance(face, DSet):
            return face in self.grade(face.d)
        if isinstance(face, (tuple, list)):
            return len(face) == 0 or tuple(face) in self.grade(len(face))
        return False

    def issubcomplex(self, other: "SimplicialComplex") -> bool:
        return all(f.members <= other.grade(f.d).members for f in self.grades)

    def __str__(self) -> str:
        return "{∅" + "".join("," + str(u) for u in self.faces()) + "}"


GradeInput = Union[Family, Iterable]


def _normalize_grades(graded: Mapping[int, GradeInput]) -> Dict[int, Family]:
    result: Dict[int, Family] = {}
    for d, members in graded.items():
        d = int(d)
        if d < 1:
            raise PreconditionError(f"阶必须 ≥ 1（空面是隐含的）: {d}")
        family = members if isinstance(members, Family) else Family.of(d, members)
        if family.d != d:
            raise PreconditionError(f"第 {d} 阶给出的是 {family.d}-集合族")
        result[d] = family
    return result


def validate_complex(graded: Mapping[int, GradeInput]) -> SimplicialComplex:
    """
    检查包含封闭性并构造复形

    Raises:
        ComplexClosureError: 报告阶最低、squashed 序最小的缺失面
    """
    families = _normalize_grades(graded)
    top = max((d for d, f in families.items() if f), default=0)
    grades = tuple(families.get(d, Family._trusted(d, ())) for d in range(1, top + 1))
    # 自顶向下传递缺失的面，这样低阶上间接缺失的面也能被发现
    missing: Dict[int, frozenset] = {}
    carry: frozenset = frozenset()
    for d in range(top, 1, -1):
        below = shadow(Family._trusted(d, grades[d - 1].members | carry)).members
        carry = below - grades[d - 2].members
        if carry:
            missing[d - 1] = carry
    if missing:
        d = min(missing)
        face = min(missing[d], key=lambda u: u.squashed_key)
        witness = next(u for g in grades[d:] for u in g if set(face.elements) <= set(u.elements))
        raise ComplexClosureError(face, witness)
    return SimplicialComplex(grades)


def complex_from_faces(faces: Iterable[Sequence[int]]) -> SimplicialComplex:
    """由面的列表构造复形（可以混合不同大小，空面会被忽略）"""
    graded: Dict[int, list] = {}
    for face in faces:
        if len(face) == 0:
            continue
        graded.setdefault(len(face), []).append(as_dset(face))
    return validate_complex(graded)


def full_simplex(n: int) -> SimplicialComplex:
    """[n] 上的单形（全部子集）"""
    return validate_complex({d: [c for c in combinations(range(1, n + 1), d)] for d in range(1, n + 1)})


def f_vector(complex_: SimplicialComplex) -> FVector:
    return FVector(tuple(len(f) for f in complex_.grades))


def inc_complex(complex_: SimplicialComplex) -> SimplicialComplex:
    """Inc(Δ) = ⋃_d Inc(F_d(Δ))"""
    graded = {f.d: inc_image_family(f) for f in complex_.grades}
    try:
        return validate_complex(graded)
    except ComplexClosureError as e:
        raise InvariantViolationError(f"Inc(Δ) 不是单纯复形: {e}") from e


def compress_complex(complex_: SimplicialComplex) -> SimplicialComplex:
    """逐阶压缩，Kruskal-Katona 保证结果仍是复形"""
    graded = {f.d: compress(f) for f in complex_.grades}
    try:
        return validate_complex(graded)
    except ComplexClosureError as e:
        raise InvariantViolationError(f"C(Δ) 不是单纯复形: {e}") from e


def is_shifted_complex(complex_: SimplicialComplex) -> bool:
    return all(is_shifted(f) for f in complex_.grades)


def is_compressed_complex(complex_: SimplicialComplex) -> bool:
    return all(is_compressed(f) for f in complex_.grades)


def non_faces(complex_: SimplicialComplex, n: int) -> Dict[int, Family]:
    """[n] 中每个阶上不是面的 d-子集"""
    if n < 1:
        raise PreconditionError(f"n 必须 ≥ 1: {n}")
    for face in complex_.faces():
        if face.last > n:
            raise PreconditionError(f"面 {face} 不在 [{n}] 中")
    result: Dict[int, Family] = {}
    for d in range(1, n + 1):
        present = complex_.grade(d).members
        result[d] = Family._trusted(
            d, (u for u in (DSet._trusted(c) for c in combinations(range(1, n + 1), d)) if u not in present)
        )
    return result


@dataclass(frozen=True)
class ChainBreak:
    """Inc(Δ_n) 中第一个不在 Δ_{n+1} 里的面"""

    n: int
    face: DSet

    def __str__(self) -> str:
        return f"n={self.n}: {self.face} ∈ Inc(Δ_{self.n}) 但不在 Δ_{self.n + 1} 中"


def _first_break(n: int, current: SimplicialComplex, following: SimplicialComplex) -> Optional[ChainBreak]:
    image = inc_complex(current)
    for family in image.grades:
        missing = family.members - following.grade(family.d).members
        if missing:
            return ChainBreak(n, min(missing, key=lambda u: u.squashed_key))
    return None


def check_chain(complexes: Sequence[SimplicialComplex]) -> Feasibility:
    """是否对所有 n 有 Inc(Δ_n) ⊆ Δ_{n+1}"""
    for n in range(1, len(complexes)):
        chain_break = _first_break(n, complexes[n - 1], complexes[n])
        if chain_break is not None:
            logger.debug(f"链在 {chain_break} 处断开")
            return Feasibility(ok=False, violation=chain_break)
    return Feasibility(ok=True)


def construct_chain(chain: FVectorChain) -> List[SimplicialComplex]:
    """
    由可行的 f-向量链构造逐阶压缩的复形链

    Raises:
        InfeasibleChainError: chain_feasible 不成立
    """
    feasibility = chain_feasible(chain)
    if not feasibility:
        raise InfeasibleChainError(feasibility.violation)
    complexes = []
    for f in chain.vectors:
        complexes.append(validate_complex({d: first_sets(d, f.count(d)) for d in range(1, len(f) + 1)}))
    return complexes


def stabilization_report(complexes: Sequence[SimplicialComplex]) -> List[bool]:
    """
    对每个 n < N 报告 Inc(Δ_n) 是否恰好等于 Δ_{n+1}

    Raises:
        NonInvariantChainError: 链不是组合 Inc-不变的
    """
    checked = check_chain(complexes)
    if not checked:
        raise NonInvariantChainError(checked.violation)
    return [inc_complex(complexes[n - 1]) == complexes[n] for n in range(1, len(complexes))]


def inc_chain(start: SimplicialComplex, length: int) -> List[SimplicialComplex]:
    """Δ, Inc(Δ), Inc(Inc(Δ)), ... 共 length 个复形"""
    if length < 1:
        raise PreconditionError(f"链长必须 ≥ 1: {length}")
    chain = [start]
    while len(chain) < length:
        chain.append(inc_complex(chain[-1]))
    return chain

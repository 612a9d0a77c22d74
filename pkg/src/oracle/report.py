"""
验证报告
"""

from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

from ..sets import DSet, Family


def _jsonable(value: Any) -> Any:
    if isinstance(value, Family):
        return value.to_lists()
    if isinstance(value, DSet):
        return list(value.elements)
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if value is None or isinstance(value, (bool, int, float, str)):
        return value
    return str(value)


@dataclass
class VerificationReport:
    """
    一次穷举或抽样验证的结果

    minimum / minimizer_count / minimizers 都按族的大小 m 索引；
    bound 是对应的数值下界，bound_attained 比较两者；
    compressed 是大小为 m 的压缩族的像大小，compressed_is_minimizer 看它是否取到最小值。
    violations 与 minimizers 只保存枚举序中的前若干个，计数总是精确的。
    """

    kind: str
    universe: Dict[str, Optional[int]]
    checked: int = 0
    violation_count: int = 0
    violations: List[Any] = field(default_factory=list)
    minimum: Dict[int, int] = field(default_factory=dict)
    minimizer_count: Dict[int, int] = field(default_factory=dict)
    minimizers: Dict[int, List[Family]] = field(default_factory=dict)
    bound: Dict[int, int] = field(default_factory=dict)
    compressed: Dict[int, int] = field(default_factory=dict)
    elapsed: float = 0.0

    @property
    def bound_attained(self) -> Dict[int, bool]:
        return {m: self.minimum.get(m) == value for m, value in self.bound.items() if m in self.minimum}

    @property
    def compressed_is_minimizer(self) -> Dict[int, bool]:
        return {m: self.minimum.get(m) == value for m, value in self.compressed.items() if m in self.minimum}

    @property
    def ok(self) -> bool:
        return (
            self.violation_count == 0
            and all(self.bound_attained.values())
            and all(self.compressed_is_minimizer.values())
        )

    def to_dict(self, include_elapsed: bool = True) -> Dict[str, Any]:
        data: Dict[str, Any] = {
            "kind": self.kind,
            "universe": dict(self.universe),
            "checked": self.checked,
            "ok": self.ok,
            "violation_count": self.violation_count,
            "violations": _jsonable(self.violations),
        }
        if self.minimum:
            data["minimum"] = _jsonable(self.minimum)
            data["minimizer_count"] = _jsonable(self.minimizer_count)
            data["minimizers"] = _jsonable(self.minimizers)
            data["bound"] = _jsonable(self.bound)
            data["bound_attained"] = _jsonable(self.bound_attained)
            data["compressed"] = _jsonable(self.compressed)
            data["compressed_is_minimizer"] = _jsonable(self.compressed_is_minimizer)
        if include_elapsed:
            data["elapsed"] = round(self.elapsed, 3)
        return data

    def summary(self) -> str:
        status = "通过" if self.ok else "失败"
        return f"[{self.kind}] {status}: 检查了 {self.checked} 项，违例 {self.violation_count} 个，用时 {self.elapsed:.2f}s"

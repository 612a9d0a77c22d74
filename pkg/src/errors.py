"""
异常层级

所有库内异常都继承自 IncKKError，同时继承对应的内置异常，
调用方既可以按库的类型捕获，也可以按 ValueError / RuntimeError 捕获。
"""

from typing import Any, Optional


class IncKKError(Exception):
    """库内所有异常的基类"""


class InvalidDSetError(IncKKError, ValueError):
    """d-集合不合法：元素非正或不严格递增"""


class GradeMismatchError(IncKKError, ValueError):
    """阶数不匹配，或者在 d = 1 上请求了需要 d ≥ 2 的操作"""


class BinomialOverflowError(IncKKError, OverflowError):
    """二项式系数或其累加超过了有符号64位整数的上界"""


class PreconditionError(IncKKError, ValueError):
    """输入违反了操作的前置条件"""


class ComplexClosureError(IncKKError, ValueError):
    """单纯复形不满足包含封闭性"""

    def __init__(self, missing_face: Any, witness: Any = None) -> None:
        self.missing_face = missing_face
        self.witness = witness
        message = f"缺少面 {missing_face}"
        if witness is not None:
            message += f"（它是 {witness} 的子集）"
        super().__init__(message)


class InfeasibleChainError(IncKKError, ValueError):
    """f-向量链不可实现"""

    def __init__(self, violation: Any) -> None:
        self.violation = violation
        super().__init__(f"f-向量链不可实现: {violation}")


class NonInvariantChainError(IncKKError, ValueError):
    """复形链不是组合 Inc-不变的"""

    def __init__(self, chain_break: Any) -> None:
        self.chain_break = chain_break
        super().__init__(f"复形链不是 Inc-不变的: {chain_break}")


class FixpointDivergenceError(IncKKError, RuntimeError):
    """部分压缩迭代超过了迭代上限"""

    def __init__(self, iterations: int, last: Optional[Any] = None) -> None:
        self.iterations = iterations
        self.last = last
        super().__init__(f"部分压缩在 {iterations} 步内没有稳定")


class InvariantViolationError(IncKKError, RuntimeError):
    """内部不变式被破坏，理论上不可达"""


class InputFormatError(IncKKError, ValueError):
    """输入解析失败，消息中包含出错的行号或字段"""

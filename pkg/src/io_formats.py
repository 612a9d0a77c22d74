"""
输入输出格式

文本格式：每行一个集合，元素用空格或逗号分隔，可带括号；可选首行 "d=<d>"；
空行与 # 开头的行被忽略。
JSON 格式：
    族      {"d": 3, "members": [[1,2,4], ...]}，也接受裸的二维数组
    f-向量  [f0, f1, ...]
    f-链    [[...], [...], ...]
    复形    {"grades": {"1": [[1],[2]], "2": [[1,2]]}}
    复形链  [复形, 复形, ...]
"""

import json
import re
from typing import Any, Dict, List, Optional, Tuple, Union

from .errors import IncKKError, InputFormatError
from .numeric import FVector, FVectorChain
from .simplicial import SimplicialComplex, validate_complex
from .sets import DSet, Family

_HEADER = re.compile(r"^d\s*=\s*(\d+)$")
_SEPARATORS = re.compile(r"[\s,]+")


def _int_list(value: Any, where: str) -> List[int]:
    if not isinstance(value, list) or any(isinstance(x, bool) or not isinstance(x, int) for x in value):
        raise InputFormatError(f"{where}: 需要整数数组，得到 {value!r}")
    return value


def parse_dset(text: str, where: str = "输入") -> DSet:
    body = text.strip().strip("()[]{}").strip()
    if not body:
        raise InputFormatError(f"{where}: 空集合")
    try:
        elements = tuple(int(token) for token in _SEPARATORS.split(body) if token)
        return DSet(elements)
    except ValueError as e:
        raise InputFormatError(f"{where}: {e}") from e


def _parse_family_text(text: str, d: Optional[int]) -> Family:
    members: List[DSet] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        header = _HEADER.match(line)
        if header:
            if members or d is not None:
                raise InputFormatError(f"第 {lineno} 行: d=... 只能出现一次且必须在最前面")
            d = int(header.group(1))
            continue
        u = parse_dset(line, f"第 {lineno} 行")
        if d is None:
            d = u.d
        elif u.d != d:
            raise InputFormatError(f"第 {lineno} 行: {u} 的大小不是 {d}")
        members.append(u)
    if d is None:
        raise InputFormatError("空族需要用 d=<d> 给出阶")
    try:
        return Family.of(d, members)
    except IncKKError as e:
        raise InputFormatError(f"d: {e}") from e


def _family_from_json(data: Any, d: Optional[int], where: str = "$") -> Family:
    if isinstance(data, dict):
        if "d" not in data or "members" not in data:
            raise InputFormatError(f"{where}: 族对象需要字段 d 和 members")
        d = data["d"]
        if isinstance(d, bool) or not isinstance(d, int) or d < 1:
            raise InputFormatError(f"{where}.d: 需要正整数，得到 {d!r}")
        data = data["members"]
    if not isinstance(data, list):
        raise InputFormatError(f"{where}.members: 需要数组")
    members = []
    for index, item in enumerate(data):
        field = f"{where}.members[{index}]"
        try:
            members.append(DSet(tuple(_int_list(item, field))))
        except InputFormatError:
            raise
        except IncKKError as e:
            raise InputFormatError(f"{field}: {e}") from e
    if d is None:
        if not members:
            raise InputFormatError(f"{where}: 空族需要字段 d")
        d = members[0].d
    for index, u in enumerate(members):
        if u.d != d:
            raise InputFormatError(f"{where}.members[{index}]: {u} 的大小不是 {d}")
    return Family.of(d, members)


def _load_json(text: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise InputFormatError(f"第 {e.lineno} 行第 {e.colno} 列: JSON 解析失败: {e.msg}") from e


def _looks_like_json(text: str) -> bool:
    return text.lstrip()[:1] in ("{", "[")


def parse_family(text: str, d: Optional[int] = None) -> Family:
    """按内容自动选择 JSON 或文本格式"""
    if _looks_like_json(text):
        return _family_from_json(_load_json(text), d)
    return _parse_family_text(text, d)


def parse_fvector(text: str) -> FVector:
    if _looks_like_json(text):
        return FVector(tuple(_int_list(_load_json(text), "$")))
    try:
        return FVector(tuple(int(token) for token in _SEPARATORS.split(text.strip().strip("()")) if token))
    except ValueError as e:
        raise InputFormatError(f"f-向量: {e}") from e


def _complex_from_json(data: Any, where: str) -> SimplicialComplex:
    if not isinstance(data, dict) or not isinstance(data.get("grades"), dict):
        raise InputFormatError(f"{where}: 复形对象需要 grades 字段")
    graded: Dict[int, Family] = {}
    for key, value in data["grades"].items():
        field = f"{where}.grades[{key!r}]"
        try:
            d = int(key)
        except ValueError as e:
            raise InputFormatError(f"{field}: 阶必须是整数") from e
        if d < 1:
            raise InputFormatError(f"{field}: 阶必须 ≥ 1")
        graded[d] = _family_from_json({"d": d, "members": value}, d, field)
    return validate_complex(graded)


def parse_complex(text: str) -> SimplicialComplex:
    return _complex_from_json(_load_json(text), "$")


ChainInput = Union[FVectorChain, List[SimplicialComplex]]


def parse_chain(text: str) -> Tuple[str, ChainInput]:
    """
    f-向量链或复形链

    Returns:
        ("fvectors", FVectorChain) 或 ("complexes", 复形列表)
    """
    data = _load_json(text)
    if not isinstance(data, list) or not data:
        raise InputFormatError("$: 链必须是非空数组")
    if all(isinstance(item, dict) for item in data):
        return "complexes", [_complex_from_json(item, f"$[{i}]") for i, item in enumerate(data)]
    vectors = [FVector(tuple(_int_list(item, f"$[{i}]"))) for i, item in enumerate(data)]
    return "fvectors", FVectorChain(tuple(vectors))


def format_dset(u: DSet) -> str:
    return " ".join(map(str, u.elements))


def format_family(family: Family) -> str:
    lines = [f"d={family.d}"]
    lines.extend(format_dset(u) for u in family)
    return "\n".join(lines)


def family_to_json(family: Family) -> Dict[str, Any]:
    return {"d": family.d, "members": family.to_lists()}


def complex_to_json(complex_: SimplicialComplex) -> Dict[str, Any]:
    return {"grades": {str(f.d): f.to_lists() for f in complex_.grades}}


def fvector_to_json(f: FVector) -> List[int]:
    return list(f.entries)


def dumps(data: Any) -> str:
    """确定性的 JSON 输出"""
    return json.dumps(data, ensure_ascii=False, separators=(",", ":"))

from dataclasses import dataclass, fields, MISSING
from typing import TypeVar, Type, Any, get_origin, get_args, Literal, Dict, Union, get_type_hints

T = TypeVar("T", bound="ConfigBase")


@dataclass
class ConfigBase:
    """配置类的基类"""

    @classmethod
    def from_dict(cls: Type[T], data: Dict[str, Any]) -> T:
        """从字典加载配置字段，缺省的字段使用默认值"""
        if not isinstance(data, dict):
            raise TypeError(f"Expected a dictionary, got {type(data).__name__}")

        hints = get_type_hints(cls)
        init_args: Dict[str, Any] = {}

        for f in fields(cls):
            if f.name.startswith("_") or not f.init:
                continue

            if f.name not in data:
                if f.default is not MISSING or f.default_factory is not MISSING:
                    continue
                raise ValueError(f"缺少必填字段: '{f.name}'")

            try:
                init_args[f.name] = cls._convert_field(data[f.name], hints[f.name])
            except TypeError as e:
                raise TypeError(f"字段 '{f.name}' 出现类型错误: {e}") from e

        unknown = sorted(set(data) - {f.name for f in fields(cls)})
        if unknown:
            raise ValueError(f"{cls.__name__} 中存在未知字段: {', '.join(unknown)}")

        return cls(**init_args)

    @classmethod
    def _convert_field(cls, value: Any, field_type: Any) -> Any:
        """
        转换字段值为指定类型

        1. 嵌套的 ConfigBase 递归调用 from_dict
        2. list 递归转换每个元素
        3. Optional 允许 None
        4. Literal 检查取值
        5. int/str/float/bool 严格检查类型（bool 不能充当 int）
        """
        if isinstance(field_type, type) and issubclass(field_type, ConfigBase):
            return field_type.from_dict(dict(value))

        origin = get_origin(field_type)
        args = get_args(field_type)

        if origin is list:
            if not isinstance(value, list):
                raise TypeError(f"Expected a list, got {type(value).__name__}")
            return [cls._convert_field(item, args[0]) for item in value]

        if origin is Union:
            if value is None and type(None) in args:
                return None
            inner = [a for a in args if a is not type(None)]
            return cls._convert_field(value, inner[0])

        if origin is Literal:
            if value in args:
                return value
            raise TypeError(f"Value '{value}' is not in allowed values {args} for Literal type")

        if field_type is Any:
            return value

        if field_type is float and isinstance(value, int) and not isinstance(value, bool):
            return float(value)
        if field_type is int and isinstance(value, bool):
            raise TypeError("Expected int, got bool")
        if isinstance(value, field_type):
            return field_type(value)
        raise TypeError(f"Expected {field_type.__name__}, got {type(value).__name__}")

    def to_dict(self) -> Dict[str, Any]:
        """转回普通字典，用于 config show 与写回 TOML"""
        result: Dict[str, Any] = {}
        for f in fields(self):
            value = getattr(self, f.name)
            result[f.name] = value.to_dict() if isinstance(value, ConfigBase) else value
        return result

    def __str__(self):
        """返回配置类的字符串表示"""
        return f"{self.__class__.__name__}({', '.join(f'{f.name}={getattr(self, f.name)}' for f in fields(self))})"

from dataclasses import dataclass, field
from typing import Literal

from src.config.config_base import ConfigBase

"""
须知：
1. 本文件中记录了所有的配置项
2. 所有新增的class都需要继承自ConfigBase
3. 所有新增的class都应在config.py中的Config类中添加字段
4. 所有字段都必须有默认值，配置文件中缺省的项使用默认值
"""

CONFIG_VERSION = "0.1.0"


@dataclass
class InnerConfig(ConfigBase):
    version: str = CONFIG_VERSION
    """配置文件版本号"""


@dataclass
class VerifyConfig(ConfigBase):
    n: int = 6
    """穷举宇宙 binom([n], d) 的 n"""

    d: int = 3
    """穷举宇宙的集合大小 d"""

    all_m: bool = True
    """是否扫描所有大小 m（否则需要在命令行给出 --m）"""

    jobs: int = 1
    """并行进程数，1 表示单进程"""

    partition_bits: int = 4
    """按最高若干位前缀划分扫描空间，共 2^partition_bits 个分区"""

    max_witnesses: int = 8
    """每个 m 在报告中保留的反例/极小族个数上限（计数总是精确的）"""


@dataclass
class IdentitiesConfig(ConfigBase):
    samples: int = 10000
    """随机族的个数"""

    seed: int = 20240501
    """随机种子，固定后输出可复现"""

    grades: list[int] = field(default_factory=lambda: [2, 3, 4])
    """参与抽样的集合大小 d"""

    max_elem: int = 9
    """随机族中元素的上界"""


@dataclass
class SegmentsConfig(ConfigBase):
    max_elem: int = 8
    """检查 u_d ≤ max_elem 的所有 u"""

    max_d: int = 4
    """检查 d ≤ max_d"""


@dataclass
class SearchConfig(ConfigBase):
    n: int = 6
    """搜索宇宙的 n"""

    d: int = 2
    """搜索宇宙的 d"""

    max_m: int = 4
    """依次搜索族大小 0..max_m"""


@dataclass
class FixpointConfig(ConfigBase):
    max_iterations: int = 0
    """部分压缩的迭代上限，0 表示自动取 10·|F|·d + 16"""


@dataclass
class DebugConfig(ConfigBase):
    level: Literal["TRACE", "DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"] = "INFO"
    """日志级别，默认为INFO"""

    log_to_file: bool = False
    """是否把 TRACE 级别的详细日志写入 logs/ 目录"""

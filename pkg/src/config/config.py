import os
import shutil
from dataclasses import dataclass, field
from pathlib import Path

import tomlkit

from ..logger import get_logger
from src.config.config_base import ConfigBase
from src.config.official_configs import (
    CONFIG_VERSION,
    DebugConfig,
    FixpointConfig,
    IdentitiesConfig,
    InnerConfig,
    SearchConfig,
    SegmentsConfig,
    VerifyConfig,
)

logger = get_logger("Config")

TEMPLATE_DIR = Path(__file__).parent.parent.parent / "template"
TEMPLATE_PATH = TEMPLATE_DIR / "template_config.toml"


@dataclass
class Config(ConfigBase):
    """总配置类"""

    inner: InnerConfig = field(default_factory=InnerConfig)
    verify: VerifyConfig = field(default_factory=VerifyConfig)
    identities: IdentitiesConfig = field(default_factory=IdentitiesConfig)
    segments: SegmentsConfig = field(default_factory=SegmentsConfig)
    search: SearchConfig = field(default_factory=SearchConfig)
    fixpoint: FixpointConfig = field(default_factory=FixpointConfig)
    debug: DebugConfig = field(default_factory=DebugConfig)


def load_config(config_path: str) -> Config:
    """
    加载配置文件
    :param config_path: 配置文件路径
    :return: Config对象
    """
    with open(config_path, "r", encoding="utf-8") as f:
        config_data = tomlkit.load(f).unwrap()

    version = config_data.get("inner", {}).get("version")
    if version is None:
        logger.warning(f"配置文件 {config_path} 未检测到版本号，按当前版本 v{CONFIG_VERSION} 解析")
    elif version != CONFIG_VERSION:
        logger.warning(f"检测到版本号不同: 配置文件 v{version} -> 当前版本 v{CONFIG_VERSION}，缺省项使用默认值")

    try:
        return Config.from_dict(config_data)
    except Exception as e:
        logger.critical(f"配置文件解析失败: {e}")
        raise


def init_config(target_path: str, overwrite: bool = False) -> bool:
    """
    从模板创建配置文件

    Returns:
        bool: 是否写入了新文件
    """
    if os.path.exists(target_path) and not overwrite:
        logger.info(f"配置文件已存在，跳过创建: {target_path}")
        return False
    shutil.copy2(TEMPLATE_PATH, target_path)
    logger.info(f"已创建新配置文件: {target_path}")
    return True


def dump_config(config: Config) -> str:
    """把配置序列化为 TOML 文本"""
    return tomlkit.dumps(config.to_dict())

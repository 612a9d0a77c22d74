"""配置管理器 - 属性代理"""
import os
from typing import Any, Optional

from ..logger import get_logger
from .config import Config, load_config

logger = get_logger("Config")


class ConfigManager:
    """配置管理器

    持有当前生效的 Config，并把属性访问代理过去，
    所以调用方写 global_config.verify.n 即可。
    未调用 load() 时使用全部默认值。
    """

    def __init__(self) -> None:
        self._config: Config = Config()
        self._config_path: Optional[str] = None

    def load(self, config_path: str) -> None:
        """加载配置文件

        Args:
            config_path: 配置文件路径
        """
        self._config = load_config(config_path)
        self._config_path = os.path.abspath(config_path)
        logger.info(f"配置已加载: {config_path}")

    def reset(self) -> None:
        """恢复为默认配置"""
        self._config = Config()
        self._config_path = None

    @property
    def config(self) -> Config:
        return self._config

    def __getattr__(self, name: str) -> Any:
        """动态代理配置属性访问

        Raises:
            AttributeError: 属性不存在
        """
        # 私有属性不代理
        if name.startswith("_"):
            raise AttributeError(f"'{type(self).__name__}' object has no attribute '{name}'")
        try:
            return getattr(self._config, name)
        except AttributeError as e:
            raise AttributeError(f"'{type(self).__name__}' object has no attribute '{name}'") from e

    def __repr__(self) -> str:
        return f"<ConfigManager config_path={self._config_path}>"

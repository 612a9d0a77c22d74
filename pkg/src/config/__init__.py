from .config import Config, dump_config, init_config, load_config
from .config_manager import ConfigManager

# 全局配置：默认值，CLI 在解析 --config 之后调用 global_config.load()
global_config = ConfigManager()

__all__ = [
    "Config",
    "ConfigManager",
    "dump_config",
    "global_config",
    "init_config",
    "load_config",
]

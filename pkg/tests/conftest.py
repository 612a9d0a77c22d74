import pytest
from hypothesis import settings

from src.config import global_config

# 压缩与不动点在较大的族上会超过默认的 200ms 期限
settings.register_profile("inc_kk", deadline=None, max_examples=100)
settings.load_profile("inc_kk")


@pytest.fixture(autouse=True)
def reset_global_config():
    global_config.reset()
    yield
    global_config.reset()

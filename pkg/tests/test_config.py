import pytest
import tomlkit

from src.config import Config, ConfigManager, dump_config, init_config, load_config
from src.config.official_configs import CONFIG_VERSION, DebugConfig, IdentitiesConfig, VerifyConfig


def test_defaults():
    config = Config()
    assert config.inner.version == CONFIG_VERSION
    assert (config.verify.n, config.verify.d, config.verify.all_m) == (6, 3, True)
    assert config.identities.grades == [2, 3, 4]
    assert config.identities.samples == 10000
    assert (config.segments.max_elem, config.segments.max_d) == (8, 4)
    assert (config.search.n, config.search.d, config.search.max_m) == (6, 2, 4)
    assert config.fixpoint.max_iterations == 0
    assert config.debug.level == "INFO"


def test_from_dict_partial_sections():
    config = Config.from_dict({"verify": {"n": 5, "jobs": 4}, "identities": {"grades": [2]}})
    assert config.verify.n == 5 and config.verify.jobs == 4
    assert config.verify.d == 3
    assert config.identities.grades == [2]


@pytest.mark.parametrize(
    "data, error",
    [
        ({"verify": {"n": "six"}}, TypeError),
        ({"verify": {"n": True}}, TypeError),
        ({"verify": {"bogus": 1}}, ValueError),
        ({"debug": {"level": "LOUD"}}, TypeError),
        ({"identities": {"grades": 3}}, TypeError),
    ],
)
def test_from_dict_rejects(data, error):
    with pytest.raises(error):
        Config.from_dict(data)


def test_section_from_dict():
    assert VerifyConfig.from_dict({"partition_bits": 2}).partition_bits == 2
    assert DebugConfig.from_dict({"level": "DEBUG"}).level == "DEBUG"
    assert IdentitiesConfig.from_dict({}).max_elem == 9


def test_template_loads(tmp_path):
    path = tmp_path / "config.toml"
    assert init_config(str(path))
    assert not init_config(str(path))
    assert load_config(str(path)) == Config()


def test_version_mismatch_is_accepted(tmp_path):
    path = tmp_path / "config.toml"
    path.write_text('[inner]\nversion = "0.0.1"\n[search]\nmax_m = 2\n', encoding="utf-8")
    config = load_config(str(path))
    assert config.search.max_m == 2


def test_dump_roundtrip():
    config = Config.from_dict({"segments": {"max_elem": 6}})
    assert Config.from_dict(tomlkit.parse(dump_config(config)).unwrap()) == config


def test_manager_proxy(tmp_path):
    manager = ConfigManager()
    assert manager.verify.n == 6
    path = tmp_path / "config.toml"
    path.write_text("[verify]\nn = 5\n", encoding="utf-8")
    manager.load(str(path))
    assert manager.verify.n == 5
    manager.reset()
    assert manager.verify.n == 6
    with pytest.raises(AttributeError):
        manager._hidden
    with pytest.raises(AttributeError):
        manager.nothing_here

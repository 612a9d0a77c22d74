import os

import tomlkit

pyproject_path = os.path.join(os.path.dirname(os.path.dirname(__file__)), "pyproject.toml")
try:
    with open(pyproject_path, "r", encoding="utf-8") as f:
        __version__ = str(tomlkit.parse(f.read())["project"]["version"])
except (OSError, KeyError):
    __version__ = "0.0.0"

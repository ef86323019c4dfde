from string import Template
from typing import Any
import os


def expand_references(config: Any, env: dict[str, str] | None = None) -> Any:
    """Expand ``$VAR`` references and a leading ``~`` in every string of a config tree.

    Unknown variables are left as written. ``None`` values are dropped so the
    model defaults apply.
    """
    if env is None:
        env = os.environ.copy()

    if isinstance(config, str):
        expanded = Template(config).safe_substitute(env)
        if expanded == "~" or expanded.startswith("~/"):
            home = env.get("HOME")
            expanded = (
                home + expanded[1:] if home is not None else os.path.expanduser(expanded)
            )
        return expanded

    elif isinstance(config, dict):
        return {
            k: expand_references(v, env) for k, v in config.items() if v is not None
        }

    elif isinstance(config, list):
        return [expand_references(v, env) for v in config]

    return config

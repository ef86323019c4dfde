import json
from typing import Any
from loguru import logger


def load_config(file: str) -> dict[str, Any]:
    try:
        with open(file, "r") as f:
            data = json.load(f)

    except FileNotFoundError:
        logger.warning(f'config file "{file}" was not found, using defaults')
        return {}

    except json.JSONDecodeError as e:
        logger.error(f'config file "{file}" is not valid json: {e.msg} (line {e.lineno})')
        return {}

    if not isinstance(data, dict):
        logger.error(f'config file "{file}" must hold a json object')
        return {}

    return data

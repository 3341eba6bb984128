"""Shipped-dataset lookup, overridable per call or via NILPOTENT_DATA_DIR."""

from __future__ import annotations

import os
from importlib import resources

DATA_ENV_VAR = "NILPOTENT_DATA_DIR"


def data_path(name: str, data_dir=None) -> str:
    data_dir = data_dir or os.environ.get(DATA_ENV_VAR)
    if data_dir:
        path = os.path.join(data_dir, name)
        if not os.path.exists(path):
            raise FileNotFoundError(f"dataset file {name} not found in {data_dir}")
        return path
    return str(resources.files("nilpotent").joinpath("data", name))

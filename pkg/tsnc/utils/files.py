"""
This module contains file helpers.
"""
import os
import tempfile
from typing import Union

__all__ = ["write_atomic"]


def write_atomic(path: Union[str, os.PathLike], text: str) -> None:
    """Writes `text` to `path` through a temporary file in the same directory, so that `path`
    either keeps its old content or holds the whole new text.

    Args:
        path (str or PathLike): The destination file.
        text (str): The content, written as UTF-8.
    """
    path = os.fspath(path)
    directory = os.path.dirname(os.path.abspath(path))
    descriptor, temporary = tempfile.mkstemp(dir=directory, prefix=".tsnc-", suffix=".tmp")
    try:
        with os.fdopen(descriptor, "w", encoding="utf-8") as file:
            file.write(text)
        os.replace(temporary, path)
    except BaseException:
        if os.path.exists(temporary):
            os.remove(temporary)
        raise

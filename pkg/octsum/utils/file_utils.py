"""Utility functions for file handling."""

import os
from pathlib import Path
from typing import Union

PathLike = Union[str, Path]


def ensure_dir(directory: PathLike) -> Path:
    """
    Create a directory (and parents) if it does not exist.

    Args:
        directory: Directory path

    Returns:
        The directory as a Path
    """
    path = Path(directory)
    os.makedirs(path, exist_ok=True)
    return path


def write_text(file_path: PathLike, text: str) -> Path:
    """
    Write UTF-8 text, creating the parent directory first.

    Args:
        file_path: Destination file
        text: Content

    Returns:
        The destination as a Path
    """
    path = Path(file_path)
    if path.parent != Path(""):
        ensure_dir(path.parent)
    with open(path, "w", encoding="utf-8") as f:
        f.write(text)
    return path

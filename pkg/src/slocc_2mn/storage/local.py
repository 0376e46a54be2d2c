"""
Storage class for a local file system.
"""

from pathlib import Path

from ..settings import SETTINGS
from ._base import BaseStorage

__all__ = ["LocalStorage"]


class LocalStorage(BaseStorage):
    """
    Storage interface for a local file system.
    """

    def __init__(self, root: Path | str | None = None):
        """
        Perform validation during initialisation.

        Parameters
        ----------
        root : Path | str, optional
            Export directory. Defaults to `EXPORT_PATH` from the environment.
        """
        root = root if root is not None else SETTINGS.export_path
        if root is None:
            raise KeyError(
                "Environment variable for local storage is not set. You must provide "
                "`EXPORT_PATH`"
            )
        self.root = Path(root)

    def __repr__(self) -> str:
        return f"LocalStorage(root={str(self.root)!r})"

    def join_path(self, file_path: str) -> str:
        """
        Get a full path to a file.

        The function creates any intermediary directories if they
        don't already exist.

        Parameters
        ----------
        file_path : str
            Relative path to the file within the export directory.

        Returns
        -------
        str
            Full path to the file.
        """
        file_path = self.root.joinpath(file_path)
        if not file_path.parent.exists():
            file_path.parent.mkdir(parents=True, exist_ok=True)
        return str(file_path)

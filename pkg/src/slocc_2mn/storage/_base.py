"""
Base class to build storage interfaces for exported catalogs and tables.
"""

import json
import os
from abc import ABC, abstractmethod
from datetime import UTC, datetime
from typing import final

import pandas as pd

__all__ = ["BaseStorage"]


class BaseStorage(ABC):
    """
    Abstract class to build storage interfaces.
    """

    @final
    @property
    def version(self) -> str:
        """
        Get a version timestamp for versioning exports in the storage.

        Returns
        -------
        str
            Version string in the format vYY-MM-DD.
        """
        return datetime.now(UTC).strftime("v%y-%m-%d")

    @abstractmethod
    def join_path(self, file_path: str) -> str:
        """
        Get a full path to a file.
        """

    @final
    def write_document(self, document: dict, name: str, folder_path: str = "") -> str:
        """
        Write a JSON document to the storage.

        Parameters
        ----------
        document : dict
            JSON-serialisable document, e.g., a catalog of classes.
        name : str
            File name without the extension.
        folder_path : str, optional
            Path within the storage to write the file to.

        Returns
        -------
        str
            Full path to the file in the storage.
        """
        file_path = self.join_path(os.path.join(self.version, folder_path, f"{name}.json"))
        with open(file_path, "w", encoding="utf-8") as file:
            json.dump(document, file, indent=2, ensure_ascii=False)
            file.write("\n")
        return str(file_path)

    @final
    def write_dataset(self, df: pd.DataFrame, name: str, folder_path: str = "") -> str:
        """
        Write a data frame to the storage as a CSV file.

        Parameters
        ----------
        df : pd.DataFrame
            Dataset to be written, e.g., the long-format count table.
        name : str
            File name without the extension.
        folder_path : str, optional
            Path within the storage to write the file to.

        Returns
        -------
        str
            Full path to the file in the storage.
        """
        file_path = self.join_path(os.path.join(self.version, folder_path, f"{name}.csv"))
        df.to_csv(file_path, index=False)
        return str(file_path)

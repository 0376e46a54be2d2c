"""
Storage interfaces for exporting catalogs and count tables.
"""

import logging

from ..settings import SETTINGS
from ._base import BaseStorage
from .local import LocalStorage

__all__ = ["BaseStorage", "LocalStorage", "get_storage"]

logger = logging.getLogger(__name__)


def get_storage(**kwargs) -> BaseStorage:
    """
    Utility function to get a storage based on keyword arguments or environment variables.

    Parameters
    ----------
    **kwargs
        Keyword arguments passed to the storage class.

    Returns
    -------
    BaseStorage
        Storage class.
    """
    if kwargs.get("root") is None and SETTINGS.export_path is None:
        raise KeyError("Environment variable for local storage is not set.")
    storage = LocalStorage(**kwargs)
    logger.info("Using %s storage", storage)
    return storage

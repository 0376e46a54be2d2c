"""
Property checks run by `slocc-2mn selftest`. Each check lives in its own submodule
and exposes a `Check` class derived from `BaseCheck`.
"""

import importlib
import pkgutil

from ._base import BaseCheck, CheckResult
from ._suite import Suite

__all__ = ["BaseCheck", "CheckResult", "Suite", "list_checks", "get_check", "get_suite"]


def list_checks() -> list[str]:
    """
    List checks available in the package.

    Returns
    -------
    list[str]
        List of check names that can be used to get a specific check.
    """
    return [
        name
        for module_info in pkgutil.iter_modules(__path__)
        if not (name := module_info.name).startswith("_")
    ]


def get_check(name: str, **kwargs) -> BaseCheck:
    """
    Get a runnable check.

    Parameters
    ----------
    name : str
        Name of the check as returned in `list_checks`.
    **kwargs
        Keyword arguments passed to the check, e.g., `seed` or `trials`.

    Returns
    -------
    BaseCheck
        Runnable check instance.

    Raises
    ------
    ValueError
        If `name` does not match any existing check.
    """
    checks = set(list_checks())
    if name not in checks:
        raise ValueError(f"Check '{name}' does not exist. Available checks: {sorted(checks)}")
    module = importlib.import_module(f".{name}", package=__package__)
    return module.Check(**kwargs)


def get_suite(names: list[str] | None = None, **kwargs) -> Suite:
    """
    Get a suite of checks sharing the same seed, trials and progress settings.

    Parameters
    ----------
    names : list[str], optional
        Checks to include. Defaults to every available check.
    **kwargs
        Keyword arguments passed to every check.

    Returns
    -------
    Suite
        Runnable suite.
    """
    names = list_checks() if names is None else names
    return Suite(checks=[get_check(name, **kwargs) for name in names])

#!/usr/bin/env python3
"""
Version information for prodgraph
"""

import platform

import numpy

# Static version
__version__ = "0.3.0"


def get_version() -> str:
    """
    Get the application version

    Returns:
        Version string
    """
    return __version__


def get_version_info() -> dict:
    """
    Get detailed version information

    Reports the numeric stack as well, since spectra depend on it.

    Returns:
        Dictionary with version details
    """
    return {
        "version": get_version(),
        "python": platform.python_version(),
        "numpy": numpy.__version__,
    }


if __name__ == "__main__":
    print(get_version())

"""
Prints the installed version.
"""

from importlib.metadata import PackageNotFoundError
from importlib.metadata import version as package_version

from pystirling.logger import logger

PACKAGE_NAME = "pystirling"


def version() -> str:
    try:
        installed = package_version(PACKAGE_NAME)
    except PackageNotFoundError:
        logger.warning("Package metadata for %s not found", PACKAGE_NAME)
        installed = "unknown"

    print(f"{PACKAGE_NAME} {installed}")
    return installed

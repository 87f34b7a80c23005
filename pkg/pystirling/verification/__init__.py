# pylint: disable=missing-module-docstring

from .report import CheckFailure, VerifyReport

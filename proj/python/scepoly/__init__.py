"""Exact SCE polynomial families, generating functions and antiderivatives."""

from ._core import *  # noqa: F401,F403
from ._core import QuadratureError  # noqa: F401

__version__ = "0.1.0"

"""Verification and exploration toolkit for the prime + k-th power problem.

The heavy lifting lives in the C++ extension; this package re-exports it.
"""

from pkpow._core import *  # noqa: F401,F403
from pkpow._core import __doc__  # noqa: F401

__version__ = "0.1.0"

"""Dismal arithmetic: digitwise max for addition, min for multiplication."""

from ._dismal import *  # noqa: F401,F403
from ._dismal import DismalError, BudgetExceeded, Number  # noqa: F401

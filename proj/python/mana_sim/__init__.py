# SPDX-License-Identifier: Apache-2.0
# Copyright 2026 The mana-sim Authors

"""Two-user movable-antenna NOMA downlink simulator."""

from ._mana import *  # noqa: F401,F403
from ._mana import ConfigError

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"

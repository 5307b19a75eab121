# SPDX-License-Identifier: Apache-2.0
"""Circuit-level beam squint simulation for mutually coupled wideband arrays.

Thin Python veneer over the C++ core. All functionality lives in the
compiled extension; this package only re-exports it.
"""

from squintlib._squintlib import *  # noqa: F401,F403
from squintlib._squintlib import __version__  # noqa: F401

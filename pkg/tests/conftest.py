"""Make the package importable from a bare checkout.

Prefer the installed package (which may carry the compiled kernel); fall
back to the source tree, where the pure-Python backend is selected.
"""

import sys
from pathlib import Path

try:
    import motivecount  # noqa: F401
except ImportError:
    sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

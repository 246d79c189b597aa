"""Put src/ on the import path, as run_chebq.py does."""

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent / "src"))

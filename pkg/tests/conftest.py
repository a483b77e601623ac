import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

from hypothesis import settings

# brute-force enumeration makes wall-clock limits machine dependent
settings.register_profile("suite", deadline=None)
settings.load_profile("suite")

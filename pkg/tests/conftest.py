import os
import sys

from hypothesis import settings

sys.path.insert(0, os.path.dirname(__file__))

# fixed seed so property runs are reproducible
settings.register_profile("pinned", derandomize=True, deadline=None, max_examples=60)
settings.load_profile("pinned")

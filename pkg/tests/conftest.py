import os
import sys

# The unit tests import ``test_constants`` from this directory (the run_*.sh
# scripts generate it); make it importable under pytest.
sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

from omegalie import groebner

# re-verify every Buchberger output during the test suite
groebner.CHECK_POSTCONDITIONS = True

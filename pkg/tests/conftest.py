import os
import sys

# make common.py importable regardless of how pytest was invoked
sys.path.insert(0, os.path.dirname(__file__))

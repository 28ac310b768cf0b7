import os
import sys

# Top-level packages (config, services, utils) import from the project root.
sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

"""
Entry point for running nlfm as a module: python -m nlfm
"""

import sys

from nlfm.main import main

if __name__ == "__main__":
    sys.exit(main())

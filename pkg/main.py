"""
Entry point: ``python main.py run|check|emit-verilog ...``
"""

import sys

from snnchip.cli import main

if __name__ == "__main__":
    sys.exit(main())

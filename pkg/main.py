"""
main.py, root of the project
"""

import sys

from converse import create_app

app = create_app()

if __name__ == "__main__":
    sys.exit(app.run())

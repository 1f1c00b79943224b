import sys

from flipdom.cli import main

sys.exit(main())

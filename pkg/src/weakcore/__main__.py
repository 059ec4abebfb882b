import sys

from weakcore.cli import main

sys.exit(main())

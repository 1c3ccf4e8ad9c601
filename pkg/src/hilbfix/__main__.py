import sys

from hilbfix.cli import main

sys.exit(main())

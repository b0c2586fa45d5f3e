import sys

from circmem.cli import main

sys.exit(main())

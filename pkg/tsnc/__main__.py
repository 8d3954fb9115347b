import sys

from tsnc.cli import main

sys.exit(main())

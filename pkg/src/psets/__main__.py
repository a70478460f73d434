import sys

from psets.cli import main

sys.exit(main())

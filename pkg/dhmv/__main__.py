import sys

from dhmv.cli import main

sys.exit(main())

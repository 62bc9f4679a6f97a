import sys

from coinwalk.cli import main

sys.exit(main())

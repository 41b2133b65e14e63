import sys

from qdepth.cli import main

sys.exit(main())

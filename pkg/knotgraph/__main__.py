import sys

from knotgraph.cli import main

sys.exit(main())

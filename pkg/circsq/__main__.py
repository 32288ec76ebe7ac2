import sys
from circsq.experiments.cli import main

sys.exit(main())

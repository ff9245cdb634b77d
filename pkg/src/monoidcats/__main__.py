import sys

from monoidcats.cli import main

sys.exit(main())

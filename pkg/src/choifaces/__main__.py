import sys

from choifaces.cli import main

sys.exit(main())

import sys

from triembed.cli import main

sys.exit(main())

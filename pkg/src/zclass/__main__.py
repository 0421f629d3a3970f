import sys

from zclass.cli import main

sys.exit(main())

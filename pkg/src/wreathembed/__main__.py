import sys

from wreathembed.cli import main

sys.exit(main())

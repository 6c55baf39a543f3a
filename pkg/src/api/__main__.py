import sys

from src.api.main import main

sys.exit(main())

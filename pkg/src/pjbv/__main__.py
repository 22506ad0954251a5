import sys

from pjbv.report.cli import main


sys.exit(main())

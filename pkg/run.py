import sys

from hypertri.main import main

if __name__ == "__main__":
	sys.exit(main())

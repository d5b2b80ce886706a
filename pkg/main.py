#!/usr/bin/env python3

import sys
import logging

# inner modules
from cli import app

def main () -> None:
    logging.basicConfig(format='%(levelname)s: %(message)s')
    sys.exit(app.run(sys.argv[1:]))

if __name__ == '__main__':
    main()

import sys

from .cli import execute

if __name__ == '__main__':
    sys.exit(execute(sys.argv[1:]))

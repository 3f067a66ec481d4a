"""Точка входа для запуска как модуль: python -m cisgraphs"""

import sys

from .main import main

if __name__ == '__main__':
    sys.exit(main())

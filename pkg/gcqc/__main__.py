"""``python -m gcqc``"""
import sys

from .cli import main

sys.exit(main())

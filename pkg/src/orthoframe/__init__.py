#!/usr/bin/env python3
#
# __init__.py
#
# MIT License - see LICENSE
from .cli import main

__all__ = ["main"]

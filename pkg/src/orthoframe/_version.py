#!/usr/bin/env python3
#
# _version.py
#
# MIT License - see LICENSE
__version__ = "1.0.0"

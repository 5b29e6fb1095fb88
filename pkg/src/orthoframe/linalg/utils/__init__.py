#!/usr/bin/env python3
#
# __init__.py
#
# MIT License - see LICENSE

# -*- coding: utf-8 -*-
# *************************************
# kfpoly: Kostka-Foulkes polynomials and q-multiplicities
#
# Copyright (c) 2026 kfpoly Developers
#
# *************************************

version_info = (0, 1, 0)
__version__ = ".".join(map(str, version_info))

# -*- coding: utf-8 -*-
# *************************************
# kfpoly: Kostka-Foulkes polynomials and q-multiplicities
#
# Copyright (c) 2026 kfpoly Developers
#
# *************************************

from .cli import main

if __name__ == "__main__":
    main()

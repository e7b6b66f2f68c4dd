# -*- coding: utf-8 -*-
# Copyright (c) 2026 The sgraphs authors
# This code is distributed under the 2-clause BSD License.

__author__ = "The sgraphs authors"
__version__ = '0.1.0'

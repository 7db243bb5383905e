# -*- coding: utf-8 -*-
"""
Privacy package: syntactic privacy models, reidentification risk,
the lattice anonymizer and utility metrics.
"""

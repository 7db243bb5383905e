# -*- coding: utf-8 -*-
"""
Differential privacy sub-library: randomized response, epsilon calculus
and the privacy budget ledger.
"""

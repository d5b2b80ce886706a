#!/usr/bin/env python3

""" A module for the Coulomb-Sturmian basis, its analytic matrix elements and the quadrature oracle. """

#!/usr/bin/env python3

""" A module to assemble the Feshbach-Villars and Schroedinger operators in the Coulomb-Sturmian basis. """

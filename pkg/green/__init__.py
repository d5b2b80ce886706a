#!/usr/bin/env python3

""" A module for Green's matrices of the long-range Hamiltonian via matrix continued fractions. """

#!/usr/bin/env python3

""" A module for the command line interface, run configuration and output files. """

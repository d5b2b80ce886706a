#!/usr/bin/env python3

""" A module for potential models and the low-rank short-range representation. """

#!/usr/bin/env python3

""" A module to locate bound and resonant states. """

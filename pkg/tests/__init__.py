#!/usr/bin/env python3

""" A module for testing the app. """

"""
Tests for the Toric Envelope Workbench
"""

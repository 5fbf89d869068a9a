"""Test suite for prerad-lab."""

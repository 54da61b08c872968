"""Test suite for polyhopf."""

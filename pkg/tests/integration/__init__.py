"""End-to-end tests of the polyhopf command line."""

"""Unit tests for the algebra, Hopf, spin, polygon and verification layers."""

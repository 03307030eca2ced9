"""Test suite for pseudodyn."""

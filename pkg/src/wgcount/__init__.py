"""Exact enumeration of bounded vertex weightings of simple graphs."""

"""Interpretation of syntax in the set model and judgment checking."""

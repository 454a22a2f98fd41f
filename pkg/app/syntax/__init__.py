"""Syntax of the explicit-substitution calculus: trees, reader, parser, printer and scoping."""

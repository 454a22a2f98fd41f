"""Seeded rule instances and the soundness suite."""

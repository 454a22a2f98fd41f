"""Iterative sets: keys, sets, bisimulation equality and the basic constructions."""

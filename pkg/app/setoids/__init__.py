"""Setoids, families and subsetoids, and the functor from sets to setoids."""

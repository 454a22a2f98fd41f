"""Universe codes and the cumulative hierarchy of universe sets."""

"""Runtime budgets for knot-graphs."""

"""Feature-map circuits embedding a continuous variable."""

# Value types for the two-level atom toolkit

# Services for the two-level atom toolkit: sweeps, dynamics runs, audits, regime checks

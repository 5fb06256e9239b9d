"""Batch front end: scenarios, report emission and the verification suite."""

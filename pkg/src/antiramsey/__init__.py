"""Exact anti-Ramsey (rainbow) numbers of small graphs."""

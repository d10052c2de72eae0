"""Evaluation codes at the roots of a trace polynomial, their subfield-subcodes,
and the stabilizer codes they give."""

__version__ = "0.1.0"

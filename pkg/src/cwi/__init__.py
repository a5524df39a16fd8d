"""Complex word identification: lexical features, from-scratch learners, evaluation."""

__version__ = "0.1.0"

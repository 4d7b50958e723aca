"""Synthesis package: constructive Markov circuits."""

from .synthesiser import MarkovSynthesiser, SynthesisLevel, SynthesisTrace

__all__ = [
    "MarkovSynthesiser",
    "SynthesisLevel",
    "SynthesisTrace"
]

"""normlogic: a reduction compiler from quantifier-free arithmetic to
universal-implication sentences over normed planes, with the numerical
geometry needed to verify the constructions it relies on."""

__version__ = "0.1.0"

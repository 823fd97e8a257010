"""Series reversion, Padé resummation and parametric representations of E(g)."""
__version__ = "0.1.0"

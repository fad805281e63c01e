"""spiderweb: an exact engine for the SL(2)/SL(3) spider calculus."""

__version__ = "0.1.0"

"""Fair division of a one-dimensional resource.

Cake-cutting protocols over the unit interval, fairness audits, discrete
point-bidding procedures, and small strategic-form game utilities, with a
scenario-driven command line (``cakeshare``).
"""

__version__ = "0.1.0"

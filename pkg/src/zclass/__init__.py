"""z-classes, rational classes and restricted partitions for symmetric and alternating groups."""

__version__ = "0.1.0"

__all__ = ["quantum", "noise", "network", "protocol", "harness"]

__version__ = "0.1.0"

"""Zero-divisor graphs of finite semirings."""

__version__ = "0.1.0"

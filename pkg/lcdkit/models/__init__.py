# Domain models for lcdkit

from .code import LcdType, LinearCode

__all__ = ["LcdType", "LinearCode"]

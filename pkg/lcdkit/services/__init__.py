"""Services package for lcdkit"""

__all__ = ["census_cache", "counting", "normalform", "oracle"]

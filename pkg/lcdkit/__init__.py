# lcdkit - exact toolkit for LCD codes over prime fields

__version__ = "1.0.0"
__description__ = "Exact-arithmetic toolkit for linear complementary dual codes"

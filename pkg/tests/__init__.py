# Test package for lcdkit

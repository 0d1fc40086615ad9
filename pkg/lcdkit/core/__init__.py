# Core arithmetic and configuration for lcdkit

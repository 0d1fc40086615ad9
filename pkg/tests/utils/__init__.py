"""Test utilities package"""

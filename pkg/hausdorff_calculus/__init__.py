"""Top-level package for Hausdorff Calculus."""

__author__ = """Thomas Reiser"""
__email__ = 'reiser.thomas@gmail.com'
__version__ = '1.0.0'

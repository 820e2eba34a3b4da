"""Unit test package for hausdorff_calculus."""

"""Gamma-kernel estimation of densities and regression functions for
non-negative data, with Monte Carlo verification of the estimators'
limit theorems."""

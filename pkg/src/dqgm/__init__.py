"""Differentiable quantum generative models."""

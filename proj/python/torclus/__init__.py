"""Toroidal cluster algebras and toroidal Grothendieck rings."""

from ._torclus import (
    Seed,
    TorclusError,
    ctilde,
    fundamental_class,
    n_product,
    star,
    verify,
    verify_ids,
)

__all__ = [
    "Seed",
    "TorclusError",
    "ctilde",
    "fundamental_class",
    "n_product",
    "star",
    "verify",
    "verify_ids",
]

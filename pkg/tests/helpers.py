"""Shared shorthand for building exact elements in tests."""

import random
from fractions import Fraction

from liejacobi.exterior import Form, Multivector


def mv(dim, grade, terms):
    """Multivector literal: terms maps index tuples to ints/Fractions."""
    return Multivector.from_terms(dim, grade,
                                  {idx: Fraction(c) for idx, c in terms.items()})


def fm(dim, grade, terms):
    return Form.from_terms(dim, grade,
                           {idx: Fraction(c) for idx, c in terms.items()})


def vec(dim, i):
    return Multivector.basis(dim, i)


def cov(dim, i):
    return Form.basis(dim, i)


def random_fraction(rng: random.Random, bound=3) -> Fraction:
    return Fraction(rng.randint(-bound, bound), rng.randint(1, bound))


def random_element(rng: random.Random, cls, dim, grade, terms=2, bound=3):
    """Sparse random element with small rational coefficients; grade clamps to dim."""
    grade = min(grade, dim)
    out = cls.zero(dim, grade)
    for _ in range(terms):
        idx = tuple(sorted(rng.sample(range(dim), grade)))
        out = out + cls.from_terms(dim, grade, {idx: random_fraction(rng, bound)})
    return out

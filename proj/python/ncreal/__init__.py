"""Real radicals of finitely generated left ideals in the free *-algebra Q<x, x*>.

The heavy lifting lives in the compiled extension; this package adds
string-friendly wrappers so ideals can be written as plain text, e.g.

    >>> import ncreal
    >>> ncreal.radical_generators(["x1* x1"])
    ['x1']
"""

from ._ncreal import (
    ParseError,
    Poly,
    RealRadicalUndecidedError,
    UndecidedError,
    alpha_member,
    eradical,
    eradical_member,
    is_real,
    member,
    parse_poly,
    print_poly,
    real_radical,
    smith_normal_form,
)

__all__ = [
    "ParseError",
    "Poly",
    "RealRadicalUndecidedError",
    "UndecidedError",
    "alpha_member",
    "eradical",
    "eradical_member",
    "is_real",
    "member",
    "parse_poly",
    "print_poly",
    "radical_generators",
    "real_radical",
    "smith_normal_form",
]


def _polys(gens):
    return [parse_poly(p) if isinstance(p, str) else p for p in gens]


def radical_generators(gens, g=-1, **kwargs):
    """Generators of the real radical, as canonical strings."""
    result = real_radical(_polys(gens), g=g, **kwargs)
    return [print_poly(p) for p in result["generators"]]

"""Built-in presentations.

Six presets ship with the package, compiled in here and mirrored as
``.opd`` files under ``operads/data`` (the file copies are the golden
fixtures; a test keeps them byte-identical):

    as    one planar binary product, associativity
    uas   the same plus a 0-ary unit generator
    com   symmetric binary product, associativity and commutativity
    ucom  the same plus a 0-ary unit generator
    ass   symmetric binary product, associativity only
    lie   symmetric bracket, anticommutativity and the Jacobi sum

Presets with a 0-ary generator support composition and representation
work only; basis enumeration and quotient computations need every
generator arity to be at least 2. Unit axioms are equalities in arity 1
and therefore cannot be stored as relations (relations have arity >= 2);
the unital presets carry the associativity/commutativity relations only.
"""

from __future__ import annotations

from functools import lru_cache

from .quotient import Presentation
from .termio import load_presentation

PRESET_SOURCES: dict[str, str] = {
    "as": """\
{
  "name": "as",
  "mode": "planar",
  "generators": [{"name": "mu", "arity": 2}],
  "relations": ["assoc: mu(mu(1,2),3) - mu(1,mu(2,3))"]
}
""",
    "uas": """\
{
  "name": "uas",
  "mode": "planar",
  "generators": [{"name": "eta", "arity": 0}, {"name": "mu", "arity": 2}],
  "relations": ["assoc: mu(mu(1,2),3) - mu(1,mu(2,3))"]
}
""",
    "com": """\
{
  "name": "com",
  "mode": "symmetric",
  "generators": [{"name": "mu", "arity": 2}],
  "relations": ["assoc: mu(mu(1,2),3) - mu(1,mu(2,3))",
                "comm: mu(1,2) - mu(2,1)"]
}
""",
    "ucom": """\
{
  "name": "ucom",
  "mode": "symmetric",
  "generators": [{"name": "eta", "arity": 0}, {"name": "mu", "arity": 2}],
  "relations": ["assoc: mu(mu(1,2),3) - mu(1,mu(2,3))",
                "comm: mu(1,2) - mu(2,1)"]
}
""",
    "ass": """\
{
  "name": "ass",
  "mode": "symmetric",
  "generators": [{"name": "mu", "arity": 2}],
  "relations": ["assoc: mu(mu(1,2),3) - mu(1,mu(2,3))"]
}
""",
    "lie": """\
{
  "name": "lie",
  "mode": "symmetric",
  "generators": [{"name": "l", "arity": 2}],
  "relations": ["anti: l(1,2) + l(2,1)",
                "jacobi: l(l(1,2),3) + l(l(2,3),1) + l(l(3,1),2)"]
}
""",
}

PRESET_NAMES = tuple(PRESET_SOURCES)


@lru_cache(maxsize=None)
def get_preset(name: str) -> Presentation:
    try:
        src = PRESET_SOURCES[name]
    except KeyError:
        raise KeyError(
            f"unknown preset {name!r}; available: {sorted(PRESET_SOURCES)}"
        ) from None
    return load_presentation(src)

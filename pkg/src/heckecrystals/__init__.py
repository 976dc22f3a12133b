"""Crystals on 0-Hecke decreasing factorizations and set-valued tableaux.

The package provides, over exact integer arithmetic throughout:

* the 0-Hecke monoid with canonical forms via the Demazure product;
* decreasing factorizations, Hecke biwords and bounded enumeration;
* crystal operators on fully-commutative factorizations and on skew
  semistandard set-valued tableaux, intertwined by the residue map;
* Hecke row insertion and the star insertion with its inverse;
* the uncrowding map with flagged increasing recording tableaux;
* Schur expansions of stable Grothendieck polynomials by two
  independent pipelines;
* a local crystal on factorizations over the alphabet {1, 2};
* an exhaustive bounded verification harness behind ``verify``.
"""

from .errors import DomainError, ReconstructionError, ValidationError
from .factorization import (
    DecreasingFactorization,
    HeckeBiword,
    enumerate_factorizations,
    excess,
    from_biword,
    to_biword,
    weight,
)
from .hecke import (
    HeckeElement,
    HeckeWord,
    demazure_apply,
    equivalent,
    eval_word,
    fully_commutative_elements,
    identity,
    is_fully_commutative,
)
from .tableaux import (
    FlaggedIncreasingTableau,
    IncreasingTableau,
    RowIncreasingTableau,
    SemistandardTableau,
    SetValuedFilling,
    SkewSetValuedTableau,
    SkewShape,
    Tableau,
    excess_of,
    row_word,
    weight_of,
)

__version__ = "0.1.0"

"""Braid-monodromy group computations over plane-curve configurations.

Submodules: ``word_core`` (free-group words), ``braid`` (Artin actions),
``presentation`` (finitely presented groups, Tietze moves), ``schreier``
(subgroup presentations), ``analysis`` (Todd-Coxeter, Smith normal form),
``curves`` (exact conic/cubic geometry), ``pipeline`` (the cover
computation), ``cli`` (command line).
"""

from .analysis import (AbelianInvariants, CosetLimitExceeded, CosetTable,
                       abelian_invariants, holds_in, is_abelian,
                       smith_normal_form, todd_coxeter)
from .braid import Braid, act, braid_invert, compose
from .curves import (HomogPoly, ProjPoint, QuadScalar, cubic_discriminant,
                     family_cubic, hessian, is_tangent_at, sylvester_resultant,
                     verify_persson_configuration)
from .pipeline import (PipelineReport, orbifold_presentation, paper_braids,
                       pi_prime, regression_corpus, run, step5_crosscheck,
                       z2_cover_presentation)
from .presentation import (Presentation, TietzeLog, add_relators,
                           monodromy_relators, stabilizer_relators,
                           tietze_simplify)
from .schreier import CyclicMap, SchreierGenSet, Transversal, subgroup_presentation
from .word_core import Alphabet, GenSym, Word, alphabet, invert, multiply, reduce, substitute

__all__ = [
    "AbelianInvariants", "Alphabet", "Braid", "CosetLimitExceeded", "CosetTable",
    "CyclicMap", "GenSym", "HomogPoly", "PipelineReport", "Presentation",
    "ProjPoint", "QuadScalar", "SchreierGenSet", "TietzeLog", "Transversal",
    "Word", "abelian_invariants", "act", "add_relators", "alphabet",
    "braid_invert", "compose", "cubic_discriminant", "family_cubic", "hessian",
    "holds_in", "invert", "is_abelian", "is_tangent_at", "monodromy_relators",
    "multiply", "orbifold_presentation", "paper_braids", "pi_prime", "reduce",
    "regression_corpus", "run", "smith_normal_form", "stabilizer_relators",
    "step5_crosscheck", "subgroup_presentation", "substitute", "sylvester_resultant",
    "tietze_simplify", "todd_coxeter", "verify_persson_configuration",
    "z2_cover_presentation",
]

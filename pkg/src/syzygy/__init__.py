"""Exact homological algebra for monomial bound quiver algebras over prime fields."""

from .conditions import (
    SES,
    ConditionReport,
    check_Gnk,
    check_gnk_sample,
    cogenerator_check,
    gorenstein_summary,
    is_n_gorenstein,
    rn_property,
    syzygy_membership,
    verify_lemma21,
    verify_prop27,
)
from .corpus import CORPUS, CorpusEntry, builtin, random_module, random_ses
from .homological import (
    ThreeValued,
    Verdict,
    ext_dim,
    ext_module,
    gorenstein_dim_zero,
    is_n_torsionfree,
    is_torsionless,
    transpose,
)
from .path_algebra import MonomialAlgebra, NotFiniteDimensional, Path, Quiver, from_names
from .rep import (
    Rep,
    RepMap,
    direct_sum,
    hom_dim,
    injective,
    is_isomorphic,
    k_dual,
    projective,
    regular,
    simple,
    strip_projective_summands,
)
from .resolutions import ExceedsCap, inj_dim, min_resolution, proj_dim, syzygy

__version__ = "0.1.0"

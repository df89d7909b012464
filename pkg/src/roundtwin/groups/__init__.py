from .maps import (
    Permutation,
    bar,
    is_pure,
    kappa,
    mu,
    mu_prime,
    perm_image,
    perm_image_annular,
    perm_image_cactus,
    perm_image_twin,
    round_to_annular,
)
from .presentations import PresentationReport, relators, verify_presentation
from .solver import (
    DEFAULT_MAX_NODES,
    SolverBudgetExceeded,
    cactus_equal,
    cactus_is_trivial,
    twin_equal,
    twin_is_trivial,
)
from .words import AnnularWord, CactusWord, MuWord, TwinWord, WordError, free_reduce

__all__ = [
    "AnnularWord", "CactusWord", "MuWord", "TwinWord", "WordError", "free_reduce",
    "Permutation", "bar", "is_pure", "kappa", "mu", "mu_prime", "perm_image",
    "perm_image_annular", "perm_image_cactus", "perm_image_twin", "round_to_annular",
    "PresentationReport", "relators", "verify_presentation",
    "DEFAULT_MAX_NODES", "SolverBudgetExceeded", "cactus_equal", "cactus_is_trivial",
    "twin_equal", "twin_is_trivial",
]

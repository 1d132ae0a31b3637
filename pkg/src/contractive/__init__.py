# Contractive module
from src.contractive.pseudo_auto import PseudoAutoCheckConfig, check_injective, check_pseudo_automorphism, padic_steps
from src.contractive.degeneracy import finite_contractive_degeneracy, search_degeneracy
from src.contractive.lemmas import phi_preserves_eval, contractive_implies_assoc
from src.contractive.kernel import KernelTowerQuery, KernelAnswer, Membership, kernel_tower_membership
from src.contractive.shrink import ShrinkResult, shrink_neighborhood
from src.contractive.report import Report, StageResult
from src.contractive.pipeline import structure_pipeline, default_V

__all__ = [
    "PseudoAutoCheckConfig", "check_pseudo_automorphism", "check_injective", "padic_steps",
    "finite_contractive_degeneracy", "search_degeneracy",
    "phi_preserves_eval", "contractive_implies_assoc",
    "KernelTowerQuery", "KernelAnswer", "Membership", "kernel_tower_membership",
    "ShrinkResult", "shrink_neighborhood",
    "Report", "StageResult",
    "structure_pipeline", "default_V",
]

# Globalization module
from src.globalization.presentation import Presentation, present
from src.globalization.rewriting import RewriteSystem, complete, shortlex_key
from src.globalization.targets import CircleGroup, target_from_dict
from src.globalization.extension import (
    MorphismSpec, GroupExtension, InstanceExtension,
    extend_morphism, extend_instance_morphism, check_morphism_sampled,
)
from src.globalization.iota import verify_iota, check_local_equality

__all__ = [
    "Presentation", "present",
    "RewriteSystem", "complete", "shortlex_key",
    "CircleGroup", "target_from_dict",
    "MorphismSpec", "GroupExtension", "InstanceExtension",
    "extend_morphism", "extend_instance_morphism", "check_morphism_sampled",
    "verify_iota", "check_local_equality",
]

# Exact instance module
from src.instances.padic import PadicInt, is_prime
from src.instances.spec import Family, InstanceSpec, EndoSpec, load_instance, load_endo
from src.instances.balls import BallSet, cofinal_balls, strong_ball
from src.instances.view import InstanceView, as_local_group_view, sample, partial_product, apply_endo

__all__ = [
    "PadicInt", "is_prime",
    "Family", "InstanceSpec", "EndoSpec", "load_instance", "load_endo",
    "BallSet", "cofinal_balls", "strong_ball",
    "InstanceView", "as_local_group_view", "sample", "partial_product", "apply_endo",
]

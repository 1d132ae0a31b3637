# Local-group core module
from src.core.local_group import (
    FiniteLocalGroup, LocalGroupView, UNDEFINED, load_local_group, dump_local_group,
)
from src.core.groups import FiniteGroup, cyclic, dihedral, load_group
from src.core.verdict import Verdict, Status, Certificate, Violation
from src.core.axioms import AxiomReport, check_axioms, require_axioms
from src.core.constructions import (
    symmetrize, is_symmetric, restrict, is_neat, from_group_restriction, restrict_endomorphism,
)
from src.core.morphisms import check_morphism, is_injective
from src.core.enumeration import enumerate_local_groups, random_local_group

__all__ = [
    "FiniteLocalGroup", "LocalGroupView", "UNDEFINED", "load_local_group", "dump_local_group",
    "FiniteGroup", "cyclic", "dihedral", "load_group",
    "Verdict", "Status", "Certificate", "Violation",
    "AxiomReport", "check_axioms", "require_axioms",
    "symmetrize", "is_symmetric", "restrict", "is_neat", "from_group_restriction",
    "restrict_endomorphism",
    "check_morphism", "is_injective",
    "enumerate_local_groups", "random_local_group",
]

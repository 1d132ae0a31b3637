# Word calculus module
from src.words.evaluation import eval_some, eval_all, extend_column
from src.words.bracketings import bracketings, eval_by_bracketings, render_tree
from src.words.associativity import check_global_assoc, strong_domain, StrongDomain
from src.words.witness_search import search_non_associative, SearchResult

__all__ = [
    "eval_some", "eval_all", "extend_column",
    "bracketings", "eval_by_bracketings", "render_tree",
    "check_global_assoc", "strong_domain", "StrongDomain",
    "search_non_associative", "SearchResult",
]

from .runner import AggregateReport, StatementReport, check_statement, verify_corpus
from .statements import OUT_OF_SCOPE, REGISTRY, Statement, statement_ids
from .structures import FiniteStructure, MinPlusStructure, structure_for

__all__ = [
    "AggregateReport", "FiniteStructure", "MinPlusStructure", "OUT_OF_SCOPE", "REGISTRY", "Statement",
    "StatementReport", "check_statement", "statement_ids", "structure_for", "verify_corpus",
]

from .verdict_logger import VerdictLogger

__all__ = ["VerdictLogger"]

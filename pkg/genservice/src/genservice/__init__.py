"""HTTP negation-generation service speaking the /negate plugin protocol."""

from .app import create_app
from .batching import BatchWorker
from .config import ServiceConfig
from .model import Seq2SeqNegator

__version__ = "0.1.0"

__all__ = ["BatchWorker", "Seq2SeqNegator", "ServiceConfig", "create_app"]

from abc import ABC, abstractmethod
from typing import Any, Dict, Generic, TypeVar
import logging
import os

logger = logging.getLogger(__name__)

T = TypeVar('T')


class BaseRepository(ABC, Generic[T]):
    """Base class for reading and writing run artifacts on disk"""

    def __init__(self, data_dir: str = "."):
        self.data_dir = data_dir

    @abstractmethod
    def get_collection_name(self) -> str:
        """Return a short label for the artifacts this repository handles"""
        pass

    @abstractmethod
    def from_dict(self, data: Dict[str, Any]) -> T:
        """Convert a parsed document to a model instance"""
        pass

    def resolve(self, path: str) -> str:
        if os.path.isabs(path):
            return path
        return os.path.join(self.data_dir, path)

    def _load_data(self, path: str) -> str:
        """Read a UTF-8 text artifact"""
        logger.debug("Loading %s artifact from %s", self.get_collection_name(), path)
        with open(self.resolve(path), 'r', encoding='utf-8') as f:
            return f.read()

    def _save_data(self, path: str, text: str) -> str:
        """Write a UTF-8 text artifact with LF line endings, creating parent dirs"""
        full_path = self.resolve(path)
        parent = os.path.dirname(full_path)
        if parent:
            os.makedirs(parent, exist_ok=True)
        with open(full_path, 'w', encoding='utf-8', newline='\n') as f:
            f.write(text)
        logger.debug("Saved %s artifact to %s", self.get_collection_name(), full_path)
        return full_path

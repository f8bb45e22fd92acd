from abc import ABC, abstractmethod
from typing import Any, Callable, List, Optional, Tuple


class Semigroup(ABC):
    @abstractmethod
    def multiply(self, a, b):
        pass

    @property
    def identity(self) -> Optional[Any]:
        return None

    @property
    def zero(self) -> Optional[Any]:
        return None

    def contains(self, x) -> bool:
        return True


class FiniteCarrier(Semigroup):
    @abstractmethod
    def elements(self) -> List:
        pass

    def __len__(self) -> int:
        return len(self.elements())

    def as_table(self) -> Optional[Tuple[Any, Callable]]:
        """
        Returns a (FiniteSemigroup, index_of) pair when the carrier is backed by
        a Cayley table, so brute-force checks can run on the table instead of
        calling multiply() pair by pair. Carriers without a table return None.
        """
        return None

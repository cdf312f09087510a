"""Permutations of {1, ..., m} with the bookkeeping the alternating sums need."""

from __future__ import annotations

from typing import Sequence, Tuple


class Permutation:
    """A permutation w stored by its images (w(1), ..., w(m)), 1-based."""

    __slots__ = ("images", "_inversions", "_descents")

    def __init__(self, images: Sequence[int]):
        images = tuple(images)
        m = len(images)
        if sorted(images) != list(range(1, m + 1)):
            raise ValueError(f"not a permutation of 1..{m}: {images!r}")
        self.images = images
        self._inversions = None
        self._descents = None

    @classmethod
    def identity(cls, m: int) -> "Permutation":
        return cls(range(1, m + 1))

    def __len__(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __eq__(self, other) -> bool:
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self) -> int:
        return hash(self.images)

    def __repr__(self) -> str:
        return f"Permutation({self.images!r})"

    @property
    def inversions(self) -> int:
        """Number of pairs i < j with w(i) > w(j)."""
        if self._inversions is None:
            imgs = self.images
            self._inversions = sum(
                1
                for i in range(len(imgs))
                for j in range(i + 1, len(imgs))
                if imgs[i] > imgs[j]
            )
        return self._inversions

    @property
    def descents(self) -> int:
        """Number of positions i with w(i) > w(i+1)."""
        if self._descents is None:
            imgs = self.images
            self._descents = sum(1 for i in range(len(imgs) - 1) if imgs[i] > imgs[i + 1])
        return self._descents

    @property
    def signature(self) -> int:
        return -1 if self.inversions % 2 else 1

    def inverse(self) -> "Permutation":
        inv = [0] * len(self.images)
        for i, img in enumerate(self.images, start=1):
            inv[img - 1] = i
        return Permutation(inv)

    def apply(self, seq: Sequence) -> Tuple:
        """Rearrangement (seq_{w(1)}, ..., seq_{w(m)}) of a length-m sequence."""
        if len(seq) != len(self.images):
            raise ValueError("sequence length does not match permutation size")
        return tuple(seq[i - 1] for i in self.images)

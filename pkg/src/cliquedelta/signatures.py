"""Clique signatures and the persistent registry of current maximal cliques.

A clique is serialized canonically (ascending decimal ids joined by commas)
and hashed with 64-bit MurmurHash2 under a pinned seed, so signatures are
stable across runs and platforms.
"""

from __future__ import annotations

import struct
from typing import Iterable, Iterator

from .enumeration import Clique

#: Pinned seed; changing it invalidates every snapshot ever written.
MURMUR_SEED = 0x9747B28C

_MASK = (1 << 64) - 1
_M = 0xC6A4A7935BD1E995
_R = 47

SNAPSHOT_MAGIC = b"CLQSIG01"


class SignatureError(Exception):
    pass


class SignatureCollisionError(SignatureError):
    pass


class RegistryError(SignatureError):
    pass


class SnapshotError(SignatureError):
    pass


class SnapshotTruncatedError(SnapshotError):
    pass


def murmur64(data: bytes, seed: int = MURMUR_SEED) -> int:
    """MurmurHash64A of data."""
    h = (seed ^ (len(data) * _M)) & _MASK
    n8 = len(data) - (len(data) % 8)
    for (k,) in struct.iter_unpack("<Q", data[:n8]):
        k = (k * _M) & _MASK
        k ^= k >> _R
        k = (k * _M) & _MASK
        h = ((h ^ k) * _M) & _MASK
    tail = data[n8:]
    if tail:
        h ^= int.from_bytes(tail, "little")
        h = (h * _M) & _MASK
    h ^= h >> _R
    h = (h * _M) & _MASK
    h ^= h >> _R
    return h


def canonical_string(c: Clique) -> bytes:
    """Byte encoding of a canonical (strictly ascending) clique."""
    if not c:
        raise SignatureError("empty clique")
    if any(a >= b for a, b in zip(c, c[1:])):
        raise SignatureError(f"clique not in canonical order: {c}")
    return ",".join(map(str, c)).encode("ascii")


def signature(c: Clique) -> int:
    return murmur64(canonical_string(c))


class CliqueRegistry:
    """Signature set representing the maximal cliques of the current graph.

    In verify mode the canonical strings are retained alongside the hashes,
    turning any hash collision into a hard SignatureCollisionError instead
    of a silent false membership.
    """

    def __init__(self, verify: bool = False) -> None:
        self._sigs: set[int] = set()
        self._strings: dict[int, bytes] | None = {} if verify else None

    @classmethod
    def from_cliques(cls, cliques: Iterable[Clique],
                     verify: bool = False) -> "CliqueRegistry":
        r = cls(verify=verify)
        for c in cliques:
            r.add(c)
        return r

    @property
    def verify_mode(self) -> bool:
        return self._strings is not None

    def __len__(self) -> int:
        return len(self._sigs)

    def __contains__(self, c: Clique) -> bool:
        return self.contains_signature(signature(c), canonical_string(c))

    def contains_signature(self, sig: int, canon: bytes | None = None) -> bool:
        if sig not in self._sigs:
            return False
        if self._strings is not None and canon is not None:
            stored = self._strings[sig]
            if stored != canon:
                raise SignatureCollisionError(
                    f"signature {sig:#x} maps to both {stored!r} and {canon!r}")
        return True

    def signatures(self) -> Iterator[int]:
        return iter(self._sigs)

    def add(self, c: Clique) -> None:
        canon = canonical_string(c)
        sig = murmur64(canon)
        if self._strings is not None:
            stored = self._strings.get(sig)
            if stored is not None and stored != canon:
                raise SignatureCollisionError(
                    f"signature {sig:#x} maps to both {stored!r} and {canon!r}")
            self._strings[sig] = canon
        self._sigs.add(sig)

    def update(self, new_cliques: Iterable[Clique],
               del_cliques: Iterable[Clique]) -> None:
        """Commit one change: drop del signatures, add new ones.

        Precondition violations signal an upstream algorithm bug and leave
        the registry untouched.
        """
        del_sigs = [signature(c) for c in del_cliques]
        new_list = list(new_cliques)
        new_sigs = [signature(c) for c in new_list]
        for s in del_sigs:
            if s not in self._sigs:
                raise RegistryError(f"deleted clique signature {s:#x} not registered")
        for s in new_sigs:
            if s in self._sigs:
                raise RegistryError(f"new clique signature {s:#x} already registered")
        self._sigs.difference_update(del_sigs)
        if self._strings is not None:
            for s in del_sigs:
                self._strings.pop(s, None)
        for c in new_list:
            self.add(c)

    # -- persistence ---------------------------------------------------

    def snapshot(self) -> bytes:
        """Serialize as magic, count, then sorted little-endian u64 hashes.

        Verify-mode canonical strings are not persisted; a restored
        registry starts in default mode.
        """
        parts = [SNAPSHOT_MAGIC, struct.pack("<Q", len(self._sigs))]
        parts.extend(struct.pack("<Q", s) for s in sorted(self._sigs))
        return b"".join(parts)

    @classmethod
    def restore(cls, data: bytes) -> "CliqueRegistry":
        if len(data) < len(SNAPSHOT_MAGIC) + 8:
            raise SnapshotTruncatedError("snapshot shorter than header")
        if data[:len(SNAPSHOT_MAGIC)] != SNAPSHOT_MAGIC:
            raise SnapshotError("bad snapshot magic")
        (count,) = struct.unpack_from("<Q", data, len(SNAPSHOT_MAGIC))
        body = data[len(SNAPSHOT_MAGIC) + 8:]
        if len(body) != 8 * count:
            raise SnapshotTruncatedError(
                f"expected {8 * count} hash bytes, found {len(body)}")
        r = cls()
        r._sigs = {s for (s,) in struct.iter_unpack("<Q", body)}
        if len(r._sigs) != count:
            raise SnapshotError("duplicate hashes in snapshot")
        return r

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CliqueRegistry):
            return NotImplemented
        return self._sigs == other._sigs

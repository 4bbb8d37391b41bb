"""Strong orthogonal rank: exact search, closed formula, and certificates.

The search reduces to a maximum clique problem on the graph whose vertices
are antipodal pairs of roots (a strongly orthogonal set never contains both
a root and its negative) and whose edges join strongly orthogonal pairs.
A branch-and-bound solver with a greedy coloring bound finds the clique
number, then the lexicographically least maximum clique is extracted
greedily, so the reported certificate is canonical.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .errors import InvalidType
from .roots import (
    Root,
    RootSystem,
    RootSystemType,
    build_root_system,
    inner_product,
    is_strongly_orthogonal,
)


@dataclass(frozen=True)
class OrthCertificate:
    """An explicit pairwise strongly orthogonal set, sorted lexicographically
    on doubled coordinates."""

    system_type: RootSystemType
    roots: tuple[Root, ...]

    def to_json_dict(self) -> dict:
        return {
            "system_type": str(self.system_type),
            "n": len(self.roots),
            "roots": [list(r.coords) for r in self.roots],
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "OrthCertificate":
        t = RootSystemType.parse(data["system_type"])
        roots = tuple(Root(tuple(int(c) for c in row)) for row in data["roots"])
        return cls(t, roots)


@dataclass(frozen=True)
class CertCheck:
    """Verification outcome; ``reason`` is one of NotARoot,
    NotStronglyOrthogonal, NotCanonical when ``ok`` is false."""

    ok: bool
    reason: str | None = None

    def __bool__(self) -> bool:
        return self.ok


def sork_formula(t: RootSystemType) -> int:
    """Closed-form strong orthogonal rank of an irreducible type.

    D2 (= A1 x A1) and D3 (= A3) are accepted and follow the D-family
    formula, which agrees with their decompositions.
    """
    fam, r = t.family, t.rank
    if fam == "A":
        return (r + 1) // 2
    if fam in ("B", "C"):
        return r
    if fam == "D":
        return r if r % 2 == 0 else r - 1
    if fam == "E":
        return {6: 4, 7: 7, 8: 8}[r]
    if fam == "F":
        return 4
    if fam == "G":
        return 2
    raise InvalidType(f"unknown family {fam!r}")  # pragma: no cover


def _greedy_color_order(neigh: Sequence[int], cand: int) -> list[tuple[int, int]]:
    """Greedy coloring of the candidate set; returns (vertex, color) with
    colors nondecreasing.  The color of v bounds the largest clique in cand
    containing v and vertices placed earlier."""
    order: list[tuple[int, int]] = []
    uncolored = cand
    color = 0
    while uncolored:
        color += 1
        q = uncolored
        while q:
            b = q & -q
            v = b.bit_length() - 1
            order.append((v, color))
            uncolored ^= b
            q &= ~neigh[v]
            q ^= b
            q &= uncolored
    return order


def max_clique_size(neigh: Sequence[int], cand: int | None = None,
                    stop_at: int | None = None) -> int:
    """Clique number of the graph given by bitmask adjacency ``neigh``,
    restricted to the vertex set ``cand`` (all vertices if None).

    If ``stop_at`` is given, the search returns early once a clique of that
    size is found (the result is then min(clique number, stop_at) or more
    precisely: >= stop_at iff a clique of size stop_at exists).
    """
    n = len(neigh)
    if cand is None:
        cand = (1 << n) - 1
    best = 0

    def expand(size: int, cand: int) -> None:
        nonlocal best
        if not cand:
            if size > best:
                best = size
            return
        order = _greedy_color_order(neigh, cand)
        local = cand
        for v, color in reversed(order):
            if stop_at is not None and best >= stop_at:
                return
            if size + color <= best:
                return
            expand(size + 1, local & neigh[v])
            local &= ~(1 << v)

    expand(0, cand)
    return best


def lex_min_max_clique(neigh: Sequence[int]) -> tuple[int, tuple[int, ...]]:
    """Clique number plus the lexicographically least maximum clique
    (as an increasing tuple of vertex indices)."""
    n = len(neigh)
    full = (1 << n) - 1
    size = max_clique_size(neigh, full)
    chosen: list[int] = []
    cand = full
    for v in range(n):
        if len(chosen) == size:
            break
        if not (cand >> v) & 1:
            continue
        need = size - len(chosen) - 1
        rest = cand & neigh[v]
        if max_clique_size(neigh, rest, stop_at=need) >= need:
            chosen.append(v)
            cand = rest
    assert len(chosen) == size
    return size, tuple(chosen)


def strong_orthogonality_graph(phi: RootSystem) -> tuple[tuple[Root, ...], list[int]]:
    """Vertices (antipodal representatives in lexicographic order) and
    bitmask adjacency of the strong orthogonality relation."""
    reps = phi.positive_representatives()
    n = len(reps)
    neigh = [0] * n
    for i in range(n):
        for j in range(i + 1, n):
            if is_strongly_orthogonal(reps[i], reps[j], phi):
                neigh[i] |= 1 << j
                neigh[j] |= 1 << i
    return reps, neigh


def sork_exact(phi: RootSystem) -> tuple[int, OrthCertificate]:
    """Exact strong orthogonal rank with a canonical witnessing certificate."""
    return _sork_exact_cached(phi.type)


@lru_cache(maxsize=None)
def _sork_exact_cached(t: RootSystemType) -> tuple[int, OrthCertificate]:
    phi = build_root_system(t)
    reps, neigh = strong_orthogonality_graph(phi)
    size, clique = lex_min_max_clique(neigh)
    cert = OrthCertificate(t, tuple(reps[v] for v in clique))
    return size, cert


def verify_certificate(cert: OrthCertificate, phi: RootSystem | None = None) -> CertCheck:
    """Re-check a certificate from scratch: membership, pairwise strong
    orthogonality, and canonical (ascending lexicographic) ordering."""
    if phi is None:
        phi = build_root_system(cert.system_type)
    for r in cert.roots:
        if r not in phi:
            return CertCheck(False, "NotARoot")
    k = len(cert.roots)
    for i in range(k):
        for j in range(i + 1, k):
            a, b = cert.roots[i], cert.roots[j]
            if a == b or inner_product(a, b) != 0:
                return CertCheck(False, "NotStronglyOrthogonal")
            if not is_strongly_orthogonal(a, b, phi):
                return CertCheck(False, "NotStronglyOrthogonal")
    coords = [r.coords for r in cert.roots]
    if coords != sorted(coords):
        return CertCheck(False, "NotCanonical")
    return CertCheck(True)

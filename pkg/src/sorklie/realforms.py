"""Real simple Lie algebras and the three-case free subgroup rank computation.

Descriptors are normalized at construction so every algebra has one canonical
form: split and compact classical series fold into split(T)/compact(T), the
exceptional split/compact signatures do the same, and so(3,1) becomes the
complex algebra sl2(C) (the one accidental isomorphism the computation needs).
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterator

from .errors import InvalidRealForm, InvalidType
from .roots import RootSystemType, build_root_system
from .sork import OrthCertificate, sork_exact, sork_formula

# Known exceptional real forms by (family+rank, signature), excluding the
# split and compact signatures which normalize to split()/compact().
_EXC_OTHER = {
    ("E6", 2), ("E6", -14), ("E6", -26),
    ("E7", -5), ("E7", -25),
    ("E8", -24),
    ("F4", -20),
}
_EXC_SPLIT = {("E6", 6), ("E7", 7), ("E8", 8), ("F4", 4), ("G2", 2)}
_EXC_COMPACT = {("E6", -78), ("E7", -133), ("E8", -248), ("F4", -52), ("G2", -14)}


class NuCase(Enum):
    COMPLEX_STRUCTURE = "ComplexStructure"
    REAL_FORM = "RealForm"
    SOPQ_EXCEPTION = "SopqException"


@dataclass(frozen=True, order=True)
class RealFormDescriptor:
    """A named real simple Lie algebra.

    kind is one of: complex, split, compact (carrying ``base``), or a
    parameterized family: su (p,q), sl_H (n), so (p,q), so_star (n, meaning
    so*(2n)), sp (p,q), exc (rank, signature with ``base``).
    """

    kind: str
    params: tuple[int, ...] = ()
    base: RootSystemType | None = None

    def __str__(self) -> str:
        k = self.kind
        if k == "complex":
            return f"complex({self.base})"
        if k == "split":
            fam, r = self.base.family, self.base.rank
            if fam == "A":
                return f"sl({r + 1},R)"
            if fam == "C":
                return f"sp({r},R)"
            return f"split({self.base})"
        if k == "compact":
            fam, r = self.base.family, self.base.rank
            if fam == "A":
                return f"su({r + 1})"
            if fam == "B":
                return f"so({2 * r + 1})"
            if fam == "C":
                return f"sp({r})"
            if fam == "D":
                return f"so({2 * r})"
            return f"compact({self.base})"
        if k == "su":
            return f"su({self.params[0]},{self.params[1]})"
        if k == "sl_H":
            return f"sl({self.params[0]},H)"
        if k == "so":
            return f"so({self.params[0]},{self.params[1]})"
        if k == "so_star":
            return f"so*({2 * self.params[0]})"
        if k == "sp":
            return f"sp({self.params[0]},{self.params[1]})"
        if k == "exc":
            return f"{self.base.family}{self.base.rank}({self.params[1]})"
        return f"<{k}>"  # pragma: no cover


@dataclass(frozen=True)
class NuResult:
    nu: int
    case: NuCase
    sork_of_complexification: int
    certificate: OrthCertificate | None = None


def complex_simple(t: RootSystemType) -> RealFormDescriptor:
    _require_simple_type(t)
    return RealFormDescriptor("complex", base=t)


def split_form(t: RootSystemType) -> RealFormDescriptor:
    _require_simple_type(t)
    return RealFormDescriptor("split", base=t)


def compact_form(t: RootSystemType) -> RealFormDescriptor:
    _require_simple_type(t)
    return RealFormDescriptor("compact", base=t)


def _require_simple_type(t: RootSystemType) -> None:
    if t.family == "D" and t.rank == 2:
        raise InvalidRealForm("D2 is not simple (it is A1 x A1)")


def su(p: int, q: int) -> RealFormDescriptor:
    p, q = max(p, q), min(p, q)
    if q == 0:
        return compact_form(RootSystemType("A", p - 1)) if p >= 2 else _fail("su", p, q)
    if p < 1 or q < 1:
        _fail("su", p, q)
    return RealFormDescriptor("su", (p, q))


def sl_R(n: int) -> RealFormDescriptor:
    if n < 2:
        _fail("sl(n,R)", n)
    return split_form(RootSystemType("A", n - 1))


def sl_H(n: int) -> RealFormDescriptor:
    if n < 1:
        _fail("sl(n,H)", n)
    if n == 1:
        # sl(1,H) = su(2)
        return compact_form(RootSystemType("A", 1))
    return RealFormDescriptor("sl_H", (n,))


def so(p: int, q: int) -> RealFormDescriptor:
    p, q = max(p, q), min(p, q)
    n = p + q
    if n < 3 or q < 0:
        _fail("so", p, q)
    if q == 0:
        if n == 4:
            raise InvalidRealForm("so(4) is not simple")
        if n % 2 == 1:
            return compact_form(RootSystemType("B", (n - 1) // 2))
        return compact_form(RootSystemType("D", n // 2))
    if n == 4:
        if (p, q) == (3, 1):
            # accidental isomorphism so(3,1) = sl2(C)
            return complex_simple(RootSystemType("A", 1))
        raise InvalidRealForm(f"so({p},{q}) is not simple")
    return RealFormDescriptor("so", (p, q))


def so_star(two_n: int) -> RealFormDescriptor:
    if two_n % 2 or two_n < 6:
        _fail("so*", two_n)
    return RealFormDescriptor("so_star", (two_n // 2,))


def sp_R(n: int) -> RealFormDescriptor:
    if n < 1:
        _fail("sp(n,R)", n)
    return split_form(RootSystemType("C", n))


def sp(p: int, q: int) -> RealFormDescriptor:
    p, q = max(p, q), min(p, q)
    if q == 0:
        if p < 1:
            _fail("sp", p, q)
        return compact_form(RootSystemType("C", p))
    return RealFormDescriptor("sp", (p, q))


def exceptional_form(family: str, rank: int, signature: int) -> RealFormDescriptor:
    t = RootSystemType(family, rank)
    key = (f"{family}{rank}", signature)
    if key in _EXC_SPLIT:
        return split_form(t)
    if key in _EXC_COMPACT:
        return compact_form(t)
    if key in _EXC_OTHER:
        return RealFormDescriptor("exc", (rank, signature), base=t)
    raise InvalidRealForm(f"unknown exceptional real form {family}{rank}({signature})")


def _fail(name: str, *params: int) -> None:
    raise InvalidRealForm(f"{name}{params} does not describe a simple Lie algebra")


def complexification_type(d: RealFormDescriptor) -> RootSystemType:
    """Root system type of the complexified algebra (for a complex algebra,
    the underlying complex type, which is what the rank-one case uses)."""
    k = d.kind
    if k in ("complex", "split", "compact", "exc"):
        return d.base
    if k == "su":
        return RootSystemType("A", d.params[0] + d.params[1] - 1)
    if k == "sl_H":
        return RootSystemType("A", 2 * d.params[0] - 1)
    if k == "so":
        n = d.params[0] + d.params[1]
        if n % 2 == 1:
            return RootSystemType("B", (n - 1) // 2)
        return RootSystemType("D", n // 2)
    if k == "so_star":
        return RootSystemType("D", d.params[0])
    if k == "sp":
        return RootSystemType("C", d.params[0] + d.params[1])
    raise InvalidRealForm(f"unknown descriptor kind {k!r}")  # pragma: no cover


def is_sopq_exception(d: RealFormDescriptor) -> bool:
    """True iff d is so(p,q) with p, q odd and p+q divisible by four.

    so(3,1) never reaches here: it is normalized to the complex algebra
    sl2(C) at construction, so the complex-structure case handles it.
    """
    if d.kind != "so":
        return False
    p, q = d.params
    return p % 2 == 1 and q % 2 == 1 and (p + q) % 4 == 0


def nu_simple(d: RealFormDescriptor) -> NuResult:
    """Free subgroup rank of the connected simple Lie group with algebra d."""
    t = complexification_type(d)
    s = sork_formula(t)
    n_exact, cert = sork_exact(build_root_system(t))
    assert n_exact == s
    if d.kind == "complex":
        return NuResult(s, NuCase.COMPLEX_STRUCTURE, s, cert)
    if is_sopq_exception(d):
        reduced = OrthCertificate(cert.system_type, cert.roots[: s - 1])
        return NuResult(s - 1, NuCase.SOPQ_EXCEPTION, s, reduced)
    return NuResult(s, NuCase.REAL_FORM, s, cert)


def catalog(max_pq: int = 8, max_n: int = 8) -> Iterator[RealFormDescriptor]:
    """Canonical descriptors with bounded parameters, each algebra once.

    su(1,1) is omitted (it is sl(2,R), already present as the split A1),
    as are the flagged D2/D3 labels for the complex/split/compact series.
    """
    types: list[RootSystemType] = []
    for r in range(1, max_n + 1):
        types.append(RootSystemType("A", r))
    for fam, lo in (("B", 2), ("C", 2), ("D", 4)):
        for r in range(lo, max_n + 1):
            types.append(RootSystemType(fam, r))
    for r in (6, 7, 8):
        if r <= max_n:
            types.append(RootSystemType("E", r))
    if max_n >= 4:
        types.append(RootSystemType("F", 4))
    if max_n >= 2:
        types.append(RootSystemType("G", 2))

    for t in types:
        yield complex_simple(t)
    for t in types:
        yield compact_form(t)
    for t in types:
        yield split_form(t)
    for total in range(3, max_pq + 1):
        for q in range(1, total // 2 + 1):
            yield su(total - q, q)
    for n in range(2, max_n // 2 + 1):
        yield sl_H(n)
    for total in range(5, max_pq + 1):
        for q in range(1, total // 2 + 1):
            yield so(total - q, q)
    for n in range(3, max_n + 1):
        if 2 * n <= 2 * max_n:
            yield so_star(2 * n)
    for total in range(2, max_pq + 1):
        for q in range(1, total // 2 + 1):
            yield sp(total - q, q)
    for (label, sig) in sorted(_EXC_OTHER):
        t = RootSystemType.parse(label)
        if t.rank <= max_n:
            yield exceptional_form(t.family, t.rank, sig)


def nu_one_catalog(max_pq: int = 8, max_n: int = 8) -> list[RealFormDescriptor]:
    """All bounded-parameter catalog algebras with free subgroup rank one."""
    out = []
    for d in catalog(max_pq, max_n):
        if nu_simple(d).nu == 1:
            out.append(d)
    return sorted(set(out))

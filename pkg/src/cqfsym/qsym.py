"""Homogeneous quasisymmetric functions with coefficients in Z[q].

Elements are stored in the monomial basis ``M_alpha`` indexed by
compositions of a fixed degree ``n``.  A composition of ``n`` has at most
``n`` parts, so this representation is exact in infinitely many
variables; no truncation to finitely many ``x_i`` ever happens.
"""

from __future__ import annotations

import math
from collections import defaultdict
from functools import lru_cache
from itertools import permutations
from typing import Dict, Iterable, Mapping, Optional, Tuple, Union

from .errors import InconsistentExpansion, NonIntegralDivision, NotSymmetric
from .poly import ONE, ZERO, QPoly

Composition = Tuple[int, ...]
Partition = Tuple[int, ...]


# -- compositions and partitions ------------------------------------------------


def is_composition(parts) -> bool:
    return all(isinstance(p, int) and p >= 1 for p in parts)


def is_partition(parts) -> bool:
    return is_composition(parts) and all(
        parts[i] >= parts[i + 1] for i in range(len(parts) - 1)
    )


def sort_partition(alpha: Iterable[int]) -> Partition:
    """Underlying partition of a composition."""
    return tuple(sorted(alpha, reverse=True))


@lru_cache(maxsize=None)
def compositions(n: int) -> Tuple[Composition, ...]:
    """All compositions of ``n`` in lexicographic order."""
    if n == 0:
        return ((),)
    out = []
    for first in range(1, n + 1):
        for rest in compositions(n - first):
            out.append((first,) + rest)
    return tuple(out)


@lru_cache(maxsize=None)
def partitions(n: int, largest: Optional[int] = None) -> Tuple[Partition, ...]:
    """All partitions of ``n`` in reverse lexicographic order (largest first)."""
    if largest is None:
        largest = n
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, largest), 0, -1):
        for rest in partitions(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def conjugate(lam: Partition) -> Partition:
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p > i) for i in range(lam[0]))


def dominates(lam: Partition, mu: Partition) -> bool:
    """``lam >= mu`` in dominance order (same size assumed)."""
    a = b = 0
    for i in range(max(len(lam), len(mu))):
        a += lam[i] if i < len(lam) else 0
        b += mu[i] if i < len(mu) else 0
        if a < b:
            return False
    return True


@lru_cache(maxsize=None)
def rearrangements(lam: Partition) -> Tuple[Composition, ...]:
    """Distinct compositions with underlying partition ``lam``, lex sorted."""
    return tuple(sorted(set(permutations(lam))))


# -- the quasi-shuffle product on compositions ----------------------------------


@lru_cache(maxsize=None)
def _shuffle(a: Composition, b: Composition) -> Tuple[Tuple[Composition, int], ...]:
    if not a:
        return ((b, 1),)
    if not b:
        return ((a, 1),)
    out: Dict[Composition, int] = defaultdict(int)
    for comp, c in _shuffle(a[1:], b):
        out[(a[0],) + comp] += c
    for comp, c in _shuffle(a, b[1:]):
        out[(b[0],) + comp] += c
    for comp, c in _shuffle(a[1:], b[1:]):
        out[(a[0] + b[0],) + comp] += c
    return tuple(sorted(out.items()))


def quasi_shuffle_compositions(a: Composition, b: Composition) -> Dict[Composition, int]:
    """``M_a * M_b`` as a map from composition to integer multiplicity."""
    return dict(_shuffle(tuple(a), tuple(b)))


# -- elements ---------------------------------------------------------------------


Coeff = Union[QPoly, int]


class QSymElement:
    """A homogeneous element of ``QSym`` over ``Z[q]`` in the ``M`` basis.

    ``terms`` maps compositions of ``degree`` to nonzero :class:`QPoly`.
    Absent keys are zero.  Degree 0 is allowed and holds multiples of the
    unit ``M_()``.
    """

    __slots__ = ("degree", "_terms")

    def __init__(self, degree: int, terms: Mapping[Composition, Coeff] = ()):
        if degree < 0:
            raise ValueError("degree must be nonnegative")
        clean = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for alpha, p in items:
            alpha = tuple(alpha)
            if not is_composition(alpha) or sum(alpha) != degree:
                raise ValueError(f"{alpha} is not a composition of {degree}")
            p = p if isinstance(p, QPoly) else QPoly.constant(p)
            if p:
                clean[alpha] = clean.get(alpha, ZERO) + p
        self.degree = degree
        self._terms = {a: p for a, p in sorted(clean.items()) if p}

    @classmethod
    def monomial(cls, alpha: Iterable[int], coeff: Coeff = 1) -> QSymElement:
        alpha = tuple(alpha)
        return cls(sum(alpha), {alpha: coeff})

    @classmethod
    def zero(cls, degree: int) -> QSymElement:
        return cls(degree)

    @classmethod
    def one(cls) -> QSymElement:
        return cls(0, {(): ONE})

    @property
    def terms(self) -> Dict[Composition, QPoly]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def __getitem__(self, alpha) -> QPoly:
        return self._terms.get(tuple(alpha), ZERO)

    def __contains__(self, alpha) -> bool:
        return tuple(alpha) in self._terms

    def __len__(self) -> int:
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __eq__(self, other) -> bool:
        if not isinstance(other, QSymElement):
            return NotImplemented
        if self.is_zero() and other.is_zero():
            return True
        return self.degree == other.degree and self._terms == other._terms

    def __hash__(self) -> int:
        if not self._terms:
            return hash(("QSymElement", 0))
        return hash((self.degree, tuple(self._terms.items())))

    def __repr__(self) -> str:
        body = ", ".join(f"{a}: {p}" for a, p in self._terms.items())
        return f"QSymElement(degree={self.degree}, {{{body}}})"

    def _check_degree(self, other: QSymElement) -> None:
        if self.degree != other.degree and not (self.is_zero() or other.is_zero()):
            raise ValueError("cannot add elements of different degree")

    def __add__(self, other: QSymElement) -> QSymElement:
        self._check_degree(other)
        out = dict(self._terms)
        for a, p in other.items():
            out[a] = out.get(a, ZERO) + p
        degree = self.degree if not self.is_zero() else other.degree
        return QSymElement(degree, out)

    def __neg__(self) -> QSymElement:
        return QSymElement(self.degree, {a: -p for a, p in self._terms.items()})

    def __sub__(self, other: QSymElement) -> QSymElement:
        return self + (-other)

    def scale(self, c: Coeff) -> QSymElement:
        return QSymElement(self.degree, {a: p * c for a, p in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, QSymElement):
            return quasi_shuffle(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def map_coefficients(self, fn) -> QSymElement:
        return QSymElement(self.degree, {a: fn(p) for a, p in self._terms.items()})

    def at_q(self, q: int) -> Dict[Composition, int]:
        """Specialize every coefficient at an integer ``q``."""
        return {a: p(q) for a, p in self._terms.items() if p(q)}

    def to_json(self) -> dict:
        return {
            "degree": self.degree,
            "terms": [
                {"index": list(a), "poly": list(p.coeffs)} for a, p in self._terms.items()
            ],
        }

    @classmethod
    def from_json(cls, data: dict) -> QSymElement:
        return cls(
            int(data["degree"]),
            {tuple(t["index"]): QPoly(t["poly"]) for t in data["terms"]},
        )


class SymExpansion:
    """Coefficients of a symmetric function in a partition-indexed basis.

    Used for both the ``m`` and the ``e`` bases; which one is a matter of
    context (the ``basis`` tag is informational).
    """

    __slots__ = ("degree", "basis", "_terms")

    def __init__(self, degree: int, terms: Mapping[Partition, Coeff] = (), basis: str = "m"):
        clean = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for lam, p in items:
            lam = tuple(lam)
            if not is_partition(lam) or sum(lam) != degree:
                raise ValueError(f"{lam} is not a partition of {degree}")
            p = p if isinstance(p, QPoly) else QPoly.constant(p)
            if p:
                clean[lam] = clean.get(lam, ZERO) + p
        self.degree = degree
        self.basis = basis
        self._terms = {lam: p for lam, p in sorted(clean.items()) if p}

    @property
    def terms(self) -> Dict[Partition, QPoly]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def __getitem__(self, lam) -> QPoly:
        return self._terms.get(tuple(lam), ZERO)

    def __len__(self) -> int:
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __eq__(self, other) -> bool:
        if not isinstance(other, SymExpansion):
            return NotImplemented
        return self.degree == other.degree and self.basis == other.basis and self._terms == other._terms

    def __repr__(self) -> str:
        body = ", ".join(f"{lam}: {p}" for lam, p in self._terms.items())
        return f"SymExpansion({self.basis}, degree={self.degree}, {{{body}}})"

    def to_json(self) -> dict:
        return {
            "degree": self.degree,
            "terms": [
                {"index": list(lam), "poly": list(p.coeffs)} for lam, p in self._terms.items()
            ],
        }

    @classmethod
    def from_json(cls, data: dict, basis: str = "m") -> SymExpansion:
        return cls(
            int(data["degree"]),
            {tuple(t["index"]): QPoly(t["poly"]) for t in data["terms"]},
            basis=basis,
        )


# -- operations ---------------------------------------------------------------------


def quasi_shuffle(a: QSymElement, b: QSymElement) -> QSymElement:
    """Product of two homogeneous quasisymmetric functions."""
    out: Dict[Composition, QPoly] = {}
    for alpha, p in a.items():
        for beta, r in b.items():
            pr = p * r
            for gamma, mult in _shuffle(alpha, beta):
                out[gamma] = out.get(gamma, ZERO) + pr * mult
    return QSymElement(a.degree + b.degree, out)


def nonsymmetry_witness(f: QSymElement) -> Optional[Tuple[Composition, Composition]]:
    """Two rearrangements of one partition whose coefficients differ.

    Each partition class is compared against the partition itself (its
    weakly decreasing arrangement); classes are scanned in lex order.
    """
    seen = sorted({sort_partition(a) for a in f._terms})
    for lam in seen:
        ref = f[lam]
        for alpha in rearrangements(lam):
            if f[alpha] != ref:
                return (lam, alpha)
    return None


def is_symmetric(f: QSymElement) -> bool:
    return nonsymmetry_witness(f) is None


def collapse_to_monomial_symmetric(f: QSymElement) -> SymExpansion:
    """Rewrite a symmetric ``f`` in the monomial symmetric basis ``m_lambda``."""
    witness = nonsymmetry_witness(f)
    if witness is not None:
        raise NotSymmetric(witness)
    return SymExpansion(
        f.degree, {sort_partition(a): p for a, p in f.items() if a == sort_partition(a)}, basis="m"
    )


def monomial_symmetric(lam: Partition, coeff: Coeff = 1) -> QSymElement:
    """``m_lambda`` expanded in the ``M`` basis."""
    lam = tuple(lam)
    return QSymElement(sum(lam), {alpha: coeff for alpha in rearrangements(lam)})


def expand_to_monomial_quasisymmetric(s: SymExpansion) -> QSymElement:
    """Inverse of :func:`collapse_to_monomial_symmetric` (``m`` basis input)."""
    out: Dict[Composition, QPoly] = {}
    for lam, p in s.items():
        for alpha in rearrangements(lam):
            out[alpha] = p
    return QSymElement(s.degree, out)


@lru_cache(maxsize=None)
def elementary_in_monomial(lam: Partition) -> QSymElement:
    """``e_lambda`` in the ``M`` basis, built as a product of ``M_(1^j)``."""
    lam = tuple(lam)
    acc = QSymElement.one()
    for part in lam:
        acc = quasi_shuffle(acc, QSymElement.monomial((1,) * part))
    return acc


@lru_cache(maxsize=None)
def _e_to_m(n: int) -> Dict[Partition, Dict[Partition, int]]:
    table = {}
    for lam in partitions(n):
        e = elementary_in_monomial(lam)
        table[lam] = {mu: e[mu](1) for mu in partitions(n) if e[mu]}
    return table


def e_expand(f: QSymElement) -> SymExpansion:
    """Coefficients of a symmetric ``f`` in the elementary basis.

    ``e_lambda`` has leading monomial term ``m_{lambda'}`` with coefficient 1
    and only dominance-smaller terms otherwise, so peeling off the
    lex-largest remaining ``m_mu`` with ``e_{mu'}`` is an exact integer
    back-substitution.
    """
    m = collapse_to_monomial_symmetric(f)
    n = f.degree
    if m.is_zero():
        return SymExpansion(n, {}, basis="e")
    residue = dict(m.items())
    table = _e_to_m(n)
    result: Dict[Partition, QPoly] = {}
    for mu in partitions(n):  # reverse lex, a linear extension of dominance
        c = residue.pop(mu, ZERO)
        if not c:
            continue
        lam = conjugate(mu)
        column = table[lam]
        if column.get(mu) != 1:
            raise InconsistentExpansion(f"e_{lam} does not lead with m_{mu}")
        result[lam] = c
        for nu, mult in column.items():
            if nu == mu:
                continue
            if not _lex_less(nu, mu):
                raise InconsistentExpansion(f"e_{lam} has a term m_{nu} above m_{mu}")
            new = residue.get(nu, ZERO) - c * mult
            if new:
                residue[nu] = new
            else:
                residue.pop(nu, None)
    if residue:
        raise InconsistentExpansion(f"nonzero residue after e-solve: {residue}")
    return SymExpansion(n, result, basis="e")


def _lex_less(a: Partition, b: Partition) -> bool:
    return a < b


def e_to_monomial_quasisymmetric(s: SymExpansion) -> QSymElement:
    """Re-expand an ``e``-basis expansion in the ``M`` basis."""
    acc = QSymElement.zero(s.degree)
    for lam, p in s.items():
        acc = acc + elementary_in_monomial(lam).scale(p)
    return acc


def is_e_positive(f: QSymElement) -> bool:
    return all(p.is_nonnegative() for _, p in e_expand(f).items())


def is_palindromic(f: QSymElement, num_edges: int, center: str = "edges") -> bool:
    """Palindromicity of every ``M_alpha`` coefficient.

    ``center="edges"`` checks ``coeff_i == coeff_{num_edges - i}``;
    ``center="support"`` checks each coefficient about its own support.
    """
    if num_edges < 0:
        raise ValueError("num_edges must be nonnegative")
    if center == "edges":
        return all(p.is_palindromic(num_edges) for _, p in f.items())
    if center == "support":
        return all(p.is_palindromic_on_support() for _, p in f.items())
    raise ValueError(f"unknown palindrome center {center!r}")


def is_lyndon(word: Composition) -> bool:
    word = tuple(word)
    return bool(word) and all(word < word[i:] + word[:i] for i in range(1, len(word)))


def lyndon_words(weight: int) -> list:
    if weight < 1:
        raise ValueError("weight must be >= 1")
    return [alpha for alpha in compositions(weight) if is_lyndon(alpha)]


def hazewinkel_lambda(n: int, alpha: Composition) -> QSymElement:
    """``(1/n!) det`` of the lower Hessenberg matrix with ``M_{k alpha}`` entries.

    Row ``i`` holds ``M_{(i-j+1) alpha}`` in column ``j <= i`` and the
    integer ``i`` on the superdiagonal.  The determinant is expanded along
    the Hessenberg recursion, which needs only ring operations.
    """
    alpha = tuple(alpha)
    if n < 1:
        raise ValueError("n must be >= 1")
    if not is_lyndon(alpha):
        raise ValueError(f"{alpha} is not a Lyndon word")

    def entry(k: int) -> QSymElement:
        return QSymElement.monomial(tuple(k * a for a in alpha))

    dets = [QSymElement.one()]
    for i in range(1, n + 1):
        acc = QSymElement.zero(i * sum(alpha))
        for j in range(1, i + 1):
            # cofactor picks a_{i,j} times the superdiagonal run a_{j,j+1} ... a_{i-1,i}
            superdiag = math.prod(range(j, i))
            sign = -1 if (i - j) % 2 else 1
            term = quasi_shuffle(entry(i - j + 1), dets[j - 1]).scale(sign * superdiag)
            acc = acc + term
        dets.append(acc)

    fact = math.factorial(n)
    out = {}
    for comp, p in dets[n].items():
        try:
            out[comp] = p.exact_div(fact)
        except ArithmeticError as exc:
            raise NonIntegralDivision(f"coefficient of M_{comp} not divisible by {n}!") from exc
    return QSymElement(dets[n].degree, out)

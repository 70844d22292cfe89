"""Linguistic term sets, comparative linguistic expressions and T2 HFLTSs."""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from typing import Iterable, Sequence

from .it2 import DEFAULT_N, IT2TrFN, ekm_centroid


class LinguisticError(ValueError):
    pass


class CLEParseError(LinguisticError):
    pass


@dataclass(frozen=True)
class Term:
    label: str
    semantics: IT2TrFN
    long_label: str | None = None

    @property
    def names(self) -> tuple[str, ...]:
        return (self.label,) if not self.long_label else (self.label, self.long_label)


def _norm(text: str) -> str:
    return " ".join(text.lower().split())


@dataclass(frozen=True)
class Calibration:
    """Envelope settings fitted together with a term set."""

    alpha: float | None = None
    fuzziness_mode: str | None = None
    n: int | None = None
    note: str = ""


@dataclass(frozen=True, eq=False)
class LinguisticTermSet:
    """Ordered terms ``s_0 .. s_g`` with IT2 semantics on [0, 1]."""

    terms: tuple[Term, ...]
    calibration: Calibration | None = None

    def __post_init__(self):
        terms = tuple(self.terms)
        object.__setattr__(self, "terms", terms)
        if len(terms) < 2:
            raise LinguisticError("a term set needs at least two terms (g >= 1)")
        seen: dict[str, int] = {}
        for i, term in enumerate(terms):
            for name in term.names:
                key = _norm(name)
                if not key:
                    raise LinguisticError(f"terms[{i}]: empty label")
                if key in seen and seen[key] != i:
                    raise LinguisticError(
                        f"terms[{i}]: label {name!r} duplicates terms[{seen[key]}]"
                    )
                seen[key] = i
            u = term.semantics.umf
            if u.a < 0.0 or u.d > 1.0:
                raise LinguisticError(
                    f"terms[{i}] ({term.label}): umf support [{u.a}, {u.d}] leaves [0, 1]"
                )
        object.__setattr__(self, "_index", seen)

    @property
    def g(self) -> int:
        return len(self.terms) - 1

    def __len__(self) -> int:
        return len(self.terms)

    def __getitem__(self, i: int) -> Term:
        return self.terms[i]

    @property
    def labels(self) -> list[str]:
        return [t.label for t in self.terms]

    def index_of(self, name: str) -> int:
        try:
            return self._index[_norm(name)]
        except KeyError:
            candidates = ", ".join(
                "/".join(t.names) for t in self.terms
            )
            raise CLEParseError(
                f"unknown label {name.strip()!r}; expected one of: {candidates}"
            ) from None

    @cached_property
    def centroids(self) -> tuple[float, ...]:
        return tuple(ekm_centroid(t.semantics)[2] for t in self.terms)

    def check_ordering(self) -> None:
        c = self.centroids
        for i in range(1, len(c)):
            if c[i] < c[i - 1] - 1e-9:
                raise LinguisticError(
                    f"terms[{i}] ({self.terms[i].label}): centroid {c[i]:.4f} is below "
                    f"terms[{i - 1}] ({self.terms[i - 1].label}) centroid {c[i - 1]:.4f}"
                )

    def is_symmetric(self, tol: float = 1e-9) -> bool:
        """True when ``s_i`` is the mirror image of ``s_{g-i}`` about 0.5."""
        for i, term in enumerate(self.terms):
            mirror = self.terms[self.g - i].semantics.mirrored()
            for a, b in ((term.semantics.umf, mirror.umf), (term.semantics.lmf, mirror.lmf)):
                if any(abs(p - q) > tol for p, q in zip(a.knots + (a.h,), b.knots + (b.h,))):
                    return False
        return True

    def term_fuzziness(self, mode: str = "midpoint", n: int = DEFAULT_N) -> tuple[float, ...]:
        cache = self.__dict__.setdefault("_fuzz_cache", {})
        key = (mode, n)
        if key not in cache:
            from .it2 import scalar_fuzziness
            cache[key] = tuple(scalar_fuzziness(t.semantics, mode, n) for t in self.terms)
        return cache[key]


class CLEKind(str, Enum):
    SINGLE = "single"
    LESS_THAN = "less_than"
    MORE_THAN = "more_than"
    BETWEEN = "between"


@dataclass(frozen=True)
class CLE:
    """A parsed comparative linguistic expression over term indices."""

    kind: CLEKind
    i: int
    j: int | None = None

    def __post_init__(self):
        object.__setattr__(self, "kind", CLEKind(self.kind))
        if self.kind is CLEKind.BETWEEN:
            if self.j is None or self.j < self.i:
                raise LinguisticError(f"between needs i <= j, got ({self.i}, {self.j})")
        elif self.j is not None:
            raise LinguisticError(f"{self.kind.value} takes a single index")
        if self.i < 0:
            raise LinguisticError("term index must be nonnegative")

    @classmethod
    def single(cls, i: int) -> "CLE":
        return cls(CLEKind.SINGLE, i)

    @classmethod
    def less_than(cls, i: int) -> "CLE":
        return cls(CLEKind.LESS_THAN, i)

    @classmethod
    def more_than(cls, i: int) -> "CLE":
        return cls(CLEKind.MORE_THAN, i)

    @classmethod
    def between(cls, i: int, j: int) -> "CLE":
        return cls(CLEKind.BETWEEN, i, j)

    @property
    def is_single(self) -> bool:
        return self.kind is CLEKind.SINGLE

    def to_dict(self) -> dict:
        d = {"kind": self.kind.value, "i": self.i}
        if self.j is not None:
            d["j"] = self.j
        return d


_BETWEEN = re.compile(r"^between\s+(.+)$")
_LESS = re.compile(r"^less\s+than\s+(.+)$")
_MORE = re.compile(r"^more\s+than\s+(.+)$")


def parse_cle(text: str, lts: LinguisticTermSet) -> CLE:
    """Parse ``between X and Y`` | ``less than X`` | ``more than X`` | ``X``."""
    phrase = _norm(text)
    if not phrase:
        raise CLEParseError("empty expression")

    if m := _BETWEEN.match(phrase):
        body = m.group(1)
        # Labels may themselves contain "and"; try every split point.
        parts = body.split(" and ")
        if len(parts) < 2:
            raise CLEParseError(f"malformed expression {text!r}: expected 'between X and Y'")
        resolved = None
        errors = []
        for cut in range(1, len(parts)):
            left, right = " and ".join(parts[:cut]), " and ".join(parts[cut:])
            try:
                resolved = (lts.index_of(left), lts.index_of(right), left, right)
                break
            except CLEParseError as exc:
                errors.append(exc)
        if resolved is None:
            raise errors[-1]
        i, j, left, right = resolved
        if i > j:
            raise CLEParseError(
                f"reversed range in {text.strip()!r}: {lts[i].label!r} (s_{i}) comes after "
                f"{lts[j].label!r} (s_{j})"
            )
        return CLE.between(i, j)
    if m := _LESS.match(phrase):
        return CLE.less_than(lts.index_of(m.group(1)))
    if m := _MORE.match(phrase):
        return CLE.more_than(lts.index_of(m.group(1)))
    if phrase.startswith(("between", "less", "more")) and phrase not in lts._index:
        raise CLEParseError(f"malformed expression {text!r}")
    return CLE.single(lts.index_of(phrase))


def render_cle(cle: CLE, lts: LinguisticTermSet, long: bool = False) -> str:
    def name(k: int) -> str:
        t = lts[k]
        return t.long_label if long and t.long_label else t.label

    if cle.kind is CLEKind.SINGLE:
        return name(cle.i)
    if cle.kind is CLEKind.LESS_THAN:
        return f"less than {name(cle.i)}"
    if cle.kind is CLEKind.MORE_THAN:
        return f"more than {name(cle.i)}"
    return f"between {name(cle.i)} and {name(cle.j)}"


@dataclass(frozen=True, eq=False)
class T2HFLTS:
    """Consecutive run of terms of ``lts``; ``indices`` may be empty."""

    lts: LinguisticTermSet
    indices: tuple[int, ...]

    def __post_init__(self):
        idx = tuple(sorted(set(int(k) for k in self.indices)))
        object.__setattr__(self, "indices", idx)
        if idx:
            if idx[0] < 0 or idx[-1] > self.lts.g:
                raise LinguisticError(f"indices {idx} outside [0, {self.lts.g}]")
            if idx[-1] - idx[0] + 1 != len(idx):
                raise LinguisticError(f"indices {idx} are not consecutive")

    @classmethod
    def span(cls, lts: LinguisticTermSet, i: int, j: int) -> "T2HFLTS":
        return cls(lts, tuple(range(i, j + 1)))

    @classmethod
    def empty(cls, lts: LinguisticTermSet) -> "T2HFLTS":
        return cls(lts, ())

    def __len__(self) -> int:
        return len(self.indices)

    def __iter__(self):
        return iter(self.indices)

    def __eq__(self, other):
        if isinstance(other, T2HFLTS):
            return self.lts is other.lts and self.indices == other.indices
        return NotImplemented

    def __hash__(self):
        return hash((id(self.lts), self.indices))

    @property
    def is_empty(self) -> bool:
        return not self.indices

    @property
    def labels(self) -> list[str]:
        return [self.lts[k].label for k in self.indices]

    def __repr__(self) -> str:
        return "{" + ", ".join(self.labels) + "}"


def transform(cle: CLE, lts: LinguisticTermSet) -> T2HFLTS:
    g = lts.g
    top = cle.j if cle.kind is CLEKind.BETWEEN else cle.i
    if top > g:
        raise LinguisticError(f"index {top} outside [0, {g}]")
    if cle.kind is CLEKind.SINGLE:
        return T2HFLTS.span(lts, cle.i, cle.i)
    if cle.kind is CLEKind.LESS_THAN:
        return T2HFLTS.span(lts, 0, cle.i)
    if cle.kind is CLEKind.MORE_THAN:
        return T2HFLTS.span(lts, cle.i, g)
    return T2HFLTS.span(lts, cle.i, cle.j)


def complement(h: T2HFLTS) -> T2HFLTS:
    return T2HFLTS(h.lts, tuple(h.lts.g - k for k in h.indices))


def _indices(h) -> frozenset[int]:
    if isinstance(h, T2HFLTS):
        return frozenset(h.indices)
    return frozenset(h)


def _combine(h1, h2, result: Iterable[int]):
    lts = getattr(h1, "lts", None) or getattr(h2, "lts", None)
    for h in (h1, h2):
        if isinstance(h, T2HFLTS) and h.lts is not lts:
            raise LinguisticError("operands are defined on different term sets")
    idx = sorted(result)
    if lts is not None and (not idx or idx[-1] - idx[0] + 1 == len(idx)):
        return T2HFLTS(lts, tuple(idx))
    return frozenset(idx)


def union(h1, h2):
    """Index-set union; a plain ``frozenset`` when the result has gaps."""
    return _combine(h1, h2, _indices(h1) | _indices(h2))


def intersection(h1, h2):
    return _combine(h1, h2, _indices(h1) & _indices(h2))


def index_set(h) -> frozenset[int]:
    return _indices(h)


def as_t2hflts(lts: LinguisticTermSet, indices: Sequence[int]) -> T2HFLTS:
    return T2HFLTS(lts, tuple(indices))

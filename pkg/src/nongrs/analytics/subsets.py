"""Counting and finding l-subsets of a field subset with a prescribed sum."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb

import numpy as np

from ..code import DEFAULT_MAX_SUBSETS
from ..constructions import EvaluationSet
from ..errors import BudgetExceeded, InexactDivision, ValidationError

# n * (l+1) * q booleans allowed for the reachability table behind witness search
_REACH_LIMIT = 50_000_000

FQ, FQSTAR = "F_q", "F_q^*"


@dataclass(frozen=True)
class SubsetSumCount:
    """N(l, b, S): the number of l-subsets of S summing to b."""

    ell: int
    b: int
    domain: str
    count: int
    method: str

    def to_json(self) -> dict:
        return {"ell": self.ell, "b": self.b, "domain": self.domain,
                "count": str(self.count), "method": self.method}


def _domain_label(S: EvaluationSet) -> str:
    q = S.field.q
    elems = set(S.elements)
    if S.n == q:
        return FQ
    if S.n == q - 1 and 0 not in elems:
        return FQSTAR
    return f"S ({S.n} elements of F_{q})"


def _count_enumerate(S: EvaluationSet, ell: int, b: int, max_subsets: int) -> int:
    n_sub = comb(S.n, ell)
    if n_sub > max_subsets:
        raise BudgetExceeded("max-subsets", n_sub, max_subsets)
    F = S.field
    return sum(1 for sub in combinations(S.elements, ell) if F.total(sub) == b)


def _count_dp(S: EvaluationSet, ell: int) -> np.ndarray:
    """Row ``ell`` of the table dp[s][x] = #{s-subsets with sum x}."""
    F = S.field
    dtype = np.int64 if comb(S.n, ell) < (1 << 62) else object
    dp = np.zeros((ell + 1, F.q), dtype=dtype)
    dp[0, 0] = 1
    everything = np.arange(F.q, dtype=np.int64)
    for i, a in enumerate(S.elements):
        shifted = F.add_v(everything, a)  # x -> x + a is a permutation
        for s in range(min(i + 1, ell), 0, -1):
            row = dp[s].copy()
            row[shifted] += dp[s - 1]
            dp[s] = row
    return dp[ell]


def subset_sum_bruteforce(S: EvaluationSet, ell: int, b: int = 0, method: str = "auto",
                          max_subsets: int = DEFAULT_MAX_SUBSETS) -> SubsetSumCount:
    """Count l-subsets of S summing to b without any closed form.

    ``method="enumerate"`` walks every l-subset (limited by ``max_subsets``);
    ``method="dp"`` runs an exact subset-count recursion over the elements,
    one element at a time.  ``auto`` enumerates when cheap and otherwise
    uses the recursion.
    """
    if not 0 <= ell <= S.n:
        raise ValidationError(f"subset size {ell} outside [0, {S.n}]")
    b = S.field.element(b)
    if method == "auto":
        method = "enumerate" if comb(S.n, ell) <= 20_000 else "dp"
    if method == "enumerate":
        count = _count_enumerate(S, ell, b, max_subsets)
    elif method == "dp":
        count = int(_count_dp(S, ell)[b])
    else:
        raise ValidationError(f"unknown counting method {method!r}")
    return SubsetSumCount(ell, b, _domain_label(S), count, method)


def is_power_of(q: int, p: int) -> bool:
    if p < 2 or q < p:
        return False
    while q % p == 0:
        q //= p
    return q == 1


def _exact(num: int, den: int, what: str) -> int:
    qt, rem = divmod(num, den)
    if rem:
        raise InexactDivision(f"{what}: {num} is not divisible by {den}")
    return qt


def subset_sum_closed(q: int, p: int, ell: int, domain: str) -> SubsetSumCount:
    """N(l, 0, F_q^*) or N(l, 0, F_q) from the closed-form count."""
    if not is_power_of(q, p):
        raise ValidationError(f"{q} is not a power of {p}")
    if domain in (FQSTAR, "fqstar"):
        if not 0 <= ell <= q - 1:
            raise ValidationError(f"subset size {ell} outside [0, {q - 1}]")
        t = ell // p
        num = comb(q - 1, ell) + (-1) ** (ell + t) * (q - 1) * comb(q // p - 1, t)
        label = FQSTAR
    elif domain in (FQ, "fq"):
        if not 0 <= ell <= q:
            raise ValidationError(f"subset size {ell} outside [0, {q}]")
        num = comb(q, ell)
        if ell % p == 0:
            num += (-1) ** (ell + ell // p) * (q - 1) * comb(q // p, ell // p)
        label = FQ
    else:
        raise ValidationError(f"unknown domain {domain!r}")
    return SubsetSumCount(ell, 0, label, _exact(num, q, f"N({ell},0,{label}) q={q}"),
                          "closed-form")


def find_subset_with_sum(S: EvaluationSet, ell: int, b: int = 0,
                         max_subsets: int = DEFAULT_MAX_SUBSETS) -> tuple[int, ...] | None:
    """Lexicographically first l-subset (by position in S) summing to b."""
    F = S.field
    n = S.n
    if not 0 <= ell <= n:
        return None
    if n * (ell + 1) * F.q > _REACH_LIMIT:
        n_sub = comb(n, ell)
        if n_sub > max_subsets:
            raise BudgetExceeded("max-subsets", n_sub, max_subsets)
        for sub in combinations(S.elements, ell):
            if F.total(sub) == b:
                return sub
        return None
    # reach[i][r][x]: some r-subset of S[i:] sums to x
    reach = np.zeros((n + 1, ell + 1, F.q), dtype=bool)
    reach[n, 0, 0] = True
    everything = np.arange(F.q, dtype=np.int64)
    for i in range(n - 1, -1, -1):
        back = F.sub_v(everything, S.elements[i])
        reach[i] = reach[i + 1]
        reach[i, 1:] |= reach[i + 1, :-1][:, back]
    if not reach[0, ell, b]:
        return None
    chosen, target = [], b
    for i in range(n):
        if len(chosen) == ell:
            break
        a = S.elements[i]
        rest = F.sub(target, a)
        if reach[i + 1, ell - len(chosen) - 1, rest]:
            chosen.append(a)
            target = rest
    return tuple(chosen)


def is_k_zero_sum_free(S: EvaluationSet, k: int,
                       max_subsets: int = DEFAULT_MAX_SUBSETS) -> bool:
    return find_subset_with_sum(S, k, 0, max_subsets) is None


def zero_sum_witness(S: EvaluationSet, k: int,
                     max_subsets: int = DEFAULT_MAX_SUBSETS) -> tuple[int, ...] | None:
    return find_subset_with_sum(S, k, 0, max_subsets)


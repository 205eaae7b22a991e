"""The length-reducing decomposition of start-small {1243, 2134}-avoiders.

``decompose`` maps a start-small {1243, 2134}-avoider with k >= 1 key
mid-123 entries, last mid-123 entry at position j, to a pair (sigma1,
sigma2): sigma1 a start-small {1243, 2134}-avoider of length j with k - 1
key mid-123 entries, sigma2 a start-small 123-avoider of length n + 1 - j.
``recompose`` inverts it.  ``phi`` iterates ``decompose`` until the first
component is 123-avoiding, turning a start-small avoider of length n with k
key mid-123 entries into a list of k + 1 start-small 123-avoiders whose
lengths sum to n + k; ``phi_inverse`` folds the list back up.

Construction of ``decompose(pi)``, writing pi = tau1, b, tau2 with b the
last mid-123 entry:

- a is the smallest entry of tau1 (the bottom of an ascending triple through
  b with the smallest possible bottom), and c is the unique entry after b
  that exceeds b;
- sigma2 = standardize(a followed by tau2);
- if b is key, sigma1 = standardize(tau1 followed by c);
- otherwise, drop from tau1 the longest terminal run that is decreasing and
  stays below c (its length is r >= 1), shift everything remaining, plus c,
  up by r, append r, r-1, ..., 1, and standardize.

``recompose`` reads all of its parameters straight off the pair: the r-step
staircase at the end of sigma1, the positions of min(mu) and max(sigma2),
and the longest increasing terminal run of sigma1 between them recover where
a and c sat and what value filled the seam; the concatenation below rebuilds
pi up to two placeholder slots which are then overwritten with a and c.
"""

from __future__ import annotations

from dataclasses import dataclass

from .perms import (
    AVOIDED_PAIR,
    PATTERN_123,
    contains,
    contains_123,
    format_perm,
    is_permutation,
    is_start_small,
    key_mid123_entries,
    mid123_entries,
    parse_perm,
    standardize,
)

Perm = tuple[int, ...]


@dataclass(frozen=True)
class DecompositionStep:
    """One application of ``decompose``: the image pair plus its witnesses."""

    sigma1: Perm
    sigma2: Perm
    b_value: int
    a_value: int
    c_value: int
    j: int  # position of the last mid-123 entry in the input
    key_case: bool
    r: int  # number of entries dropped from tau1; 0 exactly in the key case

    def __post_init__(self) -> None:
        if self.key_case != (self.r == 0):
            raise ValueError("key_case must hold exactly when r == 0")

    @property
    def pair(self) -> tuple[Perm, Perm]:
        return (self.sigma1, self.sigma2)


@dataclass(frozen=True)
class InverseParams:
    """Everything ``recompose`` derives from a (sigma1, sigma2) pair."""

    n: int
    j: int
    r: int
    p: int  # j - r, the length of the non-staircase part mu of sigma1
    q: int  # len(sigma2) - 1
    i_pos: int  # position of a in the rebuilt permutation
    k_pos: int  # position of c in the rebuilt permutation
    a_value: int
    c_value: int
    s: int  # longest increasing terminal run of sigma1[i_pos+1 .. p]


def _require(perm: Perm, role: str) -> None:
    if not is_permutation(perm):
        raise ValueError(f"{role} is not a permutation of 1..n: {perm!r}")


def _require_avoider(perm: Perm, role: str) -> None:
    _require(perm, role)
    for q in AVOIDED_PAIR:
        if contains(perm, q):
            raise ValueError(f"{role} contains the forbidden pattern {format_perm(q)}")


def decompose(perm: Perm, check: bool = False) -> DecompositionStep:
    """
    Split a start-small {1243, 2134}-avoider with at least one key mid-123
    entry into the pair (sigma1, sigma2) described in the module docstring.

    With ``check=True`` the step's postconditions (class membership and key
    count of both components) are verified before returning.
    """
    _require_avoider(perm, "input")
    if not is_start_small(perm):
        raise ValueError("input is not start-small: it begins with its largest entry")
    mids = mid123_entries(perm)
    if not mids:
        raise ValueError("input is 123-avoiding: no mid-123 entry to split at")
    n = len(perm)
    j = mids[-1]
    b = perm[j - 1]
    tau1 = perm[: j - 1]
    tau2 = perm[j:]
    a = min(tau1)
    above = [x for x in tau2 if x > b]
    if len(above) != 1:
        raise RuntimeError(
            f"expected exactly one entry above the last mid-123 entry, found {above!r}"
        )
    c = above[0]
    sigma2 = standardize((a,) + tau2)
    key_case = j in key_mid123_entries(perm)
    if key_case:
        r = 0
        sigma1 = standardize(tau1 + (c,))
    else:
        # Longest terminal run of tau1 that is decreasing and stays below c.
        t = len(tau1)
        while t >= 1 and tau1[t - 1] < c and (t == len(tau1) or tau1[t - 1] > tau1[t]):
            t -= 1
        r = len(tau1) - t
        if r < 1:
            raise RuntimeError("non-key case must drop at least one entry")
        shifted = tuple(x + r for x in tau1[:t] + (c,))
        sigma1 = standardize(shifted + tuple(range(r, 0, -1)))
    step = DecompositionStep(
        sigma1=sigma1,
        sigma2=sigma2,
        b_value=b,
        a_value=a,
        c_value=c,
        j=j,
        key_case=key_case,
        r=r,
    )
    if check:
        _check_step(perm, step)
    return step


def _check_step(perm: Perm, step: DecompositionStep) -> None:
    n = len(perm)
    k = len(key_mid123_entries(perm))
    problems = []
    if len(step.sigma1) != step.j:
        problems.append("sigma1 length != j")
    if len(step.sigma2) != n + 1 - step.j:
        problems.append("sigma2 length != n + 1 - j")
    if not is_start_small(step.sigma1):
        problems.append("sigma1 not start-small")
    if not is_start_small(step.sigma2):
        problems.append("sigma2 not start-small")
    if any(contains(step.sigma1, q) for q in AVOIDED_PAIR):
        problems.append("sigma1 not an avoider")
    if contains_123(step.sigma2):
        problems.append("sigma2 contains 123")
    if len(key_mid123_entries(step.sigma1)) != k - 1:
        problems.append("sigma1 key count != k - 1")
    if problems:
        raise RuntimeError(
            f"decompose({format_perm(perm)}) broke its contract: " + "; ".join(problems)
        )


def inverse_params(sigma1: Perm, sigma2: Perm) -> InverseParams:
    """
    Derive the reconstruction parameters for a valid (sigma1, sigma2) pair.

    sigma1 must be a start-small {1243, 2134}-avoider of length >= 2 and
    sigma2 a start-small 123-avoider of length >= 2.
    """
    _require_avoider(sigma1, "sigma1")
    if len(sigma1) < 2:
        raise ValueError("sigma1 must have length >= 2")
    if not is_start_small(sigma1):
        raise ValueError("sigma1 is not start-small")
    _require(sigma2, "sigma2")
    if len(sigma2) < 2:
        raise ValueError("sigma2 must have length >= 2")
    if contains_123(sigma2):
        raise ValueError("sigma2 is not a 123-avoider")
    if not is_start_small(sigma2):
        raise ValueError("sigma2 is not start-small")

    j = len(sigma1)
    n = j + len(sigma2) - 1
    r = 0  # maximal staircase r, r-1, ..., 1 at the end of sigma1
    while r < j and sigma1[j - 1 - r] == r + 1:
        r += 1
    p = j - r
    q = len(sigma2) - 1
    mu = sigma1[:p]
    i_pos = mu.index(min(mu)) + 1
    k_pos = j - 1 + sigma2.index(max(sigma2)) + 1
    a = sigma2[0]
    c = sigma1[p - 1] + q
    segment = sigma1[i_pos:p]  # positions i_pos + 1 .. p, 1-based
    if not segment:
        raise RuntimeError("minimum of mu sits at its last position")
    s = 1
    while s < len(segment) and segment[-s - 1] < segment[-s]:
        s += 1
    return InverseParams(
        n=n, j=j, r=r, p=p, q=q, i_pos=i_pos, k_pos=k_pos, a_value=a, c_value=c, s=s
    )


def recompose(sigma1: Perm, sigma2: Perm) -> Perm:
    """
    Rebuild the unique start-small {1243, 2134}-avoider that ``decompose``
    would split into (sigma1, sigma2).
    """
    pr = inverse_params(sigma1, sigma2)
    p, q, s, j, n, r = pr.p, pr.q, pr.s, pr.j, pr.n, pr.r
    word = (
        [x + q for x in sigma1[: p - s]]
        + [x + q - 1 for x in sigma1[p - s : p - 1]]
        + [n - j + r + s]
        + [x + q for x in sigma1[p:j]]  # empty when r == 0
        + list(sigma2[1 : q + 1])
    )
    # The slots where a and c belong may hold duplicated placeholder values
    # until this overwrite.
    word[pr.i_pos - 1] = pr.a_value
    word[pr.k_pos - 1] = pr.c_value
    result = tuple(word)
    if not is_permutation(result):
        raise RuntimeError(
            f"recompose({format_perm(sigma1)}, {format_perm(sigma2)}) "
            f"produced a non-permutation {result!r}"
        )
    return result


def phi(perm: Perm) -> tuple[Perm, ...]:
    """
    Iterate ``decompose`` on a start-small {1243, 2134}-avoider until the
    surviving first component is 123-avoiding.

    Returns the list (fully reduced 123-avoider first, then the split-off
    second components in reverse order of extraction).  An input with no
    mid-123 entries maps to the singleton list of itself.

    >>> phi((1, 2, 3, 4, 5))
    ((1, 2), (1, 2), (1, 2), (1, 2))
    >>> phi((3, 4, 1, 2))
    ((3, 4, 1, 2),)
    """
    _require_avoider(perm, "input")
    if not is_start_small(perm):
        raise ValueError("input is not start-small: it begins with its largest entry")
    extracted = []
    current = perm
    while mid123_entries(current):
        step = decompose(current)
        extracted.append(step.sigma2)
        current = step.sigma1
    return (current,) + tuple(reversed(extracted))


def phi_inverse(elements: tuple[Perm, ...]) -> Perm:
    """
    Fold a list of start-small 123-avoiders (each of length >= 2) back into
    the start-small {1243, 2134}-avoider that ``phi`` maps to it: the first
    element seeds the accumulator and every later element e replaces it with
    ``recompose(acc, e)``.

    Only the elements after the first feed the 123-avoider side of
    ``recompose``, so the first may be any start-small {1243, 2134}-avoider:
    that folds partially decomposed lists too.  On lists whose first element
    is itself 123-avoiding this is exactly the inverse of ``phi``.

    >>> phi_inverse(((1, 2), (1, 2), (1, 2), (1, 2)))
    (1, 2, 3, 4, 5)
    """
    if not elements:
        raise ValueError("list must be nonempty")
    for idx, element in enumerate(elements, start=1):
        if not is_permutation(element):
            raise ValueError(f"element {idx} is not a permutation: {element!r}")
        if len(element) < 2:
            raise ValueError(f"element {idx} has length < 2")
        if not is_start_small(element):
            raise ValueError(f"element {idx} is not start-small")
        if idx == 1:
            if any(contains(element, q) for q in AVOIDED_PAIR):
                raise ValueError("element 1 contains a forbidden pattern")
        elif contains_123(element):
            raise ValueError(f"element {idx} is not a 123-avoider")
    acc = elements[0]
    for element in elements[1:]:
        acc = recompose(acc, element)
    return acc


def format_perm_list(perms: tuple[Perm, ...]) -> str:
    """Render a list of permutations, elements joined by `` | ``."""
    return " | ".join(format_perm(p) for p in perms)


def parse_perm_list(text: str) -> tuple[Perm, ...]:
    """Parse the `` | ``-joined list format back into a tuple of permutations."""
    return tuple(parse_perm(part) for part in text.split("|"))

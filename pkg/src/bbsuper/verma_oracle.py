"""Brute-force weight-space dimensions from contravariant Gram ranks.

Monomials in the lowering generators span every weight space of a Verma
module, so the rank of the pairing matrix computes the dimension of the
irreducible quotient without knowing a basis, and with the pairings left
symbolic it computes the generic (Verma) dimension instead.  Everything
is driven by the defining relations alone; no multiplicity table enters,
which is what makes the result an independent check.
"""
from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction

from .datum import OddCartanDatum, Weight, height
from .errors import BadGeneratorIndex, Unreachable
from .exactlinalg import Polynomial, rank_bareiss, rank_gauss

ENV_CAP = "BBSUPER_CAP"


@dataclass(frozen=True)
class OracleCaps:
    """Resource ceiling: words no longer than max_word_length, cells no
    deeper than max_height."""

    max_word_length: int = 8
    max_height: int = 6


def caps_from_env(env=None) -> OracleCaps:
    """Default caps, overridden by BBSUPER_CAP as "length,height" or a
    single integer applied to both."""
    if env is None:
        env = os.environ
    raw = env.get(ENV_CAP)
    if raw is None:
        return OracleCaps()
    parts = [p.strip() for p in raw.split(",")]
    try:
        values = [int(p) for p in parts]
    except ValueError:
        raise ValueError(f"cannot parse {ENV_CAP}={raw!r}") from None
    if len(values) == 1:
        return OracleCaps(values[0], values[0])
    if len(values) == 2:
        return OracleCaps(values[0], values[1])
    raise ValueError(f"{ENV_CAP} takes one or two integers, got {raw!r}")


def _resolve_caps(caps) -> OracleCaps:
    return caps if caps is not None else caps_from_env()


@dataclass(frozen=True)
class FMonomial:
    """Ordered product of lowering generators, outermost first."""

    factors: tuple
    degree: tuple
    parity: int

    @classmethod
    def from_factors(cls, datum: OddCartanDatum, factors) -> "FMonomial":
        factors = tuple((int(i), int(l)) for i, l in factors)
        degree = [0] * datum.rank
        parity = 0
        for i, l in factors:
            if i not in range(datum.rank) or l < 1:
                raise BadGeneratorIndex(f"no generator ({i}, {l})")
            if l != 1 and datum.is_real(i):
                raise BadGeneratorIndex(f"real index {i} only carries level 1")
            degree[i] += l
            parity ^= 1 if datum.is_odd(i) else 0
        return cls(factors, tuple(degree), parity)


def _word_degree(rank, factors):
    deg = [0] * rank
    for i, l in factors:
        deg[i] += l
    return tuple(deg)


def _word_parity(datum, factors):
    p = 0
    for i, _ in factors:
        p ^= 1 if datum.is_odd(i) else 0
    return p


def _check_cell(beta, caps):
    h = height(beta)
    if h > caps.max_height:
        raise Unreachable(
            f"height {h} exceeds cap {caps.max_height}; raise {ENV_CAP} to go deeper"
        )
    if h > caps.max_word_length:
        raise Unreachable(
            f"spanning words need length {h}, cap is {caps.max_word_length}; "
            f"raise {ENV_CAP} to go deeper"
        )


def enumerate_f_monomials(datum: OddCartanDatum, beta, caps=None) -> list:
    """Every ordered word of generators whose degrees sum to beta.

    Order matters and no relations are imposed, so the list spans the
    weight space with repetition of dependent vectors.  Deterministic:
    words are generated with the leading letter ascending.
    """
    caps = _resolve_caps(caps)
    beta = tuple(int(b) for b in beta)
    if any(b < 0 for b in beta):
        raise ValueError(f"{beta} is not in the positive cone")
    _check_cell(beta, caps)
    rank = datum.rank
    out = []

    def build(remaining, acc):
        if not any(remaining):
            out.append(tuple(acc))
            return
        for i in range(rank):
            if remaining[i] == 0:
                continue
            top = 1 if datum.is_real(i) else remaining[i]
            for l in range(1, top + 1):
                left = list(remaining)
                left[i] -= l
                acc.append((i, l))
                build(left, acc)
                acc.pop()

    build(list(beta), [])
    return [
        FMonomial(w, _word_degree(rank, w), _word_parity(datum, w)) for w in out
    ]


def _apply_e(datum, i, l, state, pairing):
    """One raising step on a combination of words.

    state maps factor tuples to coefficients; pairing(index, offset)
    must return the evaluation of h_index against the highest weight
    shifted down by the offset root vector.
    """
    odd_i = datum.is_odd(i)
    rank = datum.rank
    out = {}
    for word, coef in state.items():
        prefix_parity = 0
        for a, (j, k) in enumerate(word):
            if j == i and k == l:
                tail = word[a + 1 :]
                value = pairing(i, _word_degree(rank, tail))
                sign = -1 if odd_i and prefix_parity else 1
                contribution = coef * (sign * l) * value
                if contribution:
                    shorter = word[:a] + tail
                    total = out.get(shorter, 0) + contribution
                    if total:
                        out[shorter] = total
                    else:
                        del out[shorter]
            if datum.is_odd(j):
                prefix_parity ^= 1
    return out


def lower_with_e(datum: OddCartanDatum, i, l, word, lam: Weight) -> dict:
    """Expansion of e_{il} applied to (word)v_lam, as a combination of
    shorter monomials."""
    factors = word.factors if isinstance(word, FMonomial) else tuple(word)

    def pairing(idx, offset):
        return datum.pair(idx, lam) - datum.pair_root(idx, offset)

    state = _apply_e(datum, i, l, {factors: Fraction(1)}, pairing)
    return {
        FMonomial.from_factors(datum, w): c for w, c in state.items()
    }


def _pairing_fn(datum, lam):
    if lam is None:
        rank = datum.rank

        def symbolic(idx, offset):
            shift = datum.pair_root(idx, offset)
            return Polynomial(
                rank,
                {
                    tuple(1 if k == idx else 0 for k in range(rank)): 1,
                    (0,) * rank: -int(shift),
                },
            )

        return symbolic, Polynomial.const(rank, 1)

    def numeric(idx, offset):
        return datum.pair(idx, lam) - datum.pair_root(idx, offset)

    return numeric, Fraction(1)


@dataclass(frozen=True)
class GramCell:
    """Pairing matrix of every spanning word against every other at one
    weight-space depth; lam None means symbolic pairings."""

    lam: object
    beta: tuple
    monomials: tuple
    gram: tuple


def _pair_against(datum, letters, state, pairing):
    for i, l in letters:
        if not state:
            break
        state = _apply_e(datum, i, l, state, pairing)
    return state.get((), 0)


def gram_matrix(datum: OddCartanDatum, lam, beta, caps=None) -> GramCell:
    """Pairings of all spanning words at depth beta.

    Entry [a][b] pairs word a against word b by raising with a's letters
    in order, which realizes the reversed word under the transpose
    anti-involution acting on b.
    """
    monomials = enumerate_f_monomials(datum, beta, caps)
    pairing, one = _pairing_fn(datum, lam)
    rows = []
    for ma in monomials:
        row = []
        for mb in monomials:
            entry = _pair_against(datum, ma.factors, {mb.factors: one}, pairing)
            row.append(entry)
        rows.append(tuple(row))
    return GramCell(lam, tuple(beta), tuple(monomials), tuple(rows))


def pair_with_cell(datum, lam, beta, combo, caps=None) -> list:
    """Pairing of each spanning word at depth beta against a fixed
    combination of words, given as a mapping from factor tuples (or
    FMonomials) to coefficients."""
    monomials = enumerate_f_monomials(datum, beta, caps)
    pairing, one = _pairing_fn(datum, lam)
    state0 = {}
    for w, c in combo.items():
        factors = w.factors if isinstance(w, FMonomial) else tuple(w)
        state0[factors] = state0.get(factors, 0) + c * one
    return [
        _pair_against(datum, ma.factors, dict(state0), pairing) for ma in monomials
    ]


def irreducible_dim(datum: OddCartanDatum, lam: Weight, mu: Weight, caps=None) -> int:
    """dim of the irreducible quotient at weight mu, as a Gram rank.

    Weights outside the cone under lam have dimension zero.
    """
    diff = lam - mu
    if any(c != 0 for c in diff.fundamental_part):
        return 0
    if any(c != 0 for c in diff.aux_part):
        return 0
    beta = []
    for c in diff.root_part:
        if c.denominator != 1 or c < 0:
            return 0
        beta.append(int(c))
    cell = gram_matrix(datum, lam, tuple(beta), caps)
    return rank_gauss([list(row) for row in cell.gram])


def generic_dim(datum: OddCartanDatum, beta, caps=None) -> int:
    """Verma dimension at depth beta for generic highest weight, as the
    symbolic Gram rank."""
    cell = gram_matrix(datum, None, beta, caps)
    return rank_bareiss([list(row) for row in cell.gram])


def weight_window(rank: int, height_bound: int):
    """All cone offsets up to the height bound in graded lex order."""
    out = []

    def build(prefix, remaining):
        if len(prefix) == rank:
            out.append(tuple(prefix))
            return
        for c in range(remaining + 1):
            build(prefix + [c], remaining - c)

    for h in range(height_bound + 1):
        layer = []

        def collect(prefix, left):
            if len(prefix) == rank - 1:
                layer.append(tuple(prefix) + (left,))
                return
            for c in range(left + 1):
                collect(prefix + [c], left - c)

        collect([], h)
        out.extend(sorted(layer))
    return out


# relation vectors, for kernel checks


def _ad_f(datum, i, combo):
    # ad f x = f x - (-1)^{|f||x|} x f on word combinations
    fi = (i, 1)
    odd_i = datum.is_odd(i)
    out = {}

    def bump(word, c):
        if c:
            total = out.get(word, 0) + c
            if total:
                out[word] = total
            else:
                del out[word]

    for word, c in combo.items():
        bump((fi,) + word, c)
        sign = -1 if odd_i and _word_parity(datum, word) else 1
        bump(word + (fi,), -sign * c)
    return out


def serre_vector(datum: OddCartanDatum, i: int, j: int, l: int) -> dict:
    """The combination (ad f_i)^(1 - l a_ij) applied to f_{jl}, which the
    defining relations kill whenever i is real and differs from (j, l)."""
    if i not in range(datum.rank) or j not in range(datum.rank) or l < 1:
        raise BadGeneratorIndex(f"no generator pair ({i}; {j}, {l})")
    if not datum.is_real(i):
        raise BadGeneratorIndex(f"index {i} must be real")
    if datum.is_real(j) and l != 1:
        raise BadGeneratorIndex(f"real index {j} only carries level 1")
    if (i, 1) == (j, l):
        raise BadGeneratorIndex("relation requires distinct generators")
    combo = {((j, l),): 1}
    for _ in range(1 - l * datum.a[i][j]):
        combo = _ad_f(datum, i, combo)
    return combo


def orthogonality_vector(datum: OddCartanDatum, first, second) -> dict:
    """The supercommutator [f_first, f_second], which the relations kill
    whenever the two indices pair to zero."""
    (i, l), (j, k) = first, second
    for idx, lvl in (first, second):
        if idx not in range(datum.rank) or lvl < 1:
            raise BadGeneratorIndex(f"no generator ({idx}, {lvl})")
        if datum.is_real(idx) and lvl != 1:
            raise BadGeneratorIndex(f"real index {idx} only carries level 1")
    if datum.a[i][j] != 0:
        raise BadGeneratorIndex(f"indices {i}, {j} are not orthogonal")
    sign = -1 if datum.is_odd(i) and datum.is_odd(j) else 1
    combo = {((i, l), (j, k)): 1}
    other = ((j, k), (i, l))
    combo[other] = combo.get(other, 0) - sign
    return {w: c for w, c in combo.items() if c}

from hypothesis import strategies as st

from ordcomp.ordinal import Exponent, Ordinal, ONE, parse


def _from_terms(pairs):
    return Ordinal((Exponent.pure(Ordinal.of(e)), c) for e, c in sorted(pairs, reverse=True))


# pure ordinals below w^4 with coefficients <= 3
pure_small = st.dictionaries(st.integers(0, 3), st.integers(1, 3), max_size=4).map(
    lambda d: _from_terms(d.items()))
pure_small_nonzero = pure_small.filter(lambda x: not x.is_zero)

_exp_pure = st.sampled_from(["0", "1", "2", "w", "w+1", "w*2", "w^2"]).map(parse)


@st.composite
def exponents(draw):
    kind = draw(st.integers(0, 3))
    tail = draw(_exp_pure)
    if kind == 0:
        return Exponent.pure(tail)
    ke = draw(st.sampled_from(["1", "2", "w", "w+1"]).map(parse))
    return Exponent(0, ke, tail)


@st.composite
def ordinals(draw, allow_zero=True):
    exps = draw(st.lists(exponents(), max_size=4, unique_by=lambda e: e.key))
    exps.sort(key=lambda e: e.key, reverse=True)
    x = Ordinal((e, draw(st.integers(1, 3))) for e in exps)
    if not allow_zero and x.is_zero:
        return ONE
    return x


nonzero_ordinals = ordinals(allow_zero=False)

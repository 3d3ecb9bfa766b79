from hypothesis import strategies as st

from symshift.runvectors import in_M_p_plus


@st.composite
def run_vectors(draw, max_pairs=5, max_entry=6, star=False):
    """Vectors in M (or M* when ``star``)."""
    pairs = draw(st.integers(1, max_pairs))
    body = draw(st.lists(st.integers(1, max_entry), min_size=2 * pairs - 1, max_size=2 * pairs - 1))
    last = draw(st.integers(0, max_entry))
    if star and body[0] == 1:
        body[0] = draw(st.integers(2, max_entry + 1))
    return tuple(body) + (last,)


@st.composite
def admissible(draw, max_p=4, max_pairs=5, max_entry=6):
    """(Q, p) with Q in M_p^+; inadmissible draws are repaired by raising v_1."""
    p = draw(st.integers(0, max_p))
    q = list(draw(run_vectors(max_pairs, max_entry)))
    if not in_M_p_plus(q, p):
        q[0] = max(q[0], p + 1)
    return tuple(q), p


@st.composite
def bit_strings(draw, min_size=1, max_size=16, lead_one=False):
    bits = draw(st.text("01", min_size=min_size, max_size=max_size))
    if lead_one:
        bits = "1" + bits[1:]
    return bits


@st.composite
def register(draw, max_n=12, in_band=False):
    """(bits, RegisterParams); with ``in_band`` the weight lies in [k, k+p+1]."""
    from symshift.simulator import RegisterParams

    n = draw(st.integers(2, max_n))
    k = draw(st.integers(0, n - 1))
    p = draw(st.integers(0, n - 1 - k))
    if in_band:
        w = draw(st.integers(k, min(k + p + 1, n)))
        ones = draw(st.permutations([1] * w + [0] * (n - w)))
        bits = "".join(map(str, ones))
    else:
        bits = draw(st.text("01", min_size=n, max_size=n))
    return bits, RegisterParams(k, p, n)

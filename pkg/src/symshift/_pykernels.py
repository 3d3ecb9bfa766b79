"""Pure-Python simulator kernels.

Same signatures and results as the compiled ``_ckernels`` module.  Bit
sequences are ``bytes`` holding the values 0 and 1 (not ASCII digits).
"""

from array import array

IMPLEMENTATION = "python"


def generate(bits, k, p, length):
    n = len(bits)
    a = bytearray(bits)
    a.extend(bytes(max(0, length - n)))
    hi = k + p
    window = sum(a[1:n])
    for j in range(length - n):
        new = a[j] ^ (k <= window <= hi)
        a[n + j] = new
        window += new - a[j + 1]
    return bytes(a[:length])


def weight_trace(bits, k, p, length):
    """``w(A_r) - k`` for r = 0..length, as an ``array('q')``."""
    n = len(bits)
    a = generate(bits, k, p, length + n)
    out = array("q", bytes(8 * (length + 1)))
    w = sum(a[:n]) - k
    out[0] = w
    for r in range(length):
        w += a[r + n] - a[r]
        out[r + 1] = w
    return out


def failure_table(pattern):
    fail = [0] * len(pattern)
    q = 0
    for i in range(1, len(pattern)):
        while q and pattern[i] != pattern[q]:
            q = fail[q - 1]
        if pattern[i] == pattern[q]:
            q += 1
        fail[i] = q
    return fail


def orbit_period(bits, k, p, budget):
    """Least r >= 1 with theta^r(A) == A, or -1 once ``budget`` steps pass.

    The generated stream a_2 a_3 ... is scanned for the pattern A with KMP;
    the first match ending at a_i gives r = i - n.
    """
    n = len(bits)
    fail = failure_table(bits)
    ring = bytearray(bits)
    hi = k + p
    window = sum(bits[1:])
    q = 0
    for c in bits[1:]:
        while q and c != bits[q]:
            q = fail[q - 1]
        if c == bits[q]:
            q += 1
    # q < n here: a length-n match needs n symbols and only n-1 were fed
    pos = 0
    for r in range(1, budget + 1):
        old = ring[pos]
        new = old ^ (k <= window <= hi)
        ring[pos] = new
        pos += 1
        if pos == n:
            pos = 0
        window += new - ring[pos]
        while q and new != bits[q]:
            q = fail[q - 1]
        if new == bits[q]:
            q += 1
            if q == n:
                return r
    return -1


def cycle_lengths(n, k, p):
    """Per-state cycle length for all 2^n states; a_1 is the high bit."""
    size = 1 << n
    top = n - 1
    mask = (1 << top) - 1
    hi = k + p
    out = array("L", bytes(array("L").itemsize * size))

    def step(s):
        rest = s & mask
        w = rest.bit_count() if hasattr(rest, "bit_count") else bin(rest).count("1")
        return (rest << 1) | ((s >> top) ^ (k <= w <= hi))

    for start in range(size):
        if out[start]:
            continue
        length = 1
        s = step(start)
        while s != start:
            s = step(s)
            length += 1
        out[start] = length
        s = step(start)
        while s != start:
            out[s] = length
            s = step(s)
    return out

"""Independent oracles used by the tests."""

from collections import Counter


# Truncated Magnus embedding: free group -> units of Z<X, Y> / (degree >= 4).
# It is faithful on G / G_4 for a free group G, so two words agree in the
# class-3 quotient iff their truncated images agree.

DEG = 3


def _mul(p, q):
    out = Counter()
    for m1, c1 in p.items():
        for m2, c2 in q.items():
            if len(m1) + len(m2) <= DEG:
                out[m1 + m2] += c1 * c2
    return {k: v for k, v in out.items() if v}


def _letter(ch):
    var = ch.upper()
    if ch.isupper():
        return {(): 1, (var,): 1}
    # (1 + X)^-1 = 1 - X + X^2 - X^3
    return {(): 1, (var,): -1, (var, var): 1, (var, var, var): -1}


def magnus(text):
    out = {(): 1}
    for ch in text:
        out = _mul(out, _letter(ch))
    return out


def normal_form_text(e):
    """A word spelling A^a B^b C^c D^d E^e with C = ABab, D = [C, A], E = [C, B]."""
    a, b, c, d, ee = e

    def pw(s, k):
        inv = "".join(ch.swapcase() for ch in reversed(s))
        return s * k if k >= 0 else inv * (-k)

    C = "ABab"
    Cinv = "BAba"
    D = C + "A" + Cinv + "a"
    E = C + "B" + Cinv + "b"
    return pw("A", a) + pw("B", b) + pw(C, c) + pw(D, d) + pw(E, ee)


def collect_by_rewriting(text):
    """Literal collection of a positive word in A, B.

    Letters A < B < C (with C^-1 allowed), D and E central.  Rules:
    BA -> A B C^-1 D^-1 E^-1, CA -> A C D, CB -> B C E and the C^-1 versions
    C^-1 A -> A C^-1 D^-1, C^-1 B -> B C^-1 E^-1.
    """
    assert set(text) <= {"A", "B"}
    word = list(text)
    d = e = 0
    rank = {"A": 0, "B": 1, "C": 2, "c": 2}
    changed = True
    while changed:
        changed = False
        for i in range(len(word) - 1):
            x, y = word[i], word[i + 1]
            if rank[x] <= rank[y]:
                if {x, y} == {"C", "c"}:
                    del word[i:i + 2]
                    changed = True
                    break
                continue
            if x == "B" and y == "A":
                word[i:i + 2] = ["A", "B", "c"]
                d -= 1
                e -= 1
            elif x == "C" and y == "A":
                word[i:i + 2] = ["A", "C"]
                d += 1
            elif x == "c" and y == "A":
                word[i:i + 2] = ["A", "c"]
                d -= 1
            elif x == "C" and y == "B":
                word[i:i + 2] = ["B", "C"]
                e += 1
            elif x == "c" and y == "B":
                word[i:i + 2] = ["B", "c"]
                e -= 1
            changed = True
            break
    a = word.count("A")
    b = word.count("B")
    c = word.count("C") - word.count("c")
    return (a, b, c, d, e)

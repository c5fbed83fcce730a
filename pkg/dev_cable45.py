"""Background: 2-cable candidates for the reference tangle, full symmetry orbit."""
import sys, time
from tvskein.skein import transfer_Q
from tvskein.diagram import SliceWord, cable_word
from tvskein.laurent import LaurentPoly

Q11 = LaurentPoly.parse("-1 - A^-4"); Q12 = LaurentPoly.parse("-A^-2 + A^6")
Q21 = LaurentPoly.parse("A^-10 - A^-6 + 3*A^-2 + A^2 - A^6 + 2*A^10 - A^14")
Q22 = LaurentPoly.parse("A^-12 - A^-8 + 2 - 2*A^4 + A^12 - A^16")
BASE = ((Q11, Q12), (Q21, Q22))

def variants(m):
    out = []
    for t in (m, ((m[0][0], m[1][0]), (m[0][1], m[1][1]))):            # transpose
        for s in (t, ((t[1][1], t[1][0]), (t[0][1], t[0][0]))):        # basis swap
            out.append(s)
            out.append(tuple(tuple(x.bar() for x in row) for row in s))  # bar
    return out

TARGETS = variants(BASE)

def matches(Q):
    m = ((Q[0, 0], Q[0, 1]), (Q[1, 0], Q[1, 1]))
    for t in TARGETS:
        if all(m[i][j] == t[i][j] for i in range(2) for j in range(2)):
            return True
    return False

def gen_words(depth):
    out = []
    def gen(tokens, w, d):
        if w == 2 and tokens:
            out.append(tuple(tokens))
        if d == 0:
            return
        opts = []
        if w >= 2:
            opts += [("cross+", i) for i in range(1, w)] + [("cross-", i) for i in range(1, w)]
        if w >= 4:
            opts += [("cap", i) for i in range(1, w)]
        if w <= 2:
            opts += [("cup", i) for i in range(1, w + 2)]
        for t in opts:
            nw = w + (2 if t[0] == "cup" else -2 if t[0] == "cap" else 0)
            if nw > 4:
                continue
            gen(tokens + [t], nw, d - 1)
    gen([], 2, depth)
    return out

def main():
    words = gen_words(6)
    print(f"{len(words)} base words", flush=True)
    t0 = time.time()
    for n, toks in enumerate(words):
        if n % 2000 == 0:
            print(f"{n} done {time.time()-t0:.0f}s", flush=True)
        try:
            w0 = SliceWord(2, toks)
        except Exception:
            continue
        for tw in range(-4, 5):
            try:
                w = cable_word(w0, 2, tw)
                if matches(transfer_Q(w)):
                    print("FOUND", toks, tw, flush=True)
                    with open("/root/pkg/found45.txt", "w") as f:
                        f.write(str(w) + "\n" + repr((toks, tw)) + "\n")
                    return
            except Exception:
                continue
    print("cable search exhausted", flush=True)

main()

"""Background: turnback-skeleton search, row-filtered, middles <= 5 tokens."""
import itertools, sys, time
from tvskein.skein import SkeinEngine, matchings
from tvskein.diagram import SliceWord
from tvskein.laurent import LaurentPoly
from tvskein.rings import ZA

Q11 = LaurentPoly.parse("-1 - A^-4"); Q12 = LaurentPoly.parse("-A^-2 + A^6")
Q21 = LaurentPoly.parse("A^-10 - A^-6 + 3*A^-2 + A^2 - A^6 + 2*A^10 - A^14")
Q22 = LaurentPoly.parse("A^-12 - A^-8 + 2 - 2*A^4 + A^12 - A^16")
BASE = ((Q11,Q12),(Q21,Q22))

def variants(m):
    out = []
    for t in (m, ((m[0][0], m[1][0]), (m[0][1], m[1][1]))):
        for s in (t, ((t[1][1], t[1][0]), (t[0][1], t[0][0]))):
            out.append(s)
            out.append(tuple(tuple(x.bar() for x in row) for row in s))
    return out

TARGETS = variants(BASE)
ROW1 = {}
for t in TARGETS:
    key = (tuple(sorted(t[0][0].terms.items())), tuple(sorted(t[0][1].terms.items())))
    ROW1.setdefault(key, []).append(t)

eng = SkeinEngine(ZA)
ms = matchings(2)
IDX = {m: k for k, m in enumerate(ms)}

def q_row(word_tokens, i):
    states = {ms[i]: ZA.one}
    states = eng.run_tokens(states, word_tokens)
    row = [LaurentPoly(), LaurentPoly()]
    for m, c in states.items():
        row[IDX[m]] = c
    return row

def word_pi(tokens):
    frontier = [("L", i) for i in range(4)]
    parent = {}
    def find(x):
        while parent.get(x, x) != x:
            parent[x] = parent.get(parent[x], parent[x]); x = parent[x]
        return x
    def union(x, y):
        parent.setdefault(x, x); parent.setdefault(y, y)
        rx, ry = find(x), find(y)
        if rx == ry: return True
        parent[rx] = ry
        return False
    loops = 0
    nid = [0]
    w = 4
    for kind, pos in tokens:
        p = pos - 1
        if kind == "cup":
            a = ("N", nid[0]); nid[0] += 1
            b = ("N", nid[0]); nid[0] += 1
            union(a, b)
            frontier[p:p] = [a, b]; w += 2
        elif kind == "cap":
            if union(frontier[p], frontier[p+1]): loops += 1
            del frontier[p:p+2]; w -= 2
        else:
            frontier[p], frontier[p+1] = frontier[p+1], frontier[p]
    reps = {}
    for i in range(4):
        reps.setdefault(find(("L", i)), []).append(("L", i))
    for i, x in enumerate(frontier):
        reps.setdefault(find(x), []).append(("R", i))
    pairing = []
    for v in reps.values():
        if len(v) != 2: return None
    return loops == 0

def twist(pos, m):
    if m == 0: return []
    return [("cross+" if m>0 else "cross-", pos)]*abs(m)

def mid_words(maxlen):
    toks = [("cross+",i) for i in (1,2,3)] + [("cross-",i) for i in (1,2,3)]
    out = [[]]
    level = [[]]
    for _ in range(maxlen):
        nxt = []
        for w in level:
            for t in toks:
                nxt.append(w + [t])
        out += nxt
        level = nxt
    return out

def main(maxmid):
    mids = mid_words(maxmid)
    print(f"{len(mids)} middle words", flush=True)
    t0 = time.time(); row1_hits = 0; checked = 0
    for a1 in (1,2,3):
      for m1 in range(-6,7):
        for b1 in (1,2,3):
          print(f"a1={a1} m1={m1} b1={b1}: {checked} checked, row1 {row1_hits}, {time.time()-t0:.0f}s", flush=True)
          for a2 in (1,2,3):
            for m3 in range(-6,7):
              for b2 in (1,2,3):
                head = [("cap",a1)] + twist(1,m1) + [("cup",b1)]
                tail = [("cap",a2)] + twist(1,m3) + [("cup",b2)]
                for mid in mids:
                    toks = head + list(mid) + tail
                    checked += 1
                    if word_pi(toks) is not True: continue
                    try:
                        w = SliceWord(4, tuple(toks))
                    except Exception:
                        continue
                    for t in ([0] + [s for s in w.shift_points() if s]):
                        ww = w if t == 0 else w.cyclic_shift(t)
                        r0 = q_row(ww.tokens, 0)
                        key = (tuple(sorted(r0[0].terms.items())),
                               tuple(sorted(r0[1].terms.items())))
                        if key not in ROW1: continue
                        row1_hits += 1
                        r1 = q_row(ww.tokens, 1)
                        for tgt in ROW1[key]:
                            if r1[0] == tgt[1][0] and r1[1] == tgt[1][1]:
                                print("HIT:", str(ww), flush=True)
                                with open("/root/pkg/found45.txt", "w") as f:
                                    f.write(str(ww) + "\n")
                                return
    print(f"exhausted: {checked} checked, row1 hits {row1_hits}", flush=True)

main(int(sys.argv[1]) if len(sys.argv) > 1 else 5)

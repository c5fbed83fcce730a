"""Background: turnback-skeleton search for the reference tangle."""
import itertools, sys, time
from tvskein.skein import transfer_Q
from tvskein.diagram import SliceWord
from tvskein.laurent import LaurentPoly

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

def matches(Q):
    m = ((Q[0,0],Q[0,1]),(Q[1,0],Q[1,1]))
    return any(all(m[i][j]==t[i][j] for i in range(2) for j in range(2)) for t in TARGETS)

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
            if not 0 <= p <= w: return None, None
            a = ("N", nid[0]); nid[0] += 1
            b = ("N", nid[0]); nid[0] += 1
            union(a, b)
            frontier[p:p] = [a, b]; w += 2
        elif kind == "cap":
            if not 0 <= p < w-1: return None, None
            if union(frontier[p], frontier[p+1]): loops += 1
            del frontier[p:p+2]; w -= 2
        else:
            if not 0 <= p < w-1: return None, None
            frontier[p], frontier[p+1] = frontier[p+1], frontier[p]
    if w != 4: return None, None
    reps = {}
    for i in range(4):
        reps.setdefault(find(("L", i)), []).append(("L", i))
    for i, x in enumerate(frontier):
        reps.setdefault(find(x), []).append(("R", i))
    pairing = []
    for v in reps.values():
        if len(v) != 2: return None, None
        pairing.append(tuple(sorted(v)))
    return frozenset(pairing), loops

TARGET_PIS = {
    (frozenset({(("L",0),("L",3)), (("L",1),("L",2)),
                (("R",0),("R",1)), (("R",2),("R",3))}), 0),
    (frozenset({(("L",0),("L",1)), (("L",2),("L",3)),
                (("R",0),("R",3)), (("R",1),("R",2))}), 0),
}

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

def main():
    mids = mid_words(4)
    print(f"{len(mids)} middle words", flush=True)
    t0 = time.time(); tested = 0; checked = 0
    for a1 in (1,2,3):
      for m1 in range(-6,7):
        for b1 in (1,2,3):
          print(f"a1={a1} m1={m1} b1={b1}: pi-checked {checked}, Q-tested {tested}, {time.time()-t0:.0f}s", flush=True)
          for mid in mids:
            for a2 in (1,2,3):
              for m3 in range(-6,7):
                for b2 in (1,2,3):
                    toks = ([("cap",a1)] + twist(1,m1) + [("cup",b1)] + list(mid)
                            + [("cap",a2)] + twist(1,m3) + [("cup",b2)])
                    checked += 1
                    if word_pi(toks) not in TARGET_PIS: continue
                    try:
                        w = SliceWord(4, tuple(toks))
                    except Exception:
                        continue
                    # test the word and its width-4 cyclic rotations
                    for t in w.shift_points():
                        ww = w.cyclic_shift(t)
                        tested += 1
                        if matches(transfer_Q(ww)):
                            print("HIT:", str(ww), flush=True)
                            with open("/root/pkg/found45.txt", "w") as f:
                                f.write(str(ww) + "\n")
                            return
    print(f"exhausted: pi-checked {checked}, Q-tested {tested}", flush=True)

main()

"""MITM over cup..cap half-words (width 4 -> 6 -> 4) for the reference tangle."""
import sys, time
from itertools import product
from tvskein.skein import SkeinEngine, matchings
from tvskein.diagram import SliceWord
from tvskein.laurent import LaurentPoly, LaurentFrac
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
    # dedup
    seen, uniq = set(), []
    for t in out:
        key = tuple(tuple(sorted(x.terms.items())) for row in t for x in row)
        if key not in seen:
            seen.add(key); uniq.append(t)
    return uniq

TARGETS = variants(BASE)
print(f"{len(TARGETS)} matrix targets", flush=True)

eng = SkeinEngine(ZA)
ms = matchings(2)
IDX = {m: k for k, m in enumerate(ms)}

def qmat(tokens):
    rows = []
    for i in (0, 1):
        states = eng.run_tokens({ms[i]: ZA.one}, tokens)
        row = [LaurentPoly(), LaurentPoly()]
        for m, c in states.items():
            if m not in IDX:
                return None
            row[IDX[m]] = c
        rows.append(row)
    return rows

def half_words(max6, max4):
    toks6 = [("cross+",i) for i in range(1,6)] + [("cross-",i) for i in range(1,6)]
    toks4 = [("cross+",i) for i in range(1,4)] + [("cross-",i) for i in range(1,4)]
    xs = [[]]
    lev = [[]]
    for _ in range(max6):
        lev = [w + [t] for w in lev for t in toks6]
        xs += lev
    ys = [[]]
    lev = [[]]
    for _ in range(max4):
        lev = [w + [t] for w in lev for t in toks4]
        ys += lev
    out = []
    for b in range(1, 6):
        for x in xs:
            for a in range(1, 6):
                for y in ys:
                    out.append([("cup", b)] + x + [("cap", a)] + y)
    return out

def mkey(m):
    return tuple(tuple(sorted(x.terms.items())) for row in m for x in row)

def main(max6, max4):
    t0 = time.time()
    halves = half_words(max6, max4)
    print(f"{len(halves)} half words", flush=True)
    index = {}
    n_valid = 0
    for toks in halves:
        try:
            SliceWord(4, tuple(toks))
        except Exception:
            continue
        q = qmat(toks)
        if q is None:
            continue
        n_valid += 1
        index.setdefault(mkey(q), toks)
    print(f"{n_valid} valid halves, {len(index)} distinct matrices, {time.time()-t0:.0f}s", flush=True)

    def inv2(a):
        det = a[0][0]*a[1][1] - a[0][1]*a[1][0]
        if det.is_zero():
            return None
        dinv = LaurentFrac(1, det)
        return [[LaurentFrac(a[1][1])*dinv, LaurentFrac(-a[0][1])*dinv],
                [LaurentFrac(-a[1][0])*dinv, LaurentFrac(a[0][0])*dinv]]

    checked = 0
    for key1, toks1 in index.items():
        m1 = [[LaurentPoly(dict(key1[0])), LaurentPoly(dict(key1[1]))],
              [LaurentPoly(dict(key1[2])), LaurentPoly(dict(key1[3]))]]
        ai = inv2(m1)
        if ai is None:
            continue
        checked += 1
        if checked % 2000 == 0:
            print(f"checked {checked}, {time.time()-t0:.0f}s", flush=True)
        for t in TARGETS:
            b = [[ai[i][0]*LaurentFrac(t[0][j]) + ai[i][1]*LaurentFrac(t[1][j])
                  for j in range(2)] for i in range(2)]
            ok = True
            bm = [[None, None], [None, None]]
            for i in range(2):
                for j in range(2):
                    try:
                        bm[i][j] = b[i][j].as_laurent()
                    except Exception:
                        ok = False
                        break
                if not ok:
                    break
            if not ok:
                continue
            key2 = mkey(bm)
            if key2 in index:
                toks2 = index[key2]
                word = SliceWord(4, tuple(toks1 + toks2))
                print("HIT:", str(word), flush=True)
                with open("/root/pkg/found45.txt", "w") as f:
                    f.write(str(word) + "\n")
                return
    print(f"exhausted ({checked} invertible halves), {time.time()-t0:.0f}s", flush=True)

main(int(sys.argv[1]) if len(sys.argv) > 1 else 3,
     int(sys.argv[2]) if len(sys.argv) > 2 else 2)

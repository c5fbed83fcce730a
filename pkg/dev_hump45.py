"""Single-hump search (width up to 8): cup..cup..cross*..cap..cap shapes."""
import sys, time
from tvskein.skein import SkeinEngine, matchings
from tvskein.diagram import SliceWord
from tvskein.laurent import LaurentPoly
from tvskein.rings import ZA

Q11 = LaurentPoly.parse("-1 - A^-4"); Q12 = LaurentPoly.parse("-A^-2 + A^6")
Q21 = LaurentPoly.parse("A^-10 - A^-6 + 3*A^-2 + A^2 - A^6 + 2*A^10 - A^14")
Q22 = LaurentPoly.parse("A^-12 - A^-8 + 2 - 2*A^4 + A^12 - A^16")
BASE = ((Q11,Q12),(Q21,Q22))

def variants(m):
    out, seen = [], set()
    for t in (m, ((m[0][0], m[1][0]), (m[0][1], m[1][1]))):
        for s in (t, ((t[1][1], t[1][0]), (t[0][1], t[0][0]))):
            for u in (s, tuple(tuple(x.bar() for x in row) for row in s)):
                key = tuple(tuple(sorted(x.terms.items())) for row in u for x in row)
                if key not in seen:
                    seen.add(key); out.append(u)
    return out

TARGETS = variants(BASE)
TKEYS = set()
for t in TARGETS:
    TKEYS.add(tuple(tuple(sorted(x.terms.items())) for row in t for x in row))

eng = SkeinEngine(ZA)
ms2 = matchings(2)
IDX = {m: k for k, m in enumerate(ms2)}

def skey(rows):
    out = []
    for st in rows:
        out.append(tuple(sorted((m, tuple(sorted(c.terms.items())))
                                for m, c in st.items())))
    return tuple(out)

def apply_tok(rows, tok):
    kind, pos = tok
    p = pos - 1
    if kind == "cup":
        return [eng.cup(st, p) for st in rows]
    if kind == "cap":
        return [eng.cap(st, p) for st in rows]
    return [eng.cross(st, p, kind == "cross+") for st in rows]

def final_key(rows):
    mat = []
    for st in rows:
        row = [LaurentPoly(), LaurentPoly()]
        for m, c in st.items():
            if m not in IDX:
                return None
            row[IDX[m]] = c
        mat.append(row)
    return tuple(tuple(sorted(x.terms.items())) for row in mat for x in row)

def main(w6a, w8, w6b, w4b):
    t0 = time.time()
    # seeds: cup b1 [<=w6a crossings at width 6] cup b2, deduped
    seeds = {}
    start = [{ms2[i]: ZA.one} for i in (0, 1)]
    for b1 in range(1, 6):
        lev = {skey(r := apply_tok(start, ("cup", b1))): (r, [("cup", b1)])}
        seen = set(lev)
        for d in range(w6a + 1):
            for k, (rows, toks) in lev.items():
                for b2 in range(1, 8):
                    r2 = apply_tok(rows, ("cup", b2))
                    k2 = skey(r2)
                    if k2 not in seeds:
                        seeds[k2] = (r2, toks + [("cup", b2)])
            if d == w6a:
                break
            nxt = {}
            for k, (rows, toks) in lev.items():
                for tok in [("cross+", i) for i in range(1, 6)] + \
                           [("cross-", i) for i in range(1, 6)]:
                    r2 = apply_tok(rows, tok)
                    k2 = skey(r2)
                    if k2 in seen:
                        continue
                    seen.add(k2)
                    nxt[k2] = (r2, toks + [tok])
            lev = nxt
    print(f"{len(seeds)} seeds, {time.time()-t0:.0f}s", flush=True)
    # grow width-8 crossing region with dedup
    lev = dict(seeds)
    seen = set(lev)
    all8 = dict(lev)
    for d in range(w8):
        nxt = {}
        for k, (rows, toks) in lev.items():
            for tok in [("cross+", i) for i in range(1, 8)] + \
                       [("cross-", i) for i in range(1, 8)]:
                r2 = apply_tok(rows, tok)
                k2 = skey(r2)
                if k2 in seen:
                    continue
                seen.add(k2)
                nxt[k2] = (r2, toks + [tok])
        all8.update(nxt)
        lev = nxt
        print(f"depth {d+1}: {len(all8)} width-8 states, {time.time()-t0:.0f}s",
              flush=True)
        if time.time() - t0 > 3600:
            break
    # close: cap c1 [<=w6b crossings] cap c2 [<=w4b crossings]; test Q
    tested = 0
    for k, (rows, toks) in all8.items():
        for c1 in range(1, 8):
            r1 = apply_tok(rows, ("cap", c1))
            lev2 = {skey(r1): (r1, toks + [("cap", c1)])}
            seen2 = set(lev2)
            for d2 in range(w6b + 1):
                for kk, (rr, tt) in list(lev2.items()):
                    for c2 in range(1, 6):
                        r3 = apply_tok(rr, ("cap", c2))
                        lev3 = {skey(r3): (r3, tt + [("cap", c2)])}
                        seen3 = set(lev3)
                        for d3 in range(w4b + 1):
                            for k3, (r4, t4) in list(lev3.items()):
                                fk = final_key(r4)
                                tested += 1
                                if fk is not None and fk in TKEYS:
                                    word = SliceWord(4, tuple(t4))
                                    print("HIT:", str(word), flush=True)
                                    with open("/root/pkg/found45.txt", "w") as f:
                                        f.write(str(word) + "\n")
                                    return
                            if d3 == w4b:
                                break
                            nxt3 = {}
                            for k3, (r4, t4) in lev3.items():
                                for tok in [("cross+", i) for i in (1, 2, 3)] + \
                                           [("cross-", i) for i in (1, 2, 3)]:
                                    r5 = apply_tok(r4, tok)
                                    k5 = skey(r5)
                                    if k5 in seen3:
                                        continue
                                    seen3.add(k5)
                                    nxt3[k5] = (r5, t4 + [tok])
                            lev3 = nxt3
                if d2 == w6b:
                    break
                nxt2 = {}
                for kk, (rr, tt) in lev2.items():
                    for tok in [("cross+", i) for i in range(1, 6)] + \
                               [("cross-", i) for i in range(1, 6)]:
                        r3 = apply_tok(rr, tok)
                        k3 = skey(r3)
                        if k3 in seen2:
                            continue
                        seen2.add(k3)
                        nxt2[k3] = (r3, tt + [tok])
                lev2 = nxt2
    print(f"exhausted, tested {tested}, {time.time()-t0:.0f}s", flush=True)

main(*(int(x) for x in (sys.argv[1:] + ["2", "4", "2", "2"][len(sys.argv) - 1:])))
